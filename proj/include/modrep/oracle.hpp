#pragma once

// Module-structure oracle.  Everything here is deterministic linear algebra
// over F_p and independent of the closed-form decomposition rules, so the
// two routes can be played against each other.
//
// Central primitive: Hom_G(A, B) is the solution space of the linear system
// rho_A(g) T = T rho_B(g) over the generators, with T mapping row vectors by
// v -> v T (so T is dim A x dim B).  The socle of M is the sum of the images
// of Hom(S, M) over the full list of irreducibles S, with multiplicity
// dim Hom(S, M); iterating on quotients gives the socle series and hence
// composition factors.

#include <cstdint>
#include <optional>
#include <vector>

#include "modrep/labels.hpp"
#include "modrep/matrix.hpp"
#include "modrep/rep.hpp"
#include "modrep/report.hpp"

namespace modrep {

struct HomBasis {
  std::vector<MatrixFF> basis;  // echelon-canonical when flattened row-major
  std::size_t dim() const { return basis.size(); }
};

HomBasis hom_space(const Representation& a, const Representation& b);

/// Irreducible labels for the group: (r, k) with r < p, k < p - 1 for GL2,
/// k = 0 only for SL2; in lexicographic order.
std::vector<IrrLabel> irreducible_labels(const GroupSpec& group);

struct SocleResult {
  Subspace space;
  DecompMultiset factors;
};

SocleResult socle(const Representation& rep);

/// Ascending chain 0 = S_0 < S_1 < ... < S_t = module (subspaces in the
/// original coordinates) together with the factor multiset of each layer
/// S_i / S_{i-1}.
struct SocleSeries {
  std::vector<Subspace> chain;
  std::vector<DecompMultiset> layers;
};

SocleSeries socle_series(const Representation& rep);

DecompMultiset composition_factors(const Representation& rep);

bool is_semisimple(const Representation& rep);

enum class IsoStatus { Isomorphic, NotIsomorphic, Undetermined };

std::string to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status = IsoStatus::Undetermined;
  std::optional<MatrixFF> witness;
  std::string detail;
};

/// Searches Hom(A, B) for an invertible element.  Exhausts the whole space
/// when dim Hom <= 3; otherwise samples 10 p^2 combinations from a generator
/// seeded as given, and reports Undetermined rather than a negative when the
/// budget runs out.
IsoResult is_isomorphic(const Representation& a, const Representation& b,
                        std::uint64_t seed = 42);

struct FiltrationReport {
  std::vector<CheckResult> checks;
  SocleSeries series;
  bool all_pass() const;
};

/// The p = 2 tensor square V_1 ⊗ V_1: verifies the socle is the span of
/// x⊗y + y⊗x, x⊗x + x⊗y + y⊗x, y⊗y + x⊗y + y⊗x (dimension chain 0, 3, 4,
/// layers {triv, std} then {triv}), and that the inclusion of the socle
/// admits no equivariant splitting, i.e. the module is not semisimple.
FiltrationReport verify_filtration_nonsplit_p2();

/// For M = V_r ⊗ V_r ⊗ det^k over GL2(F_p): checks that the character
/// det^{r+k} occurs in both socle and cosocle, via dim Hom(det^{r+k}, M)
/// and dim Hom(M, det^{r+k}), and that the explicit expansion
/// sum_i (-1)^i C(r,i) x^{r-i}y^i ⊗ x^i y^{r-i} of (x⊗y - y⊗x)^r is the
/// matrix of an intertwiner M -> det^{r+k}.
FiltrationReport verify_det_power_socle_cosocle(std::uint32_t r,
                                                std::uint64_t k,
                                                std::uint32_t p);

}  // namespace modrep
