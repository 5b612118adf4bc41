#pragma once

// Construction of the standard mod-p modules for GL2/SL2(F_p).
//
// A Representation stores one matrix per group generator; the assignment
// g -> image(g) is a matrix homomorphism, and the module is the space of row
// vectors with g acting as v -> v * image(g).  Sym^r carries the monomial
// basis x^{r-j} y^j (j ascending), on which [[a,b],[c,d]] substitutes
// x -> a x + c y, y -> b x + d y.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/group.hpp"
#include "modrep/labels.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

struct Representation {
  GroupSpec group;
  std::size_t dim = 0;
  std::vector<MatrixFF> images;  // aligned with group.generators()
  std::vector<std::string> basis;
  std::string provenance;

  explicit Representation(GroupSpec g) : group(std::move(g)) {}

  /// Image of an arbitrary group element, evaluated through the generator
  /// factorization of g.
  MatrixFF image_of(const MatrixFF& g) const;
};

/// Sym^r of the natural module, dimension r + 1.  Any r >= 0 is allowed;
/// the result is irreducible only for r < p.
Representation sym_rep(std::uint32_t r, const GroupSpec& group);

/// Twist by det^k; k is reduced mod p - 1 (det lands in F_p^*), the raw k is
/// kept in the provenance.  k = 0 returns the input unchanged.
Representation det_twist(const Representation& rep, std::uint64_t k);

Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);

/// Contragredient: image(g) = (image(g)^{-1})^T.
Representation dual(const Representation& rep);

/// Symmetric / alternating square, realized as submodules of rep (x) rep
/// spanned by e_i⊗e_j + e_j⊗e_i (plus e_i⊗e_i) resp. e_i⊗e_j - e_j⊗e_i.
/// This reading is correct in every characteristic, including p = 2.
Representation sym_square(const Representation& rep);
Representation alt_square(const Representation& rep);

/// The irreducible V_r(k) = Sym^r ⊗ det^k; validates the label range.
Representation irr_rep(IrrLabel label, const GroupSpec& group);

Representation trivial_rep(const GroupSpec& group);

/// A module over GL2(F_q), q = p^n, pulled back to the subgroup of
/// F_p-points: twisted Frobenius factors collapse, leaving the plain tensor
/// product of the Sym^{r_i} twisted by det^k.
struct RestrictionRequest {
  std::uint32_t n = 1;                // extension degree
  std::vector<std::uint32_t> r;       // one exponent per Frobenius twist
  std::uint64_t k = 0;                // determinant twist, 0 <= k <= q - 2
};

Representation restrict_rep(const RestrictionRequest& req,
                            const GroupSpec& group);

/// The surjective intertwiner V_r ⊗ V_1 -> V_{r+1} (multiplication, unique
/// up to scalar), as a source dim x target dim matrix in the row convention.
/// In these coordinates it carries polarization weights:
/// (x^{r-j}y^j) ⊗ x -> (r+1-j) x^{r+1-j}y^j and
/// (x^{r-j}y^j) ⊗ y -> (j+1) x^{r-j}y^{j+1}.
/// Requires 0 <= r <= p - 2 (the weights collapse at r = p - 1).
MatrixFF p1_map(std::uint32_t r, const GroupSpec& group);

/// The surjective intertwiner V_r ⊗ V_1 -> V_{r-1}(det) (differentiation):
/// f ⊗ x -> df/dy and f ⊗ y -> -df/dx with the derivatives taken as plain
/// coefficient shifts (x^{r-j}y^j -> x^{r-j}y^{j-1} resp. x^{r-j-1}y^j).
/// Requires 1 <= r <= p - 2.
MatrixFF p2_map(std::uint32_t r, const GroupSpec& group);

}  // namespace modrep
