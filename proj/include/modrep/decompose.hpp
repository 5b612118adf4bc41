#pragma once

// Closed-form decompositions of tensor products of the Sym^r modules in the
// low-degree range where the mod-p answer matches classical Clebsch-Gordan
// combinatorics, plus the distinction predicates built on them.
//
// Every function that has a validity hypothesis returns a verdict naming
// the violated inequality instead of guessing outside it.

#include <cstdint>
#include <string>

#include "modrep/labels.hpp"

namespace modrep {

struct ApplicabilityVerdict {
  bool in_range = false;
  std::string reason;  // empty when in range
};

struct DecompOutcome {
  ApplicabilityVerdict verdict;
  DecompMultiset factors;  // meaningful only when verdict.in_range
};

/// V_{r1} ⊗ V_{r2} ⊗ det^k for 0 <= r2 <= r1 < p - r2 decomposes as
/// sum over i = 0..r2 of V_{r1+r2-2i}(i + k).  Twists are reduced mod p-1;
/// arguments may come in either order.
DecompOutcome clebsch_gordan(std::uint32_t r1, std::uint32_t r2,
                             std::uint64_t k, std::uint32_t p);

/// Triple product V_{r1} ⊗ V_{r2} ⊗ V_{r3} ⊗ det^k for sorted exponents
/// r1 >= r2 >= r3 with r1 < p - r2 - r3.  The factor V_{r1+r2+r3-2i}(i + k)
/// appears with multiplicity
///   i+1                     for 0 <= i <= r3,
///   r3+1                    for r3 <  i <= r2,
///   r3 + r2 + 1 - i         for r2 <  i <= min(r1, r2+r3),
///   r1+r2+r3 - 2i + 1       for r1 <  i <= floor((r1+r2+r3)/2)
///                           (only when r1 < r2 + r3).
/// Arguments may come in any order.
DecompOutcome triple_decompose(std::uint32_t r1, std::uint32_t r2,
                               std::uint32_t r3, std::uint64_t k,
                               std::uint32_t p);

/// Forgets determinant twists, merging labels that collide.
DecompMultiset sl2_reduce(const DecompMultiset& m);

struct DistinctionVerdict {
  ApplicabilityVerdict verdict;
  bool distinguished = false;  // meaningful only when in range
};

/// Whether V_{r1} ⊗ V_{r2} ⊗ det^k (a module over GL2(F_{p^2}) restricted to
/// the F_p-points) has a nonzero GL2(F_p)-invariant functional.  In the range
/// r1 + r2 < p this happens exactly when r1 = r2 and r2 + k = 0 mod p-1.
DistinctionVerdict is_gp_distinguished(std::uint32_t r1, std::uint32_t r2,
                                       std::uint64_t k, std::uint32_t p);

/// The character chi with respect to which V_(r,r)(k) is chi-distinguished:
/// det^{r+k}, returned as the one-dimensional label V_0((r+k) mod (p-1)).
IrrLabel distinguishing_character(std::uint32_t r, std::uint64_t k,
                                  std::uint32_t p);

}  // namespace modrep
