#pragma once

// Brauer characters taken naively mod p: the value of a module at a
// conjugacy class is the trace of the class representative's image, an
// element of F_p.  Values are stored in F_{p^2} because the closed-form
// evaluation at a nonsplit class goes through the eigenvalues in the
// quadratic extension; traces of actual matrices always land in the
// embedded prime field.

#include <cstdint>
#include <optional>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/group.hpp"
#include "modrep/labels.hpp"
#include "modrep/rep.hpp"

namespace modrep {

struct CharVector {
  std::uint32_t p = 0;
  FieldCtx ext;             // F_{p^2}
  std::vector<FieldElement> values;  // aligned with conjugacy_classes(p)

  CharVector(std::uint32_t p_, FieldCtx ext_)
      : p(p_), ext(std::move(ext_)) {}
};

/// Character of a module by direct traces; the module must live over GL2.
CharVector char_of(const Representation& rep);

/// Closed-form character of V_r(k) at one class: with eigenvalues (a, d)
/// of the representative (in F_p for central/Jordan/split classes, Galois
/// conjugates in F_{p^2} for nonsplit ones), the value is
/// (sum_{i=0..r} a^{r-i} d^i) * (a d)^k.
FieldElement char_formula_vrk(std::uint32_t r, std::uint64_t k,
                              const ConjClassRep& cls, const FieldCtx& ext);

/// The closed-form character vector of V_r(k) over all classes of GL2(F_p).
CharVector char_vrk(std::uint32_t r, std::uint64_t k, std::uint32_t p);

bool char_equal(const CharVector& a, const CharVector& b);

CharVector char_add(const CharVector& a, const CharVector& b);

/// Character of a formal sum of irreducibles, evaluated by the closed form.
CharVector char_of_multiset(const DecompMultiset& factors);

/// Composition-factor multiplicities of two modules with equal Brauer-type
/// characters can only differ by multiples of p; this checks that congruence
/// for two explicit factor multisets.
bool brauer_congruence_check(const DecompMultiset& a, const DecompMultiset& b);

/// If the candidates are pairwise distinct, their character sum matches
/// char_of(rep) and the dimensions agree, the semisimplification of rep is
/// exactly the candidate list (each with multiplicity one); otherwise
/// nothing can be concluded and nullopt is returned.
std::optional<DecompMultiset> semisimplification_by_character(
    const Representation& rep, const std::vector<IrrLabel>& candidates);

}  // namespace modrep
