#include "modrep/character.hpp"

#include <set>
#include <stdexcept>

namespace modrep {

CharVector char_of(const Representation& rep) {
  if (rep.group.kind() != GroupKind::GL2)
    throw std::invalid_argument(
        "characters are tabulated against GL2 conjugacy classes");
  const std::uint32_t p = rep.group.p();
  CharVector out(p, FieldCtx::make(p, 2));
  for (const ConjClassRep& cls : conjugacy_classes(p)) {
    FieldElement tr = rep.image_of(cls.representative).trace();
    out.values.push_back(embed(tr, out.ext));
  }
  return out;
}

FieldElement char_formula_vrk(std::uint32_t r, std::uint64_t k,
                              const ConjClassRep& cls, const FieldCtx& ext) {
  const FieldCtx prime = cls.representative.ctx();
  FieldElement a = ext.zero(), d = ext.zero();
  switch (cls.type) {
    case ClassType::Central:
    case ClassType::Jordan:
      // Triangular with both eigenvalues equal to the diagonal parameter.
      a = ext.from_int(cls.params[0]);
      d = a;
      break;
    case ClassType::Split:
      a = ext.from_int(cls.params[0]);
      d = ext.from_int(cls.params[1]);
      break;
    case ClassType::Nonsplit: {
      auto [alpha, conj] = quadratic_roots(prime.from_int(cls.params[0]),
                                           prime.from_int(cls.params[1]), ext);
      a = alpha;
      d = conj;
      break;
    }
  }
  FieldElement s = ext.zero();
  for (std::uint32_t i = 0; i <= r; ++i) s = s + a.pow(r - i) * d.pow(i);
  FieldElement v = s * (a * d).pow(k);
  // Galois symmetry guarantees the value is rational over F_p.
  if (v.coeff(1) != 0)
    throw std::runtime_error("character value escaped the prime field");
  return v;
}

CharVector char_vrk(std::uint32_t r, std::uint64_t k, std::uint32_t p) {
  CharVector out(p, FieldCtx::make(p, 2));
  for (const ConjClassRep& cls : conjugacy_classes(p))
    out.values.push_back(char_formula_vrk(r, k, cls, out.ext));
  return out;
}

bool char_equal(const CharVector& a, const CharVector& b) {
  if (a.p != b.p)
    throw std::invalid_argument("characters over different primes");
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("character vectors of different lengths");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return false;
  return true;
}

CharVector char_add(const CharVector& a, const CharVector& b) {
  if (a.p != b.p || a.values.size() != b.values.size())
    throw std::invalid_argument("character sum shape mismatch");
  CharVector out(a.p, a.ext);
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] + b.values[i]);
  return out;
}

CharVector char_of_multiset(const DecompMultiset& factors) {
  const std::uint32_t p = factors.p();
  CharVector out(p, FieldCtx::make(p, 2));
  const auto classes = conjugacy_classes(p);
  for (const ConjClassRep& cls : classes) {
    FieldElement v = out.ext.zero();
    for (const auto& [label, mult] : factors.entries()) {
      FieldElement term = char_formula_vrk(label.r, label.k, cls, out.ext);
      v = v + term * out.ext.from_int(static_cast<std::int64_t>(mult % p));
    }
    out.values.push_back(v);
  }
  return out;
}

bool brauer_congruence_check(const DecompMultiset& a,
                             const DecompMultiset& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("multisets over different primes");
  const std::uint64_t p = a.p();
  std::set<IrrLabel> labels;
  for (const auto& [label, mult] : a.entries()) labels.insert(label);
  for (const auto& [label, mult] : b.entries()) labels.insert(label);
  for (const IrrLabel& label : labels) {
    std::uint64_t ma = a.multiplicity(label) % p;
    std::uint64_t mb = b.multiplicity(label) % p;
    if (ma != mb) return false;
  }
  return true;
}

std::optional<DecompMultiset> semisimplification_by_character(
    const Representation& rep, const std::vector<IrrLabel>& candidates) {
  std::set<IrrLabel> distinct(candidates.begin(), candidates.end());
  if (distinct.size() != candidates.size())
    throw std::invalid_argument("candidate labels must be pairwise distinct");

  DecompMultiset m(rep.group.p());
  std::uint64_t dim_sum = 0;
  for (const IrrLabel& label : candidates) {
    m.add(label, 1);
    dim_sum += label.r + 1;
  }
  if (dim_sum != rep.dim) return std::nullopt;
  if (!char_equal(char_of(rep), char_of_multiset(m))) return std::nullopt;
  return m;
}

}  // namespace modrep
