#pragma once

// Names for the irreducible mod-p representations of GL2(F_p):
// V_r(k) = Sym^r(F_p^2) twisted by det^k, with 0 <= r < p and
// 0 <= k < p - 1.  For SL2(F_p) the twist is invisible and labels carry
// k = 0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace modrep {

struct IrrLabel {
  std::uint32_t r = 0;
  std::uint32_t k = 0;

  auto operator<=>(const IrrLabel&) const = default;

  /// "V3", "V1(2)" -- twist suppressed when zero.
  std::string to_string() const;
};

/// A finite multiset of irreducible labels with positive multiplicities,
/// tagged with the prime so label ranges can be validated.
class DecompMultiset {
 public:
  explicit DecompMultiset(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }

  /// Adds `mult` copies of the label; validates 0 <= r < p, 0 <= k < p-1.
  void add(IrrLabel label, std::uint64_t mult = 1);

  std::uint64_t multiplicity(IrrLabel label) const;
  const std::map<IrrLabel, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Sum of mult * dim over entries, where dim V_r(k) = r + 1.
  std::uint64_t total_dim() const;

  /// Number of factors counted with multiplicity.
  std::uint64_t total_count() const;

  friend bool operator==(const DecompMultiset& a, const DecompMultiset& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const DecompMultiset& a, const DecompMultiset& b) {
    return !(a == b);
  }

  /// "V4 + 2*V2(1) + V0(2)" in descending r order; "0" when empty.
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::map<IrrLabel, std::uint64_t> entries_;
};

}  // namespace modrep
