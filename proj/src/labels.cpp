#include "modrep/labels.hpp"

#include <stdexcept>
#include <vector>

namespace modrep {

std::string IrrLabel::to_string() const {
  std::string out = "V" + std::to_string(r);
  if (k != 0) out += "(" + std::to_string(k) + ")";
  return out;
}

void DecompMultiset::add(IrrLabel label, std::uint64_t mult) {
  if (mult == 0) return;
  if (label.r >= p_)
    throw std::invalid_argument("label r out of range for p=" +
                                std::to_string(p_));
  if (label.k >= p_ - 1)
    throw std::invalid_argument("label twist out of range for p=" +
                                std::to_string(p_));
  entries_[label] += mult;
}

std::uint64_t DecompMultiset::multiplicity(IrrLabel label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t DecompMultiset::total_dim() const {
  std::uint64_t d = 0;
  for (const auto& [label, mult] : entries_) d += mult * (label.r + 1);
  return d;
}

std::uint64_t DecompMultiset::total_count() const {
  std::uint64_t c = 0;
  for (const auto& [label, mult] : entries_) c += mult;
  return c;
}

std::string DecompMultiset::to_string() const {
  if (entries_.empty()) return "0";
  // Descending r reads naturally for tensor decompositions.
  std::vector<std::pair<IrrLabel, std::uint64_t>> items(entries_.begin(),
                                                        entries_.end());
  std::string out;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += std::to_string(it->second) + "*";
    out += it->first.to_string();
  }
  return out;
}

}  // namespace modrep
