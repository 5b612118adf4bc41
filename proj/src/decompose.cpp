#include "modrep/decompose.hpp"

#include <algorithm>
#include <array>

namespace modrep {

namespace {

std::uint32_t twist_mod(std::uint64_t k, std::uint32_t p) {
  return static_cast<std::uint32_t>(k % (p - 1));
}

}  // namespace

DecompOutcome clebsch_gordan(std::uint32_t r1, std::uint32_t r2,
                             std::uint64_t k, std::uint32_t p) {
  if (r2 > r1) std::swap(r1, r2);
  DecompOutcome out{{true, ""}, DecompMultiset(p)};
  if (r1 + r2 >= p) {
    out.verdict = {false, "requires r1 + r2 < p, got r1 + r2 = " +
                              std::to_string(r1 + r2)};
    return out;
  }
  for (std::uint32_t i = 0; i <= r2; ++i)
    out.factors.add({r1 + r2 - 2 * i, twist_mod(k + i, p)}, 1);
  return out;
}

DecompOutcome triple_decompose(std::uint32_t r1, std::uint32_t r2,
                               std::uint32_t r3, std::uint64_t k,
                               std::uint32_t p) {
  std::array<std::uint32_t, 3> r{r1, r2, r3};
  std::sort(r.begin(), r.end(), std::greater<>());
  r1 = r[0];
  r2 = r[1];
  r3 = r[2];
  DecompOutcome out{{true, ""}, DecompMultiset(p)};
  if (r1 + r2 + r3 >= p) {
    out.verdict = {false, "requires r1 + r2 + r3 < p, got r1 + r2 + r3 = " +
                              std::to_string(r1 + r2 + r3)};
    return out;
  }
  const std::uint32_t R = r1 + r2 + r3;
  const std::uint32_t top = r1 >= r2 + r3 ? r2 + r3 : R / 2;
  for (std::uint32_t i = 0; i <= top; ++i) {
    std::uint64_t mult;
    if (i <= r3)
      mult = i + 1;
    else if (i <= r2)
      mult = r3 + 1;
    else if (i <= std::min(r1, r2 + r3))
      mult = r3 + r2 + 1 - i;
    else
      mult = R - 2 * i + 1;  // only reachable when r1 < r2 + r3
    out.factors.add({R - 2 * i, twist_mod(k + i, p)}, mult);
  }
  return out;
}

DecompMultiset sl2_reduce(const DecompMultiset& m) {
  DecompMultiset out(m.p());
  for (const auto& [label, mult] : m.entries()) out.add({label.r, 0}, mult);
  return out;
}

DistinctionVerdict is_gp_distinguished(std::uint32_t r1, std::uint32_t r2,
                                       std::uint64_t k, std::uint32_t p) {
  DistinctionVerdict out;
  if (r1 >= p || r2 >= p) {
    out.verdict = {false, "requires 0 <= r1, r2 <= p - 1"};
    return out;
  }
  if (r1 + r2 >= p) {
    out.verdict = {false, "requires r1 + r2 < p, got r1 + r2 = " +
                              std::to_string(r1 + r2)};
    return out;
  }
  out.verdict = {true, ""};
  out.distinguished = (r1 == r2) && ((r2 + k) % (p - 1) == 0);
  return out;
}

IrrLabel distinguishing_character(std::uint32_t r, std::uint64_t k,
                                  std::uint32_t p) {
  return IrrLabel{0, twist_mod(k + r, p)};
}

}  // namespace modrep
