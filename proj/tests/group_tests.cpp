#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/group.hpp"
#include "modrep/matrix.hpp"

using namespace modrep;

namespace {

// Independent count of 2x2 matrices over F_p with the required determinant,
// by sweeping all p^4 candidates.
std::uint64_t brute_force_order(std::uint32_t p, GroupKind kind) {
  FieldCtx f = FieldCtx::make(p);
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          FieldElement dt = det(MatrixFF::from_ints(
              f, {{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)},
                  {static_cast<std::int64_t>(c), static_cast<std::int64_t>(d)}}));
          if (kind == GroupKind::GL2 ? !dt.is_zero() : dt == f.one()) ++n;
        }
  return n;
}

MatrixFF evaluate_word(
    const GroupSpec& g,
    const std::vector<std::pair<std::size_t, std::uint32_t>>& word) {
  MatrixFF acc = MatrixFF::identity(g.field(), 2);
  for (const auto& [idx, e] : word) acc = acc * g.generators()[idx].pow(e);
  return acc;
}

std::string encode(const MatrixFF& m) { return m.to_string(); }

}  // namespace

TEST_CASE("group orders match exhaustive determinant counting") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (GroupKind kind : {GroupKind::GL2, GroupKind::SL2}) {
      GroupSpec g = GroupSpec::make(p, kind);
      CHECK(g.order() == brute_force_order(p, kind));
      CHECK(g.elements().size() == g.order());
      std::set<std::string> distinct;
      for (const auto& e : g.elements()) distinct.insert(encode(e));
      CHECK(distinct.size() == g.order());
    }
  }
  // Orders for p = 7 against the closed-form count.
  CHECK(GroupSpec::make(7, GroupKind::GL2).order() == 48u * 42u);
  CHECK(GroupSpec::make(7, GroupKind::SL2).order() == 7u * 48u);
}

TEST_CASE("least primitive roots") {
  CHECK(GroupSpec::make(2, GroupKind::GL2).primitive_root() == 1);
  CHECK(GroupSpec::make(3, GroupKind::GL2).primitive_root() == 2);
  CHECK(GroupSpec::make(5, GroupKind::GL2).primitive_root() == 2);
  CHECK(GroupSpec::make(7, GroupKind::GL2).primitive_root() == 3);
  CHECK(GroupSpec::make(11, GroupKind::GL2).primitive_root() == 2);
  CHECK(GroupSpec::make(13, GroupKind::GL2).primitive_root() == 2);
}

TEST_CASE("membership distinguishes GL2, SL2 and singular matrices") {
  GroupSpec gl = GroupSpec::make(5, GroupKind::GL2);
  GroupSpec sl = GroupSpec::make(5, GroupKind::SL2);
  FieldCtx f = gl.field();
  MatrixFF det2 = MatrixFF::from_ints(f, {{2, 0}, {0, 1}});
  MatrixFF det1 = MatrixFF::from_ints(f, {{2, 0}, {0, 3}});
  MatrixFF sing = MatrixFF::from_ints(f, {{1, 2}, {2, 4}});
  CHECK(gl.is_member(det2));
  CHECK(!sl.is_member(det2));
  CHECK(sl.is_member(det1));
  CHECK(!gl.is_member(sing));
  CHECK(!sl.is_member(sing));
}

TEST_CASE("factor reconstructs every element of small groups") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (GroupKind kind : {GroupKind::GL2, GroupKind::SL2}) {
      GroupSpec g = GroupSpec::make(p, kind);
      for (const auto& e : g.elements()) {
        CHECK(evaluate_word(g, g.factor(e)) == e);
      }
    }
  }
}

TEST_CASE("factor reconstructs random members for larger primes") {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {7u, 11u, 13u}) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    FieldCtx f = g.field();
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    int found = 0;
    while (found < 40) {
      MatrixFF m = MatrixFF::from_ints(
          f, {{dist(rng), dist(rng)}, {dist(rng), dist(rng)}});
      if (det(m).is_zero()) continue;
      ++found;
      CHECK(evaluate_word(g, g.factor(m)) == m);
    }
  }
  GroupSpec sl = GroupSpec::make(7, GroupKind::SL2);
  FieldCtx f = sl.field();
  std::uniform_int_distribution<std::int64_t> dist(0, 6);
  int found = 0;
  while (found < 40) {
    MatrixFF m =
        MatrixFF::from_ints(f, {{dist(rng), dist(rng)}, {dist(rng), dist(rng)}});
    if (det(m) != f.one()) continue;
    ++found;
    CHECK(evaluate_word(sl, sl.factor(m)) == m);
  }
}

TEST_CASE("factor rejects non-members") {
  GroupSpec sl = GroupSpec::make(5, GroupKind::SL2);
  FieldCtx f = sl.field();
  CHECK_THROWS_AS(sl.factor(MatrixFF::from_ints(f, {{2, 0}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(sl.factor(MatrixFF::from_ints(f, {{0, 0}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(GroupSpec::make(4, GroupKind::GL2), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(1, GroupKind::GL2), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(17, GroupKind::GL2), std::invalid_argument);
}

TEST_CASE("conjugacy classes partition the group") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    auto classes = conjugacy_classes(p);

    // Expected family counts as functions of p.
    std::map<ClassType, std::size_t> count;
    for (const auto& c : classes) ++count[c.type];
    CHECK(count[ClassType::Central] == p - 1);
    CHECK(count[ClassType::Jordan] == p - 1);
    CHECK(count[ClassType::Split] == (p - 1) * (p - 2) / 2);
    CHECK(count[ClassType::Nonsplit] == p * (p - 1) / 2);

    // Brute-force orbit of each representative under conjugation.
    std::uint64_t covered = 0;
    std::set<std::string> seen;
    for (const auto& c : classes) {
      CHECK(g.is_member(c.representative));
      std::set<std::string> orbit;
      for (const auto& h : g.elements()) {
        MatrixFF conj = h * c.representative * *h.inverse();
        orbit.insert(encode(conj));
      }
      CHECK(orbit.size() == c.class_size);
      for (const auto& s : orbit) {
        CHECK(seen.insert(s).second);  // classes never overlap
      }
      covered += orbit.size();
    }
    CHECK(covered == g.order());
  }
}

TEST_CASE("class keys and representative invariants are consistent") {
  auto classes = conjugacy_classes(7);
  FieldCtx f = FieldCtx::make(7);
  std::set<std::string> keys;
  for (const auto& c : classes) {
    CHECK(keys.insert(c.key()).second);
    switch (c.type) {
      case ClassType::Central:
        CHECK(c.representative ==
              MatrixFF::identity(f, 2).scaled(f.from_int(c.params[0])));
        CHECK(c.class_size == 1);
        break;
      case ClassType::Jordan:
        CHECK(c.representative.get(0, 0) == f.from_int(c.params[0]));
        CHECK(c.representative.get(0, 1) == f.one());
        CHECK(c.class_size == 48);  // p^2 - 1
        break;
      case ClassType::Split:
        CHECK(c.params[0] < c.params[1]);
        CHECK(c.representative.trace() ==
              f.from_int(c.params[0] + c.params[1]));
        CHECK(c.class_size == 56);  // p(p + 1)
        break;
      case ClassType::Nonsplit: {
        // Characteristic polynomial is x^2 + a x + b and must be irreducible.
        std::uint32_t a = c.params[0], b = c.params[1];
        CHECK(c.representative.trace() == -f.from_int(a));
        CHECK(det(c.representative) == f.from_int(b));
        bool has_root = false;
        for (std::uint32_t x = 0; x < 7; ++x)
          if ((x * x + a * x + b) % 7 == 0) has_root = true;
        CHECK(!has_root);
        CHECK(c.class_size == 42);  // p(p - 1)
        break;
      }
    }
  }
  // 2(p-1) + (p-1)(p-2)/2 + p(p-1)/2 classes in total.
  CHECK(classes.size() == 12 + 15 + 21);
}

TEST_CASE("class order is deterministic") {
  auto a = conjugacy_classes(5);
  auto b = conjugacy_classes(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].key() == b[i].key());
    CHECK(a[i].representative == b[i].representative);
  }
  CHECK(a.front().type == ClassType::Central);
  CHECK(a.back().type == ClassType::Nonsplit);
}
