// Acceptance gate: end-to-end checks of the public claims, one line each.
// Each criterion has a wall-clock budget; exceeding it is a failure even if
// the mathematics checks out.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modrep/character.hpp"
#include "modrep/cli.hpp"
#include "modrep/decompose.hpp"
#include "modrep/group.hpp"
#include "modrep/labels.hpp"
#include "modrep/oracle.hpp"
#include "modrep/rep.hpp"

using namespace modrep;

namespace {

struct Outcome {
  bool ok = true;
  std::string stats;

  void fail(const std::string& why) {
    ok = false;
    if (!stats.empty()) stats += "; ";
    stats += why;
  }
};

int g_failures = 0;

void criterion(int n, const std::string& title, double budget_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (budget_s > 0 && elapsed > budget_s)
    out.fail("exceeded time budget");
  if (!out.ok) ++g_failures;
  std::string timing =
      budget_s > 0 ? " (" + std::to_string(elapsed).substr(0, 5) + "s of " +
                         std::to_string(static_cast<int>(budget_s)) + "s)"
                   : " (" + std::to_string(elapsed).substr(0, 5) + "s)";
  std::printf("%s %2d. %s [%s]%s\n", out.ok ? "PASS" : "FAIL", n,
              title.c_str(), out.stats.c_str(), timing.c_str());
  std::fflush(stdout);
}

struct ModuleShape {
  DecompMultiset factors;
  bool semisimple;
};

ModuleShape analyze(const Representation& rep) {
  SocleSeries series = socle_series(rep);
  DecompMultiset all(rep.group.p());
  for (const auto& layer : series.layers)
    for (const auto& [label, mult] : layer.entries()) all.add(label, mult);
  return {all, series.layers.size() <= 1};
}

Representation pair_module(const GroupSpec& g, std::uint32_t r1,
                           std::uint32_t r2, std::uint64_t k) {
  return det_twist(tensor(sym_rep(r1, g), sym_rep(r2, g)), k);
}

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7};

}  // namespace

static void two_factor_grid(Outcome& out) {
  std::size_t cells = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    std::uint32_t kmax = p == 2 ? 1 : p - 1;
    for (std::uint32_t r2 = 0; r2 < p; ++r2)
      for (std::uint32_t r1 = r2; r1 + r2 < p; ++r1)
        for (std::uint32_t k = 0; k < kmax; ++k) {
          ++cells;
          DecompOutcome formula = clebsch_gordan(r1, r2, k, p);
          if (!formula.verdict.in_range) {
            out.fail("formula unexpectedly out of range at p=" +
                     std::to_string(p));
            return;
          }
          ModuleShape shape = analyze(pair_module(g, r1, r2, k));
          if (shape.factors != formula.factors)
            out.fail("factor mismatch at p=" + std::to_string(p) + " r=(" +
                     std::to_string(r1) + "," + std::to_string(r2) + ") k=" +
                     std::to_string(k));
          if (!shape.semisimple)
            out.fail("not semisimple at p=" + std::to_string(p) + " r=(" +
                     std::to_string(r1) + "," + std::to_string(r2) + ")");
        }
  }
  out.stats = std::to_string(cells) + " cells, primes 2,3,5,7";
}

static void three_factor_grid(Outcome& out) {
  std::size_t cells = 0, balanced = 0, dominated = 0, boundary = 0;
  for (std::uint32_t p : {5u, 7u}) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    for (std::uint32_t r1 = 0; r1 < p; ++r1)
      for (std::uint32_t r2 = 0; r2 <= r1; ++r2)
        for (std::uint32_t r3 = 0; r3 <= r2; ++r3) {
          if (r1 + r2 + r3 >= p) continue;
          if (r1 < r2 + r3) ++balanced;
          if (r1 > r2 + r3) ++dominated;
          if (r1 == r2 + r3) ++boundary;
          for (std::uint32_t k = 0; k < p - 1; ++k) {
            ++cells;
            DecompOutcome formula = triple_decompose(r1, r2, r3, k, p);
            if (!formula.verdict.in_range) {
              out.fail("formula unexpectedly out of range");
              return;
            }
            Representation m =
                det_twist(tensor(tensor(sym_rep(r1, g), sym_rep(r2, g)),
                                 sym_rep(r3, g)),
                          k);
            ModuleShape shape = analyze(m);
            if (shape.factors != formula.factors)
              out.fail("factor mismatch at p=" + std::to_string(p) + " r=(" +
                       std::to_string(r1) + "," + std::to_string(r2) + "," +
                       std::to_string(r3) + ") k=" + std::to_string(k));
            if (!shape.semisimple)
              out.fail("not semisimple at p=" + std::to_string(p));
          }
        }
  }
  if (balanced == 0 || dominated == 0 || boundary == 0)
    out.fail("a branch of the formula was never exercised");
  out.stats = std::to_string(cells) + " cells, " + std::to_string(boundary) +
              " on the case boundary";
}

static void character_identities(Outcome& out) {
  std::size_t labels = 0, pairs = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    std::uint32_t kmax = p == 2 ? 1 : p - 1;
    for (std::uint32_t r = 0; r < p; ++r)
      for (std::uint32_t k = 0; k < kmax; ++k) {
        ++labels;
        if (!char_equal(char_of(irr_rep(IrrLabel{r, k}, g)),
                        char_vrk(r, k, p)))
          out.fail("trace formula mismatch at p=" + std::to_string(p) + " V" +
                   std::to_string(r) + "(" + std::to_string(k) + ")");
      }
    for (std::uint32_t r2 = 0; r2 < p; ++r2)
      for (std::uint32_t r1 = r2; r1 + r2 < p; ++r1)
        for (std::uint32_t k = 0; k < kmax; ++k) {
          ++pairs;
          DecompOutcome formula = clebsch_gordan(r1, r2, k, p);
          if (!char_equal(char_of(pair_module(g, r1, r2, k)),
                          char_of_multiset(formula.factors)))
            out.fail("product character mismatch at p=" + std::to_string(p));
        }
  }
  out.stats = std::to_string(labels) + " labels, " + std::to_string(pairs) +
              " products";
}

static void socle_filtration_p2(Outcome& out) {
  FiltrationReport rep = verify_filtration_nonsplit_p2();
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail) out.fail(c.name + ": " + c.detail);
    return;
  }
  if (rep.series.chain.size() != 3 || rep.series.chain[0].dim() != 0 ||
      rep.series.chain[1].dim() != 3 || rep.series.chain[2].dim() != 4)
    out.fail("wrong chain dimensions");
  DecompMultiset first(2), second(2);
  first.add(IrrLabel{0, 0}, 1);
  first.add(IrrLabel{1, 0}, 1);
  second.add(IrrLabel{0, 0}, 1);
  if (rep.series.layers.size() != 2 || rep.series.layers[0] != first ||
      rep.series.layers[1] != second)
    out.fail("wrong layer factors");

  GroupSpec g = GroupSpec::make(2, GroupKind::GL2);
  Representation m = tensor(sym_rep(1, g), sym_rep(1, g));
  if (is_semisimple(m)) out.fail("module wrongly judged semisimple");
  SocleResult s = socle(m);
  for (const auto& v : std::vector<std::vector<std::int64_t>>{
           {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}})
    if (!s.space.contains(MatrixFF::row_vector(g.field(), v)))
      out.fail("an expected socle vector is missing");
  out.stats = "chain 0<3<4, layers as stated, 3 explicit socle vectors";
}

static void distinction_grid(Outcome& out) {
  std::size_t cells = 0, distinguished = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    Representation triv = trivial_rep(g);
    std::uint32_t kmax = p == 2 ? 1 : p - 1;
    for (std::uint32_t r1 = 0; r1 < p; ++r1)
      for (std::uint32_t r2 = 0; r1 + r2 < p; ++r2)
        for (std::uint32_t k = 0; k < kmax; ++k) {
          ++cells;
          std::size_t d = hom_space(pair_module(g, r1, r2, k), triv).dim();
          if (d > 1) {
            out.fail("multiplicity-one bound violated at p=" +
                     std::to_string(p));
            continue;
          }
          DistinctionVerdict v = is_gp_distinguished(r1, r2, k, p);
          if (!v.verdict.in_range) {
            out.fail("predicate unexpectedly out of range");
            continue;
          }
          if (v.distinguished != (d == 1))
            out.fail("predicate disagrees with the invariant-functional "
                     "dimension at p=" +
                     std::to_string(p) + " r=(" + std::to_string(r1) + "," +
                     std::to_string(r2) + ") k=" + std::to_string(k));
          if (d == 1) ++distinguished;
        }
  }
  std::size_t boxes = 0;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t r = 0; r <= 3; ++r)
      for (std::uint64_t k = 0; k <= 2; ++k) {
        ++boxes;
        if (!verify_det_power_socle_cosocle(r, k, p).all_pass())
          out.fail("determinant power not found in socle+cosocle at p=" +
                   std::to_string(p) + " r=" + std::to_string(r) + " k=" +
                   std::to_string(k));
      }
  out.stats = std::to_string(cells) + " grid cells (" +
              std::to_string(distinguished) + " distinguished), " +
              std::to_string(boxes) + " socle/cosocle reports";
}

static void canonical_maps(Outcome& out) {
  std::size_t maps = 0;
  for (std::uint32_t p : kPrimes) {
    if (p < 3) continue;  // the range 1 <= r <= p-2 is empty at p = 2
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    for (std::uint32_t r = 1; r + 2 <= p; ++r) {
      Representation src = tensor(sym_rep(r, g), sym_rep(1, g));

      MatrixFF mul = p1_map(r, g);
      Representation up = sym_rep(r + 1, g);
      for (std::size_t i = 0; i < g.generators().size(); ++i)
        if (src.images[i] * mul != mul * up.images[i])
          out.fail("multiplication map fails to intertwine at p=" +
                   std::to_string(p) + " r=" + std::to_string(r));
      if (rref(mul).rank != r + 2)
        out.fail("multiplication map not onto at p=" + std::to_string(p));

      MatrixFF con = p2_map(r, g);
      Representation down = det_twist(sym_rep(r - 1, g), 1);
      for (std::size_t i = 0; i < g.generators().size(); ++i)
        if (src.images[i] * con != con * down.images[i])
          out.fail("contraction map fails to intertwine at p=" +
                   std::to_string(p) + " r=" + std::to_string(r));
      if (rref(con).rank != r)
        out.fail("contraction map not onto at p=" + std::to_string(p));
      maps += 2;
    }
  }
  out.stats = std::to_string(maps) + " maps over primes 3,5,7";
}

static void semisimplicity_bound(Outcome& out) {
  std::size_t tuples = 0, at_boundary = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    auto note = [&](std::uint32_t total, const Representation& m) {
      ++tuples;
      if (total == p - 1) ++at_boundary;
      if (!is_semisimple(m))
        out.fail("low-degree tensor not semisimple at p=" + std::to_string(p) +
                 " (" + m.provenance + ")");
    };
    for (std::uint32_t r1 = 0; r1 < p; ++r1) note(r1, sym_rep(r1, g));
    for (std::uint32_t r1 = 0; r1 < p; ++r1)
      for (std::uint32_t r2 = 0; r2 <= r1 && r1 + r2 < p; ++r2)
        note(r1 + r2, tensor(sym_rep(r1, g), sym_rep(r2, g)));
    for (std::uint32_t r1 = 0; r1 < p; ++r1)
      for (std::uint32_t r2 = 0; r2 <= r1; ++r2)
        for (std::uint32_t r3 = 0; r3 <= r2; ++r3) {
          if (r1 + r2 + r3 >= p) continue;
          note(r1 + r2 + r3,
               tensor(tensor(sym_rep(r1, g), sym_rep(r2, g)), sym_rep(r3, g)));
        }
  }
  if (at_boundary == 0) out.fail("no tuple met the boundary sum p - 1");
  out.stats = std::to_string(tuples) + " tensors, " +
              std::to_string(at_boundary) + " at the boundary sum";
}

static void multiplicity_congruence(Outcome& out) {
  std::mt19937_64 rng(42);
  std::size_t pairs = 0, grounded = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    std::uint32_t kmax = p == 2 ? 1 : p - 1;
    auto random_label = [&] {
      return IrrLabel{static_cast<std::uint32_t>(rng() % p),
                      static_cast<std::uint32_t>(rng() % kmax)};
    };
    for (int t = 0; t < 60; ++t) {
      // A random base multiset and a partner with p extra copies sprinkled
      // over random labels: characters agree, multiplicities differ by
      // multiples of p.
      DecompMultiset a(p);
      std::size_t count = 1 + rng() % 4;
      for (std::size_t i = 0; i < count; ++i)
        a.add(random_label(), 1 + rng() % 3);
      DecompMultiset b = a;
      std::size_t bumps = rng() % 3;
      for (std::size_t i = 0; i < bumps; ++i) b.add(random_label(), p);

      if (!char_equal(char_of_multiset(a), char_of_multiset(b))) {
        out.fail("constructed pair has unequal characters");
        continue;
      }
      if (!brauer_congruence_check(a, b)) {
        out.fail("congruence violated for " + a.to_string() + " vs " +
                 b.to_string());
        continue;
      }
      ++pairs;

      // Ground a subset in actual modules: the direct sum realizes the
      // multiset's character.
      if (t < 5) {
        Representation m = trivial_rep(g);
        bool first = true;
        for (const auto& [label, mult] : a.entries())
          for (std::uint64_t i = 0; i < mult; ++i) {
            Representation irr = irr_rep(label, g);
            m = first ? irr : direct_sum(m, irr);
            first = false;
          }
        if (!char_equal(char_of(m), char_of_multiset(a)))
          out.fail("direct sum character differs from the formal sum");
        else
          ++grounded;
      }
    }
  }
  if (pairs < 200) out.fail("fewer than 200 pairs were generated");
  out.stats = std::to_string(pairs) + " seeded pairs, " +
              std::to_string(grounded) + " grounded in explicit modules";
}

static void square_comparison(Outcome& out) {
  std::size_t cells = 0, isomorphic = 0, undetermined = 0;
  for (std::uint32_t p : kPrimes) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    for (std::uint32_t r = 0; r + 1 < p; ++r) {
      ++cells;
      Representation a = det_twist(sym_square(sym_rep(r, g)), 1);
      Representation b = alt_square(sym_rep(r + 1, g));
      if (a.dim != b.dim)
        out.fail("dimension mismatch at p=" + std::to_string(p) + " r=" +
                 std::to_string(r));
      if (!char_equal(char_of(a), char_of(b)))
        out.fail("character mismatch at p=" + std::to_string(p) + " r=" +
                 std::to_string(r));
      // Isomorphism search is evidence, not a gate.
      IsoResult iso = is_isomorphic(a, b, 42);
      if (iso.status == IsoStatus::Isomorphic) ++isomorphic;
      if (iso.status == IsoStatus::Undetermined) ++undetermined;
      if (iso.status == IsoStatus::NotIsomorphic)
        out.fail("definitive non-isomorphism contradicts the expectation at "
                 "p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
  }
  out.stats = std::to_string(cells) + " cells; evidence: " +
              std::to_string(isomorphic) + " isomorphic, " +
              std::to_string(undetermined) + " undetermined";
}

static void deterministic_reports(Outcome& out) {
  auto run_once = [](const std::vector<std::string>& args) {
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return std::make_pair(code, o.str());
  };
  const std::vector<std::vector<std::string>> invocations = {
      {"verify", "--suite", "pairs", "--p-list", "3,5", "--json", "--seed",
       "42"},
      {"conjecture", "--p-list", "5", "--json", "--seed", "42"},
      {"decompose", "--p", "7", "--r", "3,2,1", "--oracle", "--json"},
      {"distinguish", "--p", "5", "--r1", "2", "--r2", "2", "--k", "2",
       "--json"},
  };
  for (const auto& args : invocations) {
    auto first = run_once(args);
    auto second = run_once(args);
    if (first.first != 0 || second.first != 0)
      out.fail("command exited nonzero");
    if (first.second != second.second)
      out.fail("repeated run changed bytes for '" + args[0] + "'");
  }
  out.stats = std::to_string(invocations.size()) +
              " commands run twice, byte-compared";
}

int main() {
  criterion(1, "two-factor tensor grid: oracle factors match the closed form"
               " and every module is semisimple", 60, two_factor_grid);
  criterion(2, "three-factor tensor grid: closed form verified on both sides"
               " of the case boundary", 600, three_factor_grid);
  criterion(3, "character identities: traces match the eigenvalue formula and"
               " products match factor sums", 10, character_identities);
  criterion(4, "p=2 tensor square: socle chain, layer factors and explicit"
               " socle vectors", 1, socle_filtration_p2);
  criterion(5, "distinction predicate agrees with invariant-functional"
               " dimensions; determinant powers in socle and cosocle", 120,
            distinction_grid);
  criterion(6, "multiplication and contraction maps intertwine and are onto",
            5, canonical_maps);
  criterion(7, "every tensor with exponent sum below p is semisimple", 120,
            semisimplicity_bound);
  criterion(8, "equal characters force multiplicity congruence mod p on"
               " seeded multiset pairs", 30, multiplicity_congruence);
  criterion(9, "symmetric square with twist vs alternating square: dimension"
               " and character equality, isomorphism evidence", 60,
            square_comparison);
  criterion(10, "repeated runs with one seed emit byte-identical reports", 0,
            deterministic_reports);

  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
