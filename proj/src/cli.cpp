#include "modrep/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "modrep/character.hpp"
#include "modrep/decompose.hpp"
#include "modrep/group.hpp"
#include "modrep/oracle.hpp"
#include "modrep/rep.hpp"
#include "modrep/report.hpp"

namespace modrep {

namespace {

struct CmdOutcome {
  RunReport report;
  int exit_code = 0;
};

Representation build_tensor_module(const GroupSpec& g,
                                   const std::vector<std::uint32_t>& rs,
                                   std::uint64_t k) {
  std::uint64_t dim = 1;
  for (auto r : rs) dim *= static_cast<std::uint64_t>(r) + 1;
  if (dim > 4096)
    throw std::invalid_argument(
        "module dimension " + std::to_string(dim) + " exceeds the 4096 cap");
  Representation m = sym_rep(rs[0], g);
  for (std::size_t i = 1; i < rs.size(); ++i)
    m = tensor(m, sym_rep(rs[i], g));
  return det_twist(m, k);
}

struct OracleFactors {
  DecompMultiset factors;
  bool semisimple;
};

// One socle-series pass gives both the factor multiset and semisimplicity.
OracleFactors oracle_factors(const Representation& m) {
  SocleSeries s = socle_series(m);
  DecompMultiset out(m.group.p());
  for (const DecompMultiset& layer : s.layers)
    for (const auto& [label, mult] : layer.entries()) out.add(label, mult);
  return {std::move(out), s.layers.size() <= 1};
}

void add_check(RunReport& rep, std::string name, bool ok, std::string detail) {
  rep.checks.push_back({std::move(name),
                        ok ? CheckStatus::Pass : CheckStatus::Fail,
                        std::move(detail),
                        {}});
}

std::string rs_string(const std::vector<std::uint32_t>& rs) {
  std::string out = "(";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rs[i]);
  }
  return out + ")";
}

// ---- verify suites ------------------------------------------------------

void suite_pairs(std::uint32_t p, RunReport& rep) {
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  for (std::uint32_t r2 = 0; r2 < p; ++r2)
    for (std::uint32_t r1 = r2; r1 + r2 < p; ++r1)
      for (std::uint32_t k = 0; k + 1 < p; ++k) {
        DecompOutcome f = clebsch_gordan(r1, r2, k, p);
        Representation m = build_tensor_module(g, {r1, r2}, k);
        OracleFactors o = oracle_factors(m);
        bool ok = f.verdict.in_range && o.factors == f.factors && o.semisimple;
        std::string name = "pairs/p=" + std::to_string(p) + "/r=(" +
                           std::to_string(r1) + "," + std::to_string(r2) +
                           ")/k=" + std::to_string(k);
        std::string detail =
            ok ? "formula = oracle = " + f.factors.to_string()
               : "formula = " + f.factors.to_string() +
                     ", oracle = " + o.factors.to_string() +
                     ", semisimple = " + (o.semisimple ? "yes" : "no");
        add_check(rep, name, ok, detail);
      }
}

void suite_triples(std::uint32_t p, RunReport& rep) {
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  for (std::uint32_t r3 = 0; r3 < p; ++r3)
    for (std::uint32_t r2 = r3; r2 + r3 < p; ++r2)
      for (std::uint32_t r1 = r2; r1 + r2 + r3 < p; ++r1)
        for (std::uint32_t k = 0; k + 1 < p; ++k) {
          DecompOutcome f = triple_decompose(r1, r2, r3, k, p);
          Representation m = build_tensor_module(g, {r1, r2, r3}, k);
          OracleFactors o = oracle_factors(m);
          bool ok =
              f.verdict.in_range && o.factors == f.factors && o.semisimple;
          std::string name = "triples/p=" + std::to_string(p) + "/r=(" +
                             std::to_string(r1) + "," + std::to_string(r2) +
                             "," + std::to_string(r3) +
                             ")/k=" + std::to_string(k);
          std::string detail =
              ok ? "formula = oracle = " + f.factors.to_string()
                 : "formula = " + f.factors.to_string() +
                       ", oracle = " + o.factors.to_string() +
                       ", semisimple = " + (o.semisimple ? "yes" : "no");
          add_check(rep, name, ok, detail);
        }
}

void suite_characters(std::uint32_t p, RunReport& rep) {
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  const auto classes = conjugacy_classes(p);
  auto first_difference = [&](const CharVector& a, const CharVector& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (a.values[i] != b.values[i])
        return "first difference at class " + classes[i].key() + ": " +
               a.values[i].to_string() + " vs " + b.values[i].to_string();
    return std::string("values agree");
  };

  for (std::uint32_t r = 0; r < p; ++r)
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
      CharVector traced = char_of(irr_rep({r, k}, g));
      CharVector formula = char_vrk(r, k, p);
      bool ok = char_equal(traced, formula);
      add_check(rep,
                "characters/p=" + std::to_string(p) + "/" +
                    IrrLabel{r, k}.to_string(),
                ok,
                ok ? "trace = closed form on all classes"
                   : first_difference(traced, formula));
    }

  for (std::uint32_t r2 = 0; r2 < p; ++r2)
    for (std::uint32_t r1 = r2; r1 + r2 < p; ++r1)
      for (std::uint32_t k = 0; k + 1 < p; ++k) {
        DecompOutcome f = clebsch_gordan(r1, r2, k, p);
        CharVector lhs = char_of(build_tensor_module(g, {r1, r2}, k));
        CharVector rhs = char_of_multiset(f.factors);
        bool ok = char_equal(lhs, rhs);
        add_check(rep,
                  "characters/p=" + std::to_string(p) + "/pair r=(" +
                      std::to_string(r1) + "," + std::to_string(r2) +
                      ") k=" + std::to_string(k),
                  ok,
                  ok ? "tensor trace = sum of factor characters"
                     : first_difference(lhs, rhs));
      }
}

void suite_socle(std::uint32_t p, RunReport& rep) {
  if (p == 2) {
    FiltrationReport fr = verify_filtration_nonsplit_p2();
    for (const CheckResult& c : fr.checks) {
      CheckResult merged = c;
      merged.name = "socle/p=2/" + c.name;
      rep.checks.push_back(std::move(merged));
    }
    return;
  }
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  for (std::uint32_t r = 0; r < p; ++r) {
    Representation v = sym_rep(r, g);
    SocleResult s = socle(v);
    bool whole = s.space.dim() == v.dim;
    DecompMultiset expect(p);
    expect.add({r, 0}, 1);
    bool ok = whole && s.factors == expect;
    add_check(rep,
              "socle/p=" + std::to_string(p) + "/irreducible-V" +
                  std::to_string(r),
              ok,
              ok ? "socle is the whole module"
                 : "socle dim " + std::to_string(s.space.dim()) + " of " +
                       std::to_string(v.dim) + ", factors " +
                       s.factors.to_string());
  }
}

void suite_distinction(std::uint32_t p, RunReport& rep) {
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  Representation triv = trivial_rep(g);
  for (std::uint32_t r1 = 0; r1 < p; ++r1)
    for (std::uint32_t r2 = 0; r1 + r2 < p; ++r2)
      for (std::uint32_t k = 0; k + 1 < p; ++k) {
        DistinctionVerdict v = is_gp_distinguished(r1, r2, k, p);
        Representation m = build_tensor_module(g, {r1, r2}, k);
        std::size_t d = hom_space(m, triv).dim();
        bool gelfand = d <= 1;
        bool agree = d == (v.distinguished ? 1u : 0u);
        std::string name = "distinction/p=" + std::to_string(p) + "/r=(" +
                           std::to_string(r1) + "," + std::to_string(r2) +
                           ")/k=" + std::to_string(k);
        std::string detail = "criterion says " +
                             std::string(v.distinguished ? "distinguished"
                                                         : "not distinguished") +
                             ", dim Hom(module, triv) = " + std::to_string(d);
        add_check(rep, name, gelfand && agree, detail);
      }
  if (p == 2) return;  // the determinant-power grid starts at p = 3
  for (std::uint32_t r = 0; r <= 3; ++r)
    for (std::uint32_t k = 0; k <= 2; ++k) {
      FiltrationReport fr = verify_det_power_socle_cosocle(r, k, p);
      for (const CheckResult& c : fr.checks) {
        CheckResult merged = c;
        merged.name = "distinction/p=" + std::to_string(p) +
                      "/det-power r=" + std::to_string(r) +
                      " k=" + std::to_string(k) + "/" + c.name;
        rep.checks.push_back(std::move(merged));
      }
    }
}

void suite_serre(std::uint32_t p, RunReport& rep) {
  GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
  auto run_cell = [&](const std::vector<std::uint32_t>& rs) {
    Representation m = build_tensor_module(g, rs, 0);
    bool ok = is_semisimple(m);
    std::uint32_t total = 0;
    for (auto r : rs) total += r;
    add_check(rep,
              "serre/p=" + std::to_string(p) + "/r=" + rs_string(rs),
              ok,
              "sum r_i = " + std::to_string(total) + " < " +
                  std::to_string(p) +
                  (ok ? ", semisimple" : ", NOT semisimple"));
  };
  for (std::uint32_t r1 = 0; r1 < p; ++r1) run_cell({r1});
  for (std::uint32_t r2 = 0; r2 < p; ++r2)
    for (std::uint32_t r1 = r2; r1 + r2 < p; ++r1) run_cell({r1, r2});
  for (std::uint32_t r3 = 0; r3 < p; ++r3)
    for (std::uint32_t r2 = r3; r2 + r3 < p; ++r2)
      for (std::uint32_t r1 = r2; r1 + r2 + r3 < p; ++r1)
        run_cell({r1, r2, r3});
}

// ---- commands -----------------------------------------------------------

struct DecomposeOpts {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> r;
  std::uint64_t k = 0;
  std::string group = "gl2";
  bool oracle = false;
  std::uint64_t seed = 42;
};

void require_prime(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("--p must be a prime");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("--p must be a prime, got " +
                                  std::to_string(p));
}

CmdOutcome cmd_decompose(const DecomposeOpts& o) {
  require_prime(o.p);
  if (o.r.size() != 2 && o.r.size() != 3)
    throw std::invalid_argument("--r takes a comma list of 2 or 3 exponents");
  const GroupKind kind =
      o.group == "sl2" ? GroupKind::SL2 : GroupKind::GL2;

  CmdOutcome out;
  out.report.command = "decompose";
  out.report.seed = o.seed;
  out.report.params = {{"p", o.p},
                       {"r", o.r},
                       {"k", o.k},
                       {"group", o.group},
                       {"oracle", o.oracle}};

  DecompOutcome f = o.r.size() == 2
                        ? clebsch_gordan(o.r[0], o.r[1], o.k, o.p)
                        : triple_decompose(o.r[0], o.r[1], o.r[2], o.k, o.p);
  DecompMultiset formula_factors =
      kind == GroupKind::SL2 && f.verdict.in_range ? sl2_reduce(f.factors)
                                                   : f.factors;
  if (f.verdict.in_range) {
    add_check(out.report, "formula", true, formula_factors.to_string());
  } else {
    out.report.checks.push_back(
        {"formula", CheckStatus::OutOfRange, f.verdict.reason, {}});
  }

  if (o.oracle) {
    GroupSpec g = GroupSpec::make(o.p, kind);
    Representation m = build_tensor_module(g, o.r, o.k);
    OracleFactors of = oracle_factors(m);
    std::string note = of.semisimple ? " (semisimple)" : " (not semisimple)";
    if (!f.verdict.in_range)
      note += "; oracle-only, no closed-form claim in this range";
    add_check(out.report, "oracle", true, of.factors.to_string() + note);
    if (f.verdict.in_range) {
      add_check(out.report, "agreement", of.factors == formula_factors,
                of.factors == formula_factors
                    ? "oracle factors match the formula"
                    : "oracle = " + of.factors.to_string() +
                          ", formula = " + formula_factors.to_string());
      add_check(out.report, "semisimple", of.semisimple,
                of.semisimple ? "module is semisimple"
                              : "module is not semisimple");
    }
  }
  out.exit_code = out.report.failures() > 0 ? 1 : 0;
  return out;
}

struct VerifyOpts {
  std::vector<std::uint32_t> p_list{2, 3, 5, 7};
  std::string suite = "all";
  std::uint64_t seed = 42;
};

CmdOutcome cmd_verify(const VerifyOpts& o) {
  CmdOutcome out;
  out.report.command = "verify";
  out.report.seed = o.seed;
  out.report.params = {{"p_list", o.p_list}, {"suite", o.suite}};

  for (std::uint32_t p : o.p_list) {
    if (o.suite == "pairs" || o.suite == "all") suite_pairs(p, out.report);
    if (o.suite == "triples" || o.suite == "all") suite_triples(p, out.report);
    if (o.suite == "characters" || o.suite == "all")
      suite_characters(p, out.report);
    if (o.suite == "socle" || o.suite == "all") suite_socle(p, out.report);
    if (o.suite == "distinction" || o.suite == "all")
      suite_distinction(p, out.report);
    if (o.suite == "serre" || o.suite == "all") suite_serre(p, out.report);
  }

  bool all_pass = true;
  for (const auto& c : out.report.checks)
    if (c.status != CheckStatus::Pass) all_pass = false;
  out.exit_code = all_pass ? 0 : 1;
  return out;
}

struct ConjectureOpts {
  std::vector<std::uint32_t> p_list{2, 3, 5, 7};
  std::uint64_t seed = 42;
};

CmdOutcome cmd_conjecture(const ConjectureOpts& o) {
  CmdOutcome out;
  out.report.command = "conjecture";
  out.report.seed = o.seed;
  out.report.params = {{"p_list", o.p_list}};

  bool gate_fail = false;
  for (std::uint32_t p : o.p_list) {
    GroupSpec g = GroupSpec::make(p, GroupKind::GL2);
    for (std::uint32_t r = 0; r + 1 < p; ++r) {
      Representation a = det_twist(sym_square(sym_rep(r, g)), 1);
      Representation b = alt_square(sym_rep(r + 1, g));
      std::string base = "conjecture/p=" + std::to_string(p) +
                         "/r=" + std::to_string(r);

      bool dim_ok = a.dim == b.dim;
      gate_fail = gate_fail || !dim_ok;
      add_check(out.report, base + "/dim", dim_ok,
                "dim Sym2(V" + std::to_string(r) + ")(1) = " +
                    std::to_string(a.dim) + ", dim Alt2(V" +
                    std::to_string(r + 1) + ") = " + std::to_string(b.dim));

      bool char_ok = char_equal(char_of(a), char_of(b));
      gate_fail = gate_fail || !char_ok;
      add_check(out.report, base + "/char", char_ok,
                char_ok ? "characters coincide" : "characters differ");

      IsoResult iso = is_isomorphic(a, b, o.seed);
      CheckStatus st = iso.status == IsoStatus::Isomorphic
                           ? CheckStatus::Pass
                           : (iso.status == IsoStatus::NotIsomorphic
                                  ? CheckStatus::Fail
                                  : CheckStatus::Undetermined);
      out.report.checks.push_back({base + "/isomorphic", st,
                                   to_string(iso.status) + "; " + iso.detail,
                                   iso.witness});
    }
  }
  // Isomorphism verdicts are evidence about an open statement; only the
  // dimension/character claims gate the exit code.
  out.exit_code = gate_fail ? 1 : 0;
  return out;
}

struct DistinguishOpts {
  std::uint32_t p = 0;
  std::uint32_t r1 = 0;
  std::uint32_t r2 = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 42;
};

CmdOutcome cmd_distinguish(const DistinguishOpts& o) {
  require_prime(o.p);
  CmdOutcome out;
  out.report.command = "distinguish";
  out.report.seed = o.seed;
  out.report.params = {
      {"p", o.p}, {"r1", o.r1}, {"r2", o.r2}, {"k", o.k}};

  DistinctionVerdict v = is_gp_distinguished(o.r1, o.r2, o.k, o.p);
  GroupSpec g = GroupSpec::make(o.p, GroupKind::GL2);
  Representation m = build_tensor_module(g, {o.r1, o.r2}, o.k);
  std::size_t d = hom_space(m, trivial_rep(g)).dim();

  if (!v.verdict.in_range) {
    out.report.checks.push_back(
        {"criterion", CheckStatus::OutOfRange, v.verdict.reason, {}});
    add_check(out.report, "hom-trivial", true,
              "dim Hom(module, triv) = " + std::to_string(d) +
                  "; oracle-only, no closed-form claim in this range");
    out.exit_code = 0;
    return out;
  }

  add_check(out.report, "criterion", true,
            v.distinguished ? "distinguished" : "not distinguished");
  add_check(out.report, "gelfand-bound", d <= 1,
            "dim Hom(module, triv) = " + std::to_string(d) + " (bound 1)");
  add_check(out.report, "hom-trivial-agreement",
            d == (v.distinguished ? 1u : 0u),
            "criterion predicts " +
                std::to_string(v.distinguished ? 1 : 0) +
                ", oracle finds " + std::to_string(d));

  if (o.r1 == o.r2) {
    IrrLabel chi = distinguishing_character(o.r1, o.k, o.p);
    FiltrationReport fr = verify_det_power_socle_cosocle(o.r1, o.k, o.p);
    for (const CheckResult& c : fr.checks) {
      CheckResult merged = c;
      merged.name = "det-power/" + c.name;
      merged.detail = c.detail + " [character " + chi.to_string() + "]";
      out.report.checks.push_back(std::move(merged));
    }
  }
  out.exit_code = out.report.failures() > 0 ? 1 : 0;
  return out;
}

void emit(const CmdOutcome& res, bool json, const std::string& out_file,
          std::ostream& out) {
  if (json)
    out << res.report.to_json_string();
  else
    out << res.report.to_text();
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open --out file " + out_file);
    f << res.report.to_json_string();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact mod-p representation calculator for GL2/SL2(F_p)"};
  app.name("modrep");
  app.require_subcommand(1);

  bool json = false;
  std::string out_file;

  DecomposeOpts dec;
  CLI::App* cmd_dec = app.add_subcommand(
      "decompose", "decompose a tensor of symmetric powers into irreducibles");
  cmd_dec->add_option("--p", dec.p, "prime")->required();
  cmd_dec->add_option("--r", dec.r, "comma list of 2 or 3 exponents")
      ->required()
      ->delimiter(',');
  cmd_dec->add_option("--k", dec.k, "determinant twist (default 0)");
  cmd_dec->add_option("--group", dec.group, "gl2 or sl2 (default gl2)")
      ->check(CLI::IsMember({"gl2", "sl2"}));
  cmd_dec->add_flag("--oracle", dec.oracle,
                    "cross-check against the module-structure oracle");

  VerifyOpts ver;
  CLI::App* cmd_ver = app.add_subcommand(
      "verify", "run a verification grid over a list of primes");
  cmd_ver->add_option("--p-list", ver.p_list,
                      "comma list of primes (default 2,3,5,7)")
      ->delimiter(',');
  cmd_ver->add_option("--suite", ver.suite,
                      "pairs|triples|characters|socle|distinction|serre|all")
      ->check(CLI::IsMember({"pairs", "triples", "characters", "socle",
                             "distinction", "serre", "all"}));

  ConjectureOpts con;
  CLI::App* cmd_con = app.add_subcommand(
      "conjecture",
      "compare Sym2(V_r)(1) with Alt2(V_{r+1}): dimensions and characters "
      "gate, isomorphism verdicts are evidence only");
  cmd_con->add_option("--p-list", con.p_list,
                      "comma list of primes (default 2,3,5,7)")
      ->delimiter(',');

  DistinguishOpts dis;
  CLI::App* cmd_dis = app.add_subcommand(
      "distinguish",
      "test the invariant-functional criterion for V_{r1} x V_{r2} (det^k)");
  cmd_dis->add_option("--p", dis.p, "prime")->required();
  cmd_dis->add_option("--r1", dis.r1, "first exponent")->required();
  cmd_dis->add_option("--r2", dis.r2, "second exponent")->required();
  cmd_dis->add_option("--k", dis.k, "determinant twist (default 0)");

  std::uint64_t seed = 42;
  for (CLI::App* sub : {cmd_dec, cmd_ver, cmd_con, cmd_dis}) {
    sub->add_flag("--json", json, "emit the JSON report on stdout");
    sub->add_option("--out", out_file, "also write the JSON report here");
    sub->add_option("--seed", seed, "seed for randomized searches (default 42)");
  }

  std::vector<const char*> argv;
  argv.push_back("modrep");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  dec.seed = ver.seed = con.seed = dis.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CmdOutcome res;
    if (cmd_dec->parsed())
      res = cmd_decompose(dec);
    else if (cmd_ver->parsed())
      res = cmd_verify(ver);
    else if (cmd_con->parsed())
      res = cmd_conjecture(con);
    else
      res = cmd_distinguish(dis);
    emit(res, json, out_file, out);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    err << res.report.command << ": " << res.report.checks.size()
        << " checks in " << ms << " ms\n";
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace modrep
