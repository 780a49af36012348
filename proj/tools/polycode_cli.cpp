#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polycode/codes.hpp"
#include "polycode/distance.hpp"
#include "polycode/duality.hpp"
#include "polycode/errors.hpp"
#include "polycode/fixtures.hpp"
#include "polycode/lcd.hpp"
#include "polycode/serialize.hpp"

using namespace polycode;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kInternal = 3 };

struct CodeArgs {
  std::string poly;
  int power = 0;
  std::optional<int> j;
  std::optional<std::size_t> oracle_cap;
  bool oracle = false;
  bool json = false;
  bool csv = false;
  unsigned workers = 0;
};

void add_code_options(CLI::App* cmd, CodeArgs& a, bool j_required) {
  cmd->add_option("--poly", a.poly, "irreducible P, e.g. \"x^4+x+1\"")->required();
  cmd->add_option("--power", a.power, "exponent L of the ambient modulus P^L")->required();
  auto* j = cmd->add_option("--j", a.j, "ideal index 0..L");
  if (j_required) j->required();
  cmd->add_option("--oracle-cap", a.oracle_cap, "largest dimension enumerated by the oracle");
  cmd->add_flag("--oracle", a.oracle, "resolve non-exact entries with the exhaustive oracle");
  cmd->add_option("--workers", a.workers, "oracle threads (default: logical cores)");
  cmd->add_flag("--json", a.json, "emit JSON");
}

RingContext context_of(const CodeArgs& a) { return new_context(parse(a.poly), a.power); }

ProfileOptions profile_options(const CodeArgs& a) {
  ProfileOptions o;
  o.use_oracle = a.oracle || a.oracle_cap.has_value();
  o.oracle_cap = a.oracle_cap.value_or(enumeration_cap());
  o.workers = a.workers;
  return o;
}

std::vector<int> indices(const CodeArgs& a, const RingContext& ctx) {
  if (a.j) {
    if (*a.j < 0 || *a.j > ctx.L) throw ValidationError("--j must lie in 0.." + std::to_string(ctx.L));
    return {*a.j};
  }
  std::vector<int> all;
  for (int j = 0; j <= ctx.L; ++j) all.push_back(j);
  return all;
}

std::string show(const Interval& i, int n) { return display_interval(i.lower, i.upper, n); }

int cmd_analyze(const CodeArgs& a) {
  const RingContext ctx = context_of(a);
  const ProfileOptions po = profile_options(a);
  const auto profile = full_distance_profile(ctx, po);
  std::vector<CodeSummary> rows;
  for (int j : indices(a, ctx)) {
    const PolycyclicCode code(ctx, j);
    CodeSummary s;
    s.poly = ctx.P.str();
    s.L = ctx.L;
    s.j = j;
    s.n = ctx.n;
    s.k = code.k();
    s.d = Interval{profile[j].lower, profile[j].upper};
    const DualSummary ds = dual_summary(ctx, j, po);
    if (ds.d_dual) s.d_dual = Interval{*ds.d_dual, *ds.d_dual};
    s.lcd = is_lcd_oracle(code).is_lcd;
    s.reversible = is_reversible(code);
    rows.push_back(s);
  }
  if (a.json) {
    json out = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json row = to_json(rows[i]);
      row["provenance"] = profile[rows[i].j].provenance;
      out.push_back(row);
    }
    std::cout << out.dump(2) << '\n';
  } else if (a.csv) {
    std::cout << csv_header() << '\n';
    for (const auto& r : rows) std::cout << csv_row(r) << '\n';
  } else {
    std::cout << "P = " << ctx.P.str() << ", L = " << ctx.L << ", m = " << ctx.m << ", T = " << ctx.T
              << ", order = " << ctx.e << ", n = " << ctx.n << '\n';
    for (const auto& r : rows) {
      std::cout << "d" << r.j << " = " << show(r.d, r.n) << "  [" << r.n << "," << r.k << "]  dual d = "
                << (r.d_dual ? show(*r.d_dual, r.n) : std::string("unknown")) << "  lcd = " << (*r.lcd ? "yes" : "no")
                << "  reversible = " << (r.reversible ? "yes" : "no") << "  (";
      const auto& prov = profile[r.j].provenance;
      for (std::size_t i = 0; i < prov.size(); ++i) std::cout << (i ? ", " : "") << prov[i];
      std::cout << ")\n";
    }
  }
  return kOk;
}

int cmd_dual(const CodeArgs& a) {
  const RingContext ctx = context_of(a);
  const ProfileOptions po = profile_options(a);
  const DualSummary s = dual_summary(ctx, *a.j, po);
  if (a.j && *a.j >= 1 && *a.j <= ctx.L - 1) dual_code(PolycyclicCode(ctx, *a.j));
  if (a.json) {
    std::cout << to_json(s).dump(2) << '\n';
    return kOk;
  }
  std::cout << "dual of C" << s.j << ": [" << s.n << "," << s.k_dual << ","
            << (s.d_dual ? std::to_string(*s.d_dual) : std::string("unknown")) << "]  (";
  for (std::size_t i = 0; i < s.provenance.size(); ++i) std::cout << (i ? ", " : "") << s.provenance[i];
  std::cout << ")\n";
  return kOk;
}

int cmd_lcd(const CodeArgs& a, const std::string& methods) {
  const RingContext ctx = context_of(a);
  LcdMethods which = LcdMethods::All;
  if (methods == "oracle")
    which = LcdMethods::Oracle;
  else if (methods == "theorem")
    which = LcdMethods::Theorem;
  json out = json::array();
  for (int j : indices(a, ctx)) {
    const LcdVerdict v = lcd_verdict(PolycyclicCode(ctx, j), which);
    if (a.json) {
      out.push_back(to_json(v));
      continue;
    }
    std::cout << "C" << v.j << ": " << (v.is_lcd ? "LCD" : "not LCD") << "  hull dimension " << v.hull_dim << "  (";
    for (std::size_t i = 0; i < v.methods.size(); ++i) std::cout << (i ? ", " : "") << v.methods[i];
    std::cout << ")\n";
  }
  if (a.json) std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_fixtures(const std::string& which, bool dump, std::optional<std::size_t> cap, unsigned workers) {
  if (dump) {
    std::cout << fixtures_csv();
    return kOk;
  }
  std::vector<std::string> names;
  if (which == "all")
    names = fixture_names();
  else
    names = {which};
  FixtureOptions fo;
  fo.oracle_cap = cap.value_or(enumeration_cap());
  fo.workers = workers;
  bool ok = true;
  for (const auto& name : names) {
    const FixtureReport rep = run_fixture(name, fo);
    for (const auto& c : rep.checks)
      if (!c.pass()) std::cout << "  MISMATCH " << name << ": " << c.item << " expected " << c.expected << ", got " << c.actual << '\n';
    std::cout << (rep.passed() ? "PASS " : "FAIL ") << name << " (" << rep.checks.size() - rep.failures() << "/"
              << rep.checks.size() << " values)\n";
    ok = ok && rep.passed();
  }
  return ok ? kOk : kMismatch;
}

int cmd_conjecture(int vmax, int tmax, int dim_cap, unsigned workers, bool csv) {
  const ConjectureReport rep = conjecture_scan(vmax, tmax, dim_cap, workers);
  if (csv) {
    std::cout << conjecture_csv(rep);
    return kOk;
  }
  for (const auto& r : rep.rows)
    if (!r.is_lcd)
      std::cout << "counterexample: v=" << r.v << " T=" << r.T << " j=" << r.j << " hull dimension " << r.hull_dim << '\n';
  std::cout << "scanned " << rep.rows.size() << " codes (v <= " << vmax << ", T <= " << tmax << ", n <= " << dim_cap
            << "), skipped " << rep.skipped << ", counterexamples " << rep.counterexamples << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary polycyclic codes over powers of irreducible polynomials"};
  app.require_subcommand(1);

  CodeArgs analyze_args, dual_args, lcd_args;
  auto* analyze = app.add_subcommand("analyze", "distance profile with dual, LCD and reversibility columns");
  add_code_options(analyze, analyze_args, false);
  analyze->add_flag("--csv", analyze_args.csv, "emit CSV");
  analyze->get_option("--json")->excludes("--csv");

  auto* dual = app.add_subcommand("dual", "dual code summary for one index");
  add_code_options(dual, dual_args, true);

  std::string methods = "all";
  auto* lcd = app.add_subcommand("lcd", "LCD verdicts");
  add_code_options(lcd, lcd_args, false);
  lcd->add_option("--methods", methods, "all | oracle | theorem")->check(CLI::IsMember({"all", "oracle", "theorem"}));

  std::string which = "all";
  bool dump = false;
  std::optional<std::size_t> fixture_cap;
  unsigned fixture_workers = 0;
  auto* fixtures = app.add_subcommand("fixtures", "recompute embedded reference values and diff");
  std::vector<std::string> choices = fixture_names();
  choices.emplace_back("all");
  fixtures->add_option("--which", which, "fixture name or all")->check(CLI::IsMember(choices));
  fixtures->add_flag("--dump-fixtures", dump, "print the embedded expectations as CSV");
  fixtures->add_option("--oracle-cap", fixture_cap, "largest dimension enumerated by the oracle");
  fixtures->add_option("--workers", fixture_workers, "oracle threads");

  int vmax = 0, tmax = 3, dim_cap = 64;
  unsigned conj_workers = 0;
  bool conj_csv = false;
  auto* conj = app.add_subcommand("conjecture", "LCD scan over the trinomial family");
  conj->add_option("--vmax", vmax, "largest v")->required();
  conj->add_option("--tmax", tmax, "largest T")->required();
  conj->add_option("--dim-cap", dim_cap, "largest code length scanned")->required();
  conj->add_option("--workers", conj_workers, "scan threads");
  conj->add_flag("--csv", conj_csv, "emit CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args);
    if (*dual) return cmd_dual(dual_args);
    if (*lcd) return cmd_lcd(lcd_args, methods);
    if (*fixtures) return cmd_fixtures(which, dump, fixture_cap, fixture_workers);
    if (*conj) return cmd_conjecture(vmax, tmax, dim_cap, conj_workers, conj_csv);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
