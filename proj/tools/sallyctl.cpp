#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sally/families.hpp"
#include "sally/input.hpp"
#include "sally/parse.hpp"
#include "sally/report.hpp"

using namespace sally;

namespace {

struct CommonOpts {
  std::string field_flag;  // "q" | "p:<prime>" | ""
  unsigned bound_reduction = 25;
  unsigned bound_gb_degree = 40;
  uint64_t seed = 0;
  unsigned trials = 0;
  bool oracle = false;
  std::string format = "table";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field_flag, "coefficient field: q or p:<prime>");
  cmd->add_option("--bound-reduction", o.bound_reduction,
                  "largest power checked when validating a reduction");
  cmd->add_option("--bound-gb-degree", o.bound_gb_degree,
                  "degree cap for untruncated Groebner runs");
  cmd->add_option("--seed", o.seed, "seed for sampled reductions");
  cmd->add_option("--trials", o.trials, "sampled reductions for the independence report");
  cmd->add_flag("--oracle", o.oracle, "enable elimination-route cross-checks");
  cmd->add_option("--format", o.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
}

// field precedence: --field flag > input/config field > SALLY_FIELD env >
// GF(32003)
FieldSpec resolve_field(const CommonOpts& o, const std::optional<FieldSpec>& from_input) {
  if (!o.field_flag.empty()) return parse_field_spec(o.field_flag);
  if (from_input) return *from_input;
  if (const char* env = std::getenv("SALLY_FIELD"); env && *env)
    return parse_field_spec(env);
  return {FieldKind::PrimeField, 32003};
}

template <class F>
int analyze_poly(const AnalysisInput& in, const FieldSpec& fs, const CommonOpts& o) {
  Ring ring = std::make_shared<RingSpec>(in.variables, fs, MonomialOrder{});
  PolyEngine<F> e(ring, o.bound_gb_degree);
  typename PolyEngine<F>::Id i;
  if (in.ideal_maximal) {
    i = e.maximal();
  } else {
    std::vector<Polynomial<F>> gens;
    for (auto& s : in.ideal_gens) gens.push_back(parse_poly<F>(ring, s));
    i = e.ideal(std::move(gens));
  }
  typename PolyEngine<F>::Id j;
  if (in.reduction_auto) {
    std::mt19937_64 rng(o.seed);
    for (unsigned attempt = 0; attempt < 20 && !j.valid(); ++attempt) {
      auto cand = e.random_reduction_candidate(i, rng);
      if (cand.gens().size() < e.dim()) continue;
      try {
        if (is_reduction(e, cand, i, o.bound_reduction)) j = cand;
      } catch (const NotArtinian&) {
      } catch (const GBDegreeCapExceeded&) {
      }
    }
    if (!j.valid())
      throw std::runtime_error("no sampled reduction found; supply one explicitly");
  } else {
    std::vector<Polynomial<F>> gens;
    for (auto& s : in.reduction_gens) gens.push_back(parse_poly<F>(ring, s));
    j = e.ideal(std::move(gens));
  }

  Provenance prov;
  prov.engine = e.name();
  prov.field = fs.str();
  prov.seed = o.seed;
  prov.bound_reduction = o.bound_reduction;
  prov.bound_gb_degree = o.bound_gb_degree;
  prov.trials = o.trials;
  prov.oracle = o.oracle;
  auto res = run_analysis(e, i, j, prov);
  res.ring_desc = ring->str();
  if (o.format == "json")
    std::cout << analysis_json(prov, res).dump(2) << "\n";
  else
    std::cout << analysis_table(prov, res);
  return 0;
}

int analyze_semigroup(const AnalysisInput& in, const FieldSpec& fs, const CommonOpts& o) {
  long p = fs.kind == FieldKind::PrimeField ? fs.p : 32003;
  SgEngine e(sg_closure(in.sg_gens), p);
  SemigroupIdeal i =
      in.ideal_maximal
          ? e.maximal()
          : [&] {
              std::vector<long> v;
              for (auto& s : in.ideal_gens) v.push_back(parse_valuation(s));
              return e.ideal(std::move(v));
            }();
  SemigroupIdeal j;
  if (in.reduction_auto) {
    // the principal monomial candidate at the smallest valuation of I
    j = e.ideal({i.valuation_gens.front()});
  } else {
    std::vector<long> v;
    for (auto& s : in.reduction_gens) v.push_back(parse_valuation(s));
    j = e.ideal(std::move(v));
  }

  Provenance prov;
  prov.engine = e.name();
  prov.field = fs.str();
  prov.seed = o.seed;
  prov.bound_reduction = o.bound_reduction;
  prov.bound_gb_degree = o.bound_gb_degree;
  prov.trials = o.trials;
  prov.oracle = o.oracle;
  auto res = run_analysis(e, i, j, prov);
  std::string desc = "k[[";
  for (size_t k = 0; k < e.sg->generators.size(); ++k)
    desc += (k ? ", " : "") + std::string("t^") + std::to_string(e.sg->generators[k]);
  res.ring_desc = desc + "]]";
  if (o.format == "json")
    std::cout << analysis_json(prov, res).dump(2) << "\n";
  else
    std::cout << analysis_table(prov, res);
  return 0;
}

int cmd_analyze(const std::string& path, const CommonOpts& o) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  AnalysisInput in;
  try {
    in = parse_input(f);
  } catch (const InputError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }
  FieldSpec fs = resolve_field(o, in.field);
  CommonOpts eff = o;
  if (in.seed) eff.seed = *in.seed;
  if (in.bound_reduction) eff.bound_reduction = *in.bound_reduction;
  if (in.bound_gb_degree) eff.bound_gb_degree = *in.bound_gb_degree;
  if (in.trials) eff.trials = *in.trials;
  if (in.oracle) eff.oracle = *in.oracle;
  auto t0 = std::chrono::steady_clock::now();
  int rc;
  if (in.semigroup)
    rc = analyze_semigroup(in, fs, eff);
  else if (fs.kind == FieldKind::Rationals)
    rc = analyze_poly<Rat>(in, fs, eff);
  else
    rc = analyze_poly<GF>(in, fs, eff);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "wall time: " << ms << " ms\n";
  return rc;
}

void print_checks(const std::string& label, const std::vector<Check>& checks, json* doc,
                  int& fails) {
  json rows = json::array();
  for (auto& c : checks) {
    if (!c.pass) ++fails;
    if (doc) {
      json r;
      r["name"] = c.name;
      r["expected"] = c.expected;
      r["actual"] = c.actual;
      r["status"] = c.pass ? "PASS" : "FAIL";
      rows.push_back(r);
    } else {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << label << ": " << c.name
                << " (expected " << c.expected << ", got " << c.actual << ")\n";
    }
  }
  if (doc) (*doc)[label] = rows;
}

int cmd_verify_paper(bool fast, bool inject_failure, const CommonOpts& o) {
  int fails = 0;
  json doc;
  json* jp = o.format == "json" ? &doc : nullptr;
  struct Row {
    ExampleId id;
    bool rationals;
  };
  std::vector<Row> plan = {
      {ExampleId::Semigroup5_6_9, false},  {ExampleId::Semigroup6_7_9_17, false},
      {ExampleId::Graph_n1, false},        {ExampleId::Graph_n1, true},
      {ExampleId::Graph_n2, false},        {ExampleId::Graph_n2, true},
      {ExampleId::Graph_n3, false},        {ExampleId::Graph_n3, true},
  };
  for (auto& row : plan) {
    std::string label = example_token(row.id);
    bool graph = row.id == ExampleId::Graph_n1 || row.id == ExampleId::Graph_n2 ||
                 row.id == ExampleId::Graph_n3;
    if (graph) label += row.rationals ? " over QQ" : " over GF(32003)";
    if (fast && row.id == ExampleId::Graph_n3) {
      if (jp)
        (*jp)[label] = "SKIPPED";
      else
        std::cout << "SKIP  " << label << " (--fast)\n";
      continue;
    }
    std::vector<Check> checks =
        !graph ? semigroup_example_checks(row.id)
        : row.rationals
            ? example_checks<Rat>(row.id, {FieldKind::Rationals, 0}, o.bound_gb_degree)
            : example_checks<GF>(row.id, {FieldKind::PrimeField, 32003},
                                       o.bound_gb_degree);
    print_checks(label, checks, jp, fails);
  }
  if (inject_failure) {
    std::vector<Check> bad = {{"deliberately wrong expectation", "0", "1", false}};
    print_checks("self-test", bad, jp, fails);
  }
  if (jp) {
    doc["failures"] = std::to_string(fails);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (fails ? "FAILURES: " : "all rows passed: ")
              << (fails ? std::to_string(fails) : "") << "\n";
  }
  return fails ? 1 : 0;
}

int cmd_question(unsigned n, bool force, const CommonOpts& o) {
  if (n < 1) {
    std::cerr << "error: n must be >= 1\n";
    return 2;
  }
  if (n > 4 && !force) {
    std::cerr << "error: n > 4 exceeds the default budget; pass --force to proceed\n";
    return 2;
  }
  FieldSpec fs = resolve_field(o, {});
  FamilyQuestionReport rep = fs.kind == FieldKind::Rationals
                             ? family_question<Rat>(n, fs, o.bound_gb_degree)
                             : family_question<GF>(n, fs, o.bound_gb_degree);
  if (o.format == "json") {
    json doc;
    doc["n"] = std::to_string(n);
    doc["field"] = fs.str();
    json a = json::array();
    for (unsigned k = 1; k <= rep.completed_k; ++k) a.push_back(static_cast<bool>(rep.a[k]));
    doc["a_per_k"] = a;
    doc["a"] = rep.a_all;
    doc["b"] = rep.b;
    doc["c"] = rep.c;
    doc["complete"] = rep.complete;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "whiskered-cycle family, n = " << n << " over " << fs.str() << "\n";
    for (unsigned k = 1; k <= rep.completed_k; ++k)
      std::cout << "  (a) J cap I^" << k << " = JI^" << k - 1 << ": "
                << (rep.a[k] ? "TRUE" : "FALSE") << "\n";
    if (rep.complete) {
      std::cout << "  (b) lambda(I^" << n + 1 << "/JI^" << n
                << ") = 1: " << (rep.b ? "TRUE" : "FALSE") << "\n";
      std::cout << "  (c) I^" << n + 1 << " inside J: " << (rep.c ? "TRUE" : "FALSE")
                << "\n";
    } else {
      std::cout << "  PARTIAL: degree cap reached after k = " << rep.completed_k << "\n";
    }
    std::cout << "  (evidence only; no general claim)\n";
  }
  return rep.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sally-module and associated-graded-ring invariants"};
  app.require_subcommand(1);

  CommonOpts ao, vo, qo;
  std::string input_path;
  auto* analyze = app.add_subcommand("analyze", "analyze an (I, J) pair from an input file");
  analyze->add_option("input", input_path, "input document")->required();
  add_common(analyze, ao);

  bool fast = false, inject = false;
  auto* verify = app.add_subcommand("verify-paper", "recompute the recorded example tables");
  verify->add_flag("--fast", fast, "skip the largest whiskered-cycle example");
  verify->add_flag("--self-test-fail", inject,
                   "inject a failing row to exercise the failure path");
  add_common(verify, vo);

  unsigned qn = 1;
  bool force = false;
  auto* question = app.add_subcommand("question", "evidence battery for the family question");
  question->add_option("n", qn, "family parameter")->required();
  question->add_flag("--force", force, "allow n beyond the default budget");
  add_common(question, qo);

  CLI11_PARSE(app, argc, argv);
  try {
    if (analyze->parsed()) return cmd_analyze(input_path, ao);
    if (verify->parsed()) return cmd_verify_paper(fast, inject, vo);
    return cmd_question(qn, force, qo);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
