#ifndef SALLY_REPORT_HPP
#define SALLY_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sally/invariants.hpp"

namespace sally {

using json = nlohmann::ordered_json;

struct Provenance {
  std::string tool = "sallyctl";
  std::string version = "1.0.0";
  std::string engine;  // "groebner" | "semigroup"
  std::string field;   // "GF(32003)" | "QQ"
  uint64_t seed = 0;
  unsigned bound_reduction = 25;
  unsigned bound_gb_degree = 40;
  unsigned trials = 0;
  bool oracle = false;
};

// Engine-agnostic analysis bundle: everything the report renders, with ideal
// generators already stringified.
struct AnalysisResult {
  std::string ring_desc;
  std::vector<std::string> i_gens, j_gens;
  SallyReport rep;
  TheoremFlags flags;
  std::optional<std::vector<long long>> hp;
  std::vector<char> rr_equals_power;
  std::vector<long long> rr_steps;
  long long rr_step_sum = 0;
  std::optional<IndependenceReport> independence;
};

template <class E>
AnalysisResult run_analysis(const E& e, const typename E::Id& i, const typename E::Id& j,
                            const Provenance& opts) {
  AnalysisResult out;
  for (auto& g : e.gens(i)) out.i_gens.push_back(e.elem_str(g));
  for (auto& g : e.gens(j)) out.j_gens.push_back(e.elem_str(g));
  out.rep = sally_data(e, i, j, 0, opts.bound_reduction);
  out.flags = cm_and_theorem_flags(e, i, j, out.rep);
  if (out.rep.depth_class != DepthClass::AtMostDMinus2) out.hp = hp_numerator(out.rep);
  if (opts.oracle) {
    unsigned k_max = std::max(out.rep.r, 1u);
    if (vv_check(e, i, j, k_max) != vv_check_oracle(e, i, j, k_max))
      throw InvariantViolation(
          "length-route and elimination-route intersection checks disagree");
  }
  auto rr = ratliff_rush(e, i, j, std::max(out.rep.r, 1u));
  out.rr_equals_power = rr.equals_power;
  out.rr_steps = rr.steps;
  out.rr_step_sum = rr.step_sum;
  if (opts.trials > 0) {
    unsigned nmax = out.rep.r + 2;
    out.independence = sample_reductions(
        e, i, opts.trials, opts.seed, nmax, opts.bound_reduction,
        out.rep.depth_class != DepthClass::AtMostDMinus2,
        fixed_sample(e, i, j, nmax, opts.bound_reduction));
  }
  return out;
}

namespace report_detail {

inline json ints(const std::vector<long long>& v, size_t from = 0) {
  json a = json::array();
  for (size_t k = from; k < v.size(); ++k) a.push_back(std::to_string(v[k]));
  return a;
}

inline json bools(const std::vector<char>& v, size_t from = 0) {
  json a = json::array();
  for (size_t k = from; k < v.size(); ++k) a.push_back(static_cast<bool>(v[k]));
  return a;
}

inline json sample_json(const SampleLengths& s) {
  json o;
  o["reduction"] = s.description;
  o["reduction_number"] = std::to_string(s.reduction_number);
  o["lambda_R_J"] = std::to_string(s.colen_J);
  o["lambda_I_mod_J"] = std::to_string(s.len_I_mod_J);
  o["lambda_R_J_colon_I"] = std::to_string(s.colen_J_colon_I);
  json sal = json::array();
  for (auto v : s.sally) sal.push_back(std::to_string(v));
  o["sally"] = sal;
  json st = json::array();
  for (auto v : s.step) st.push_back(std::to_string(v));
  o["step"] = st;
  json it = json::array();
  for (auto v : s.inter) it.push_back(std::to_string(v));
  o["intersection_colength"] = it;
  return o;
}

}  // namespace report_detail

// Deterministic machine-readable report: fixed key order, integers rendered
// as exact decimal strings. Wall time is deliberately absent so identical
// (input, seed, version) produce byte-identical documents.
inline json analysis_json(const Provenance& p, const AnalysisResult& r) {
  using namespace report_detail;
  json doc;
  doc["schema"] = "sally-report-1";
  json prov;
  prov["tool"] = p.tool;
  prov["version"] = p.version;
  prov["engine"] = p.engine;
  prov["field"] = p.field;
  prov["seed"] = std::to_string(p.seed);
  prov["bound_reduction"] = std::to_string(p.bound_reduction);
  prov["bound_gb_degree"] = std::to_string(p.bound_gb_degree);
  prov["trials"] = std::to_string(p.trials);
  prov["oracle"] = p.oracle;
  doc["provenance"] = prov;

  json input;
  input["ring"] = r.ring_desc;
  input["ideal"] = r.i_gens;
  input["reduction"] = r.j_gens;
  doc["input"] = input;

  doc["dimension"] = std::to_string(r.rep.d);
  doc["reduction_number"] = std::to_string(r.rep.r);
  json hil;
  hil["values"] = ints(r.rep.hilbert.values);
  hil["e"] = ints(r.rep.e);
  hil["postulation"] = std::to_string(r.rep.hilbert.postulation);
  doc["hilbert"] = hil;

  json lengths;
  lengths["lambda_R_I"] = std::to_string(r.rep.lambda_R_I);
  lengths["lambda_I_mod_J"] = std::to_string(r.rep.lambda_I_mod_J);
  lengths["sally_from_n2"] = ints(r.rep.sally_lengths, 2);
  lengths["step_from_n1"] = ints(r.rep.step_lengths, 1);
  doc["lengths"] = lengths;
  doc["sally_coefficients"] = ints(r.rep.s);
  doc["valabrega_valla_from_k1"] = bools(r.rep.vv_flags, 1);
  doc["depth_class"] = to_string(r.rep.depth_class);

  json audit;
  audit["northcott"] = r.rep.audit.northcott_holds;
  audit["huneke_ooishi_equality"] = r.rep.audit.huneke_ooishi_equality;
  audit["i2_equals_ji"] = r.rep.audit.i2_equals_ji;
  audit["sandwich_lower"] = std::to_string(r.rep.audit.sandwich_lower);
  audit["sandwich_upper"] = std::to_string(r.rep.audit.sandwich_upper);
  audit["huckaba_equality"] = r.rep.audit.sandwich_right_equality;
  doc["audit"] = audit;

  doc["hp_numerator"] = r.hp ? ints(*r.hp) : json();

  json fl;
  fl["n_one"] = std::to_string(r.flags.n_one);
  fl["length_one_step_criteria"] = r.flags.length_one_step_applicable;
  fl["cm_iff_conditions"] = r.flags.cm_criterion_holds;
  fl["dim_v_at_least_two_cm"] = r.flags.dim_v_cm_applicable;
  fl["gorenstein_length_one_cm"] = r.flags.gorenstein_length_one_applicable;
  fl["depth_d_minus_one_criterion"] = r.flags.depth_criterion_applicable;
  fl["length_one_at_n1"] = r.flags.length_one_at_n1_applicable;
  fl["consistent_with_depth"] = r.flags.consistent;
  doc["theorem_flags"] = fl;

  json rr;
  rr["equals_power"] = bools(r.rr_equals_power);
  rr["steps"] = ints(r.rr_steps);
  rr["step_sum"] = std::to_string(r.rr_step_sum);
  doc["ratliff_rush"] = rr;

  if (r.independence) {
    json ind;
    ind["conclusive"] = r.independence->conclusive;
    ind["invariant_lengths_constant"] = r.independence->invariant_lengths_constant;
    ind["step_lengths_constant"] = r.independence->step_lengths_constant;
    ind["intersection_varies"] = r.independence->inter_varies;
    json samples = json::array();
    for (auto& s : r.independence->samples) samples.push_back(report_detail::sample_json(s));
    ind["samples"] = samples;
    doc["independence"] = ind;
  } else {
    doc["independence"] = json();
  }
  doc["assertions_passed"] = true;
  return doc;
}

// Human-readable rendering of the same data.
inline std::string analysis_table(const Provenance& p, const AnalysisResult& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << "  " << k;
    for (size_t i = k.size(); i < 34; ++i) os << ' ';
    os << v << "\n";
  };
  auto list = [](const std::vector<long long>& v, size_t from = 0) {
    std::string s;
    for (size_t k = from; k < v.size(); ++k) s += (s.empty() ? "" : ", ") + std::to_string(v[k]);
    return s;
  };
  os << "analysis (" << p.engine << " engine, " << p.field << ")\n";
  os << "  ring: " << r.ring_desc << "\n";
  std::string ig, jg;
  for (auto& g : r.i_gens) ig += (ig.empty() ? "" : ", ") + g;
  for (auto& g : r.j_gens) jg += (jg.empty() ? "" : ", ") + g;
  row("I", "(" + ig + ")");
  row("J", "(" + jg + ")");
  row("dimension d", std::to_string(r.rep.d));
  row("reduction number r_J(I)", std::to_string(r.rep.r));
  row("lambda(R/I)", std::to_string(r.rep.lambda_R_I));
  row("e_i", list(r.rep.e));
  row("s_i", list(r.rep.s));
  row("postulation", std::to_string(r.rep.hilbert.postulation));
  row("lambda(I^n/J^{n-1}I), n>=2", list(r.rep.sally_lengths, 2));
  row("lambda(I^n/JI^{n-1}), n>=1", list(r.rep.step_lengths, 1));
  std::string vv;
  for (size_t k = 1; k < r.rep.vv_flags.size(); ++k)
    vv += std::string(vv.empty() ? "" : ", ") + (r.rep.vv_flags[k] ? "true" : "false");
  row("J cap I^k = JI^{k-1}, k>=1", vv);
  row("depth class", to_string(r.rep.depth_class));
  if (r.hp) row("HP numerator", list(*r.hp));
  row("Ratliff-Rush step sum", std::to_string(r.rr_step_sum) + " (e1 = " +
                                   std::to_string(r.rep.e[1]) + ")");
  if (r.independence)
    row("sampled reductions", std::to_string(r.independence->samples.size()) +
                                  (r.independence->conclusive ? " (conclusive)"
                                                              : " (inconclusive)"));
  return os.str();
}

}  // namespace sally

#endif
