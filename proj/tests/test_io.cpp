#include <catch2/catch_amalgamated.hpp>

#include "sally/input.hpp"
#include "sally/report.hpp"
#include "util.hpp"

using namespace sally;

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("q").kind == FieldKind::Rationals);
  CHECK(parse_field_spec("p:32003").p == 32003);
  CHECK(parse_field_spec("p:101").p == 101);
  CHECK_THROWS_AS(parse_field_spec("p:32004"), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(parse_field_spec("gf(7)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_spec("p:x"), std::invalid_argument);
}

TEST_CASE("valuation generator parsing") {
  CHECK(parse_valuation("t^5") == 5);
  CHECK(parse_valuation("12") == 12);
  CHECK_THROWS_AS(parse_valuation("x^2"), std::invalid_argument);
}

TEST_CASE("polynomial-ring input document") {
  auto a = parse_input(std::string(R"(
# depth-zero fixture
[ring]
variables = x, y
field = p:32003

[ideal]
generators = x^4, x^3*y, x*y^3, y^4

[reduction]
generators = x^4, y^4

[config]
seed = 9
trials = 3
oracle = true
)"));
  CHECK_FALSE(a.semigroup);
  CHECK(a.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(a.field);
  CHECK(a.field->p == 32003);
  CHECK(a.ideal_gens.size() == 4);
  CHECK(a.reduction_gens == std::vector<std::string>{"x^4", "y^4"});
  CHECK(a.seed == 9);
  CHECK(a.trials == 3);
  CHECK(a.oracle == true);
}

TEST_CASE("semigroup input with maximal/auto keywords") {
  auto a = parse_input(std::string(R"(
[ring]
semigroup = [5, 6, 9]
[ideal]
maximal
[reduction]
auto
)"));
  CHECK(a.semigroup);
  CHECK(a.sg_gens == std::vector<long>{5, 6, 9});
  CHECK(a.ideal_maximal);
  CHECK(a.reduction_auto);
}

TEST_CASE("input errors carry line numbers") {
  auto expect_line = [](const std::string& text, const std::string& frag) {
    try {
      parse_input(text);
      FAIL("expected InputError");
    } catch (const InputError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(frag) != std::string::npos);
    }
  };
  expect_line("x = 1\n", "outside any section");
  expect_line("[ring]\nvariables = x\n[nope]\n", "unknown section");
  expect_line("[ring]\nvariables = x\nbadline\n", "expected key = value");
  expect_line("[ring]\nvariables = x\nfield = p:6\n", "not prime");
  expect_line("[ring]\nsemigroup = [4, oops]\n", "bad integer");
  expect_line("[ring]\nvariables = x\n[ideal]\ngenerators = x\n", "missing [reduction]");
  expect_line("[ring]\nvariables = x\n[ideal]\n[reduction]\nauto\n", "needs generators");
}

TEST_CASE("round-trip through the canonical serialization") {
  std::vector<std::string> docs = {
      "[ring]\nvariables = x, y, z\nfield = q\n[ideal]\ngenerators = x^2, y^2, z^2, "
      "x*y\n[reduction]\nauto\n[config]\nseed = 3\nbound-reduction = 12\nbound-gb-degree "
      "= 30\ntrials = 4\noracle = true\n",
      "[ring]\nsemigroup = [6, 7, 9, 17]\n[ideal]\nmaximal\n[reduction]\ngenerators = "
      "t^6\n",
  };
  for (auto& d : docs) {
    AnalysisInput a = parse_input(d);
    CHECK(parse_input(to_text(a)) == a);
  }
}

TEST_CASE("report JSON is deterministic and exact-decimal") {
  SgEngine e(sg_closure({5, 6, 9}));
  auto i = e.maximal();
  auto j = e.ideal({5});
  Provenance prov;
  prov.engine = e.name();
  prov.field = "GF(32003)";
  prov.seed = 11;
  prov.trials = 2;
  auto render = [&] {
    auto res = run_analysis(e, i, j, prov);
    res.ring_desc = "k[[t^5, t^6, t^9]]";
    return analysis_json(prov, res).dump();
  };
  std::string once = render(), twice = render();
  CHECK(once == twice);

  json doc = json::parse(once);
  CHECK(doc["schema"] == "sally-report-1");
  CHECK(doc["provenance"]["engine"] == "semigroup");
  CHECK(doc["provenance"]["seed"] == "11");
  CHECK(doc["reduction_number"] == "3");
  CHECK(doc["hilbert"]["e"][0] == "5");
  CHECK(doc["hilbert"]["e"][1] == "7");
  CHECK(doc["depth_class"] == "CohenMacaulay");
  CHECK(doc["hp_numerator"][3] == "1");
  CHECK(doc["ratliff_rush"]["step_sum"] == "7");
  CHECK(doc["theorem_flags"]["gorenstein_length_one_cm"] == true);
  CHECK(doc["independence"]["conclusive"] == true);
  CHECK(doc["assertions_passed"] == true);
  // every numeric leaf is a string (exact decimal contract)
  CHECK(doc["lengths"]["step_from_n1"][0].is_string());
  CHECK(doc["independence"]["samples"][0]["lambda_R_J"] == "5");
}

TEST_CASE("analysis on the groebner engine renders both formats") {
  using testutil::make_ring;
  PolyEngine<GF> e(make_ring({"x", "y"}));
  auto i = e.power(e.maximal(), 2);
  auto j = e.ideal({testutil::pp<GF>(e.ring, "x^2"), testutil::pp<GF>(e.ring, "y^2")});
  Provenance prov;
  prov.engine = e.name();
  prov.field = "GF(32003)";
  prov.oracle = true;
  auto res = run_analysis(e, i, j, prov);
  res.ring_desc = e.ring->str();
  auto doc = analysis_json(prov, res);
  CHECK(doc["depth_class"] == "CohenMacaulay");
  CHECK(doc["hilbert"]["e"][0] == "4");
  std::string table = analysis_table(prov, res);
  CHECK(table.find("reduction number r_J(I)") != std::string::npos);
  CHECK(table.find("CohenMacaulay") != std::string::npos);
}
