#include <catch2/catch_amalgamated.hpp>

#include "util.hpp"

using namespace sally;
using testutil::make_ring;
using testutil::pp;

TEST_CASE("s-polynomial examples") {
  auto r = make_ring({"x", "y"});
  auto x2 = pp<GF>(r, "x^2"), xy = pp<GF>(r, "x*y");
  CHECK(s_polynomial(x2, xy).is_zero());

  auto f = pp<GF>(r, "x^2 - y"), g = pp<GF>(r, "x*y - 1");
  CHECK(s_polynomial(f, g) == pp<GF>(r, "x - y^2"));
  CHECK(s_polynomial(f, f).is_zero());
  CHECK_THROWS_AS(s_polynomial(f, poly_zero<GF>(r)), std::invalid_argument);
}

TEST_CASE("normal form examples") {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger<GF>({pp<GF>(r, "x^2"), pp<GF>(r, "x*y")});
  CHECK(normal_form(pp<GF>(r, "x^2"), gb).is_zero());
  CHECK(normal_form(pp<GF>(r, "y^2"), gb) == pp<GF>(r, "y^2"));
  CHECK(normal_form(pp<GF>(r, "x^2*y + y^2"), gb) == pp<GF>(r, "y^2"));
}

TEST_CASE("normal form is linear") {
  std::mt19937_64 rng(3);
  auto r = make_ring({"x", "y", "z"});
  auto gb = buchberger<GF>({pp<GF>(r, "x^2 - y*z"), pp<GF>(r, "y^2"), pp<GF>(r, "z^3")});
  for (int t = 0; t < 40; ++t) {
    auto f = testutil::random_homog<GF>(r, rng() % 4, rng);
    auto g = testutil::random_homog<GF>(r, rng() % 4, rng);
    GF c = GF::from_int(1 + static_cast<long>(rng() % 100), r->field);
    CHECK(normal_form(f + g, gb) == normal_form(normal_form(f, gb) + normal_form(g, gb), gb));
    CHECK(normal_form(scale(f, c), gb) == scale(normal_form(f, gb), c));
  }
}

TEST_CASE("buchberger simple bases") {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger<GF>({pp<GF>(r, "x"), pp<GF>(r, "y")});
  REQUIRE(gb.elems.size() == 2);
  CHECK(gb.elems[0] == pp<GF>(r, "y"));  // ascending leading terms
  CHECK(gb.elems[1] == pp<GF>(r, "x"));

  auto gb2 = buchberger<GF>({pp<GF>(r, "x^2 - y"), pp<GF>(r, "x*y - 1")});
  bool has = false;
  for (auto& e : gb2.elems)
    if (e == pp<GF>(r, "y^2 - x")) has = true;
  CHECK(has);

  CHECK(buchberger<GF>({poly_zero<GF>(r)}).elems.empty());
}

TEST_CASE("reduced basis property and buchberger criterion audit") {
  std::mt19937_64 rng(17);
  auto audit = [&](auto tag, const Ring& r) {
    using F = decltype(tag);
    std::vector<Polynomial<F>> gens;
    for (int i = 0; i < 4; ++i) {
      auto f = testutil::random_homog<F>(r, 1 + rng() % 3, rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    auto gb = buchberger(gens);
    for (size_t i = 0; i < gb.elems.size(); ++i) {
      CHECK(gb.elems[i].lt().c == F::from_int(1, r->field));
      for (size_t j = 0; j < gb.elems.size(); ++j) {
        if (i == j) continue;
        for (auto& t : gb.elems[i].terms)
          CHECK_FALSE(divides(gb.elems[j].lt().m, t.m));
      }
      for (size_t j = i + 1; j < gb.elems.size(); ++j)
        CHECK(normal_form(s_polynomial(gb.elems[i], gb.elems[j]), gb).is_zero());
    }
    // membership soundness on random combinations of the generators
    for (int t = 0; t < 10 && !gens.empty(); ++t) {
      Polynomial<F> h = poly_zero<F>(r);
      for (auto& g : gens) {
        auto a = testutil::random_homog<F>(r, rng() % 2, rng);
        h = h + a * g;
      }
      CHECK(normal_form(h, gb).is_zero());
    }
  };
  for (int rep = 0; rep < 6; ++rep) {
    audit(GF{}, make_ring({"x", "y", "z"}));
    audit(Rat{}, make_ring({"x", "y", "z"}, {FieldKind::Rationals, 0}));
  }
}

TEST_CASE("uniqueness under shuffling and rescaling") {
  std::mt19937_64 rng(23);
  auto r = make_ring({"x", "y", "z"});
  std::vector<Polynomial<GF>> gens = {
      pp<GF>(r, "x^2 + y*z"), pp<GF>(r, "y^2 - x*z"), pp<GF>(r, "z^2"),
      pp<GF>(r, "x*y + z^2")};
  auto ref = buchberger(gens);
  for (int t = 0; t < 5; ++t) {
    auto copy = gens;
    std::shuffle(copy.begin(), copy.end(), rng);
    for (auto& g : copy)
      g = scale(g, GF::from_int(1 + static_cast<long>(rng() % 31000), r->field));
    auto gb = buchberger(copy);
    REQUIRE(gb.elems.size() == ref.elems.size());
    for (size_t i = 0; i < gb.elems.size(); ++i) CHECK(gb.elems[i] == ref.elems[i]);
  }
}

TEST_CASE("degree cap aborts with a diagnostic") {
  auto r = make_ring({"x", "y"});
  GBOptions opts;
  opts.degree_cap = 1;
  CHECK_THROWS_AS(buchberger<GF>({pp<GF>(r, "x^2 - y"), pp<GF>(r, "x*y - 1")}, opts),
                  GBDegreeCapExceeded);
}

TEST_CASE("truncated basis agrees with the full basis below the bound") {
  std::mt19937_64 rng(29);
  auto r = make_ring({"x", "y", "z"});
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<Polynomial<GF>> gens = {pp<GF>(r, "x^3"), pp<GF>(r, "y^3"), pp<GF>(r, "z^3")};
    for (int i = 0; i < 2; ++i) {
      auto f = testutil::random_homog<GF>(r, 2 + rng() % 2, rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    auto full = buchberger(gens);
    // m^7 is inside (x^3,y^3,z^3) in three variables
    GBOptions opts;
    opts.truncation = 7;
    auto trunc = buchberger(gens, opts);
    std::vector<Polynomial<GF>> expect;
    for (auto& e : full.elems)
      if (e.lt().m.deg < 7) expect.push_back(e);
    REQUIRE(trunc.elems.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
      // below the bound, term for term after discarding high-degree tails
      std::vector<Term<GF>> kept;
      for (auto& t : expect[i].terms)
        if (t.m.deg < 7) kept.push_back(t);
      CHECK(trunc.elems[i] == make_poly(r, std::move(kept)));
    }
  }
}

TEST_CASE("elimination examples") {
  auto r = make_ring({"t", "x", "y"});
  auto none = eliminate<GF>({pp<GF>(r, "t*x - y")}, {0});
  CHECK(none.empty());

  auto rel = eliminate<GF>({pp<GF>(r, "t - x"), pp<GF>(r, "t - y")}, {0});
  REQUIRE(rel.size() == 1);
  CHECK(to_string(rel[0]) == "x - y");

  auto rxy = make_ring({"x", "y"});
  auto same = eliminate<GF>({pp<GF>(rxy, "x^2 - y^2"), pp<GF>(rxy, "x*y")}, {});
  auto gb = buchberger<GF>({pp<GF>(rxy, "x^2 - y^2"), pp<GF>(rxy, "x*y")});
  CHECK(same == gb.elems);

  CHECK_THROWS_AS(eliminate<GF>({pp<GF>(rxy, "x")}, {5}), std::invalid_argument);
}
