#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polycore/evaluator.hpp"
#include "polycore/parse.hpp"
#include "polycore/quadext.hpp"
#include "polycore/roots.hpp"
#include "support.hpp"

using namespace sextic;
using oracle::P;

namespace {

BivarPoly random_poly(std::mt19937_64& rng, int degree, int coeff_range) {
  std::uniform_int_distribution<int> c(-coeff_range, coeff_range);
  BivarPoly f;
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      int v = c(rng);
      if (v != 0) f = f + BivarPoly::monomial(i, j, Rat(v));
    }
  }
  return f;
}

// Real roots of p counted by sign changes on a fine rational grid, for
// polynomials whose roots are simple and well separated.
int grid_root_count(const UPoly& p, const Rat& lo, const Rat& hi, int steps) {
  int count = 0;
  Rat step = (hi - lo) / steps;
  int prev = p.sign_at(lo);
  for (int i = 1; i <= steps; ++i) {
    int s = p.sign_at(lo + step * i);
    if (s == 0) {
      ++count;
      ++i;
      s = p.sign_at(lo + step * i);
    } else if (prev != 0 && s != prev) {
      ++count;
    }
    prev = s;
  }
  return count;
}

}  // namespace

TEST_CASE("parse accepts the documented grammar") {
  BivarPoly f = P("(y^2 - x^3 - x)^2 - y + 10");
  CHECK(f.coeff(0, 4) == 1);
  CHECK(f.coeff(3, 2) == -2);
  CHECK(f.coeff(6, 0) == 1);
  CHECK(f.coeff(0, 1) == -1);
  CHECK(f.coeff(0, 0) == 10);
  CHECK(P("x^2/4 - 3/2*y") == BivarPoly::monomial(2, 0, make_rat(1, 4)) +
                                  BivarPoly::monomial(0, 1, make_rat(-3, 2)));
  CHECK(P("2^3^2") == BivarPoly::constant(Rat(512)));
}

TEST_CASE("parse rejects malformed input with a position") {
  for (const char* bad : {"x +", "2x", "x^y", "(x + 1", "x / y", "x / 0", "z", "x^-1", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), ParseError);
  }
  try {
    parse("x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(e.kind() == Error::Kind::Input);
  }
}

TEST_CASE("format and the JSON term format round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    BivarPoly f = random_poly(rng, 6, 9);
    f = f + BivarPoly::monomial(1, 2, make_rat(trial + 1, 7));
    CHECK(parse(format(f)) == f);
    CHECK(poly_from_json(to_json(f)) == f);
  }
  CHECK(format(BivarPoly()) == "0");
}

TEST_CASE("PointEvaluator matches term-by-term evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pt(-1000000, 1000000);
  for (int trial = 0; trial < 40; ++trial) {
    BivarPoly f = random_poly(rng, 6, 50) + BivarPoly::monomial(2, 1, make_rat(1, 3));
    PointEvaluator ev(f);
    for (int k = 0; k < 20; ++k) {
      Int x = pt(rng), y = pt(rng);
      CHECK(ev(x, y) == oracle::eval(f, x, y));
      CHECK(f.eval(Rat(x), Rat(y)) == oracle::eval(f, x, y));
    }
  }
}

TEST_CASE("the Dirichlet fixture point evaluates to -16733") {
  BivarPoly f = P("(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5");
  CHECK(PointEvaluator(f)(Int(-7), Int(-5)) == -16733);
  CHECK(oracle::eval(f, Int(-7), Int(-5)) == -16733);
}

TEST_CASE("substitution composes with its inverse") {
  std::mt19937_64 rng(3);
  BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
  for (int trial = 0; trial < 20; ++trial) {
    BivarPoly f = random_poly(rng, 5, 5);
    BivarPoly linear = f.substitute(x + 3 * y, y);
    CHECK(linear.substitute(x - 3 * y, y) == f);
    BivarPoly weighted = f.substitute(x, y - x * x + 2 * x);
    CHECK(weighted.substitute(x, y + x * x - 2 * x) == f);
  }
}

TEST_CASE("homogeneous decomposition reassembles") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BivarPoly f = random_poly(rng, 6, 20);
    auto parts = decompose(f);
    CHECK(reassemble(parts) == f);
    for (int k = 0; k <= 6; ++k) CHECK(parts[k].to_poly() == f.homogeneous_part(k));
  }
  CHECK_THROWS_AS(decompose(P("x^7")), Error);
}

TEST_CASE("binary form division and gcd") {
  BinaryForm a = BinaryForm::from_poly(P("(x - 2*y)*(x^2 + y^2)"), 3);
  BinaryForm b = BinaryForm::from_poly(P("x - 2*y"), 1);
  auto q = divide_exact(a, b);
  REQUIRE(q);
  CHECK(q->to_poly() == P("x^2 + y^2"));
  CHECK_FALSE(divide_exact(a, BinaryForm::from_poly(P("x + y"), 1)));
  BinaryForm c = BinaryForm::from_poly(P("(x - 2*y)^2*(3*x + y)"), 3);
  CHECK(form_gcd(a, c).to_poly() == P("x - 2*y"));
  // The y-power is part of the gcd.
  BinaryForm d = BinaryForm::from_poly(P("y^2*x"), 3);
  BinaryForm e = BinaryForm::from_poly(P("y*(x^2 + y^2)"), 3);
  CHECK(form_gcd(d, e).to_poly() == P("y"));
}

TEST_CASE("square-free profiles of constructed forms") {
  struct Case {
    const char* form;
    Profile profile;
  };
  const Case cases[] = {
      {"x^6 + y^6", {{1, 6}}},
      {"x^4*(x^2 + y^2)", {{4, 1}, {1, 2}}},
      {"(x^3 - 2*y^3)^2", {{2, 3}}},
      {"x^5*y", {{5, 1}, {1, 1}}},
      {"x^3*(x^3 + y^3)", {{3, 1}, {1, 3}}},
      {"(x^2 + y^2)^3", {{3, 2}}},
      {"(2*x - 3*y)^6", {{6, 1}}},
      {"y^2*(x^2 - 5*y^2)^2", {{2, 3}}},
      {"x^2*y^2*(x - y)^2", {{2, 3}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.form);
    BinaryForm f = BinaryForm::from_poly(P(c.form), 6);
    CHECK(squarefree_profile(f) == c.profile);
    // Product of the factors reproduces the form up to a constant.
    BinaryForm prod = BinaryForm::from_poly(BivarPoly::constant(Rat(1)), 0);
    for (const auto& sf : squarefree_factors(f)) prod = prod * sf.factor.pow(sf.multiplicity);
    CHECK(divide_exact(f, prod));
    CHECK(prod.degree() == 6);
  }
}

TEST_CASE("Sturm counts agree with a sign-change grid") {
  // Constructed from known roots so the grid oracle is exact.
  struct Case {
    const char* poly;
    int roots;
  };
  const Case cases[] = {
      {"(x - 1)*(x - 2)*(x + 3)", 3},
      {"(x^2 - 2)*(x^2 + 1)", 2},
      {"x^5 - 7*x^3 + 10*x", 5},
      {"(4*x - 1)*(x^2 - 3)*(x^2 - 5)", 5},
      {"x^4 + 1", 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.poly);
    UPoly p = P(c.poly).as_upoly_x();
    SturmSequence s(p);
    Rat lo(-101, 10), hi(103, 10);
    CHECK(s.count(lo, hi) == c.roots);
    CHECK(grid_root_count(p, lo, hi, 4000) == c.roots);
    auto ivs = isolate_real_roots(p);
    CHECK(static_cast<int>(ivs.size()) == c.roots);
    for (auto& iv : ivs) {
      CHECK(s.count(iv.lo, iv.hi) == 1);
      refine(iv, Rat(1, 1 << 20));
      CHECK(iv.width() <= Rat(1, 1 << 20));
      CHECK(p.sign_at(iv.lo) * p.sign_at(iv.hi) <= 0);
    }
  }
}

TEST_CASE("exact rational roots are recognized") {
  UPoly p = P("(4*x - 1)*(x^2 - 3)").as_upoly_x();
  int rational = 0;
  for (const auto& iv : isolate_real_roots(p)) {
    if (auto r = exact_rational_root(iv)) {
      CHECK(*r == make_rat(1, 4));
      ++rational;
    }
  }
  CHECK(rational == 1);
}

TEST_CASE("convergents of sqrt 2 and sqrt 5 approximate within 1/q^2") {
  for (long k : {2L, 3L, 5L}) {
    UPoly p = UPoly({Rat(-k), Rat(0), Rat(1)});
    auto ivs = isolate_real_roots(p);
    auto conv = convergents(ivs.back(), 20);
    REQUIRE(conv.size() == 20);
    for (const auto& [num, den] : conv) {
      // |num^2 - k den^2| small is the exact convergent property here.
      Int e = num * num - k * den * den;
      CHECK(abs(e) <= 2 * k);
    }
  }
  UPoly rational = P("2*x - 3").as_upoly_x();
  CHECK_THROWS_AS(convergents(isolate_real_roots(rational).front(), 5), Error);
}

TEST_CASE("definiteness of binary forms") {
  auto def = [](const char* s, int d) { return definiteness(BinaryForm::from_poly(P(s), d)); };
  CHECK(def("x^6 + y^6", 6) == Definiteness::PositiveDefinite);
  CHECK(def("-(x^2 + y^2)^3", 6) == Definiteness::NegativeDefinite);
  CHECK(def("(x^2 - 2*y^2)^2*(x^2 + y^2)", 6) == Definiteness::PositiveSemi);
  CHECK(def("x^6", 6) == Definiteness::PositiveSemi);
  CHECK(def("x^5*y", 6) == Definiteness::Indefinite);
  CHECK(def("x^6 - x^3*y^3 + y^6", 6) == Definiteness::PositiveDefinite);
}

TEST_CASE("quadratic extension arithmetic and exact signs") {
  QuadExt a(2, Rat(1), Rat(1));  // 1 + sqrt 2
  QuadExt b = a.inverse();
  CHECK(a * b == QuadExt(2, Rat(1)));
  CHECK(a.norm() == -1);
  CHECK(QuadExt(2, Rat(-3), Rat(2)).sign() == -1);  // -3 + 2 sqrt 2 < 0
  CHECK(QuadExt(2, Rat(-2), Rat(2)).sign() == 1);
  CHECK(QuadExt(5, Rat(3, 2), Rat(1, 2)).pow(2) == QuadExt(5, Rat(7, 2), Rat(3, 2)));
}

TEST_CASE("integer roots and rational square roots") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    Int n = Int(static_cast<unsigned long>(rng() >> 4)) * Int(static_cast<unsigned long>(rng() >> 4));
    Int s = isqrt(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
    Int c = iroot(n, 3);
    CHECK(c * c * c <= n);
    CHECK((c + 1) * (c + 1) * (c + 1) > n);
  }
  CHECK(rational_sqrt(make_rat(9, 49)) == make_rat(3, 7));
  CHECK_FALSE(rational_sqrt(make_rat(2, 9)));
  CHECK_FALSE(rational_sqrt(Rat(-4)));
}
