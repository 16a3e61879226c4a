#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "eclab/eclab.hpp"
#include "support.hpp"

using namespace sextic;

TEST_CASE("group law basics on y^2 = x^3 - 2") {
  EllipticCurve e(Rat(0), Rat(-2));
  CurvePoint p = CurvePoint::affine(Rat(3), Rat(5));
  REQUIRE(e.contains(p));
  CurvePoint two = ec_add(e, p, p);
  CHECK(two == CurvePoint::affine(make_rat(129, 100), make_rat(-383, 1000)));
  CHECK(e.contains(two));
  CHECK(ec_add(e, p, ec_neg(e, p)).infinity);
  CHECK(ec_mul(e, p, 0).infinity);
  CHECK(ec_mul(e, p, -2) == ec_neg(e, two));
  CHECK(ec_mul(e, p, 5) == ec_add(e, ec_mul(e, p, 2), ec_mul(e, p, 3)));
  CHECK_THROWS_AS(EllipticCurve(Rat(0), Rat(0)), Error);
}

TEST_CASE("Rouse closed form equals an independent triplication") {
  for (long b1 = -10; b1 <= 10; ++b1) {
    if (b1 == 0) continue;
    for (long r = -10; r <= 10; ++r) {
      if (r == 0) continue;
      Rat A = b1;
      oracle::Pt p{false, Rat(0), Rat(r * b1)};
      oracle::Pt t = oracle::triple(A, p);
      auto [x, y] = rouse_closed_form(Int(b1), Int(r));
      CHECK_FALSE(t.inf);
      CHECK(t.x == Rat(x));
      CHECK(t.y == Rat(y));
    }
  }
}

TEST_CASE("Rouse gap identity holds symbolically in (b1, r)") {
  // Variables: b1 -> x, r -> y.
  BivarPoly b = BivarPoly::var_x(), r = BivarPoly::var_y();
  BivarPoly xr = 64 * b.pow(2) * r.pow(6) + 8 * b * r.pow(2);
  BivarPoly yr = 512 * b.pow(3) * r.pow(9) + 96 * b.pow(2) * r.pow(5) + 3 * b * r;
  CHECK((yr.pow(2) - xr.pow(3) - b * xr - r.pow(2) * b.pow(2)).is_zero());
}

TEST_CASE("Rouse family: first member (72, 611) and sign selection") {
  RousePoint p = rouse_point(Int(1), Int(0), Int(1));
  CHECK(p.x == 72);
  CHECK(p.y == 611);
  CHECK(p.gap == 1);
  auto fam = rouse_family(Int(2), Int(-1), -3, 3, -1);
  CHECK(fam.size() == 6);
  for (const auto& m : fam) {
    CHECK(m.y < 0);
    CHECK(m.gap == 4 * m.r * m.r + 1);
    CHECK(m.y * m.y - m.x * m.x * m.x - 2 * m.x + 1 == m.gap);
  }
  CHECK_THROWS_AS(rouse_point(Int(0), Int(0), Int(1)), Error);
  CHECK_THROWS_AS(rouse_point(Int(1), Int(0), Int(0)), Error);
}

TEST_CASE("Pell solutions against brute force") {
  struct Case {
    long d, c;
  };
  for (Case cs : {Case{2, 1}, Case{2, -1}, Case{3, 1}, Case{5, -4}, Case{5, 4}, Case{13, -1},
                  Case{7, 1}, Case{10, -1}}) {
    CAPTURE(cs.d);
    CAPTURE(cs.c);
    // Brute force: all v <= 3000 with d v^2 + c a perfect square.
    std::vector<std::pair<Int, Int>> brute;
    for (long v = 1; v <= 3000; ++v) {
      Int n = Int(cs.d) * v * v + cs.c;
      if (n > 0 && is_perfect_square(n)) brute.emplace_back(isqrt(n), Int(v));
    }
    PellSolution s = pell_solve(Int(cs.d), Int(cs.c), 6);
    size_t within = 0;
    for (const auto& [u, v] : s.solutions) {
      CHECK(u * u - cs.d * v * v == cs.c);
      if (v <= 3000) ++within;
    }
    REQUIRE(within <= brute.size());
    for (size_t i = 0; i < within; ++i) CHECK(s.solutions[i] == brute[i]);
    // Nothing small is skipped.
    if (within < s.solutions.size()) CHECK(within == brute.size());
  }
  auto five = pell_solve(Int(5), Int(-4), 3);
  REQUIRE(five.solutions.size() == 3);
  CHECK(five.solutions[0] == std::make_pair(Int(1), Int(1)));
  CHECK(five.solutions[1] == std::make_pair(Int(4), Int(2)));
  CHECK(five.solutions[2] == std::make_pair(Int(11), Int(5)));
  CHECK(pell_fundamental(Int(61)) == std::make_pair(Int("1766319049"), Int("226153980")));
  CHECK_THROWS_AS(pell_solve(Int(4), Int(1), 3), Error);
  CHECK_THROWS_AS(pell_solve(Int(5), Int(3), 3), Error);
}

TEST_CASE("Danilov family: small gaps and the limiting constant") {
  auto fam = danilov_family(10);
  REQUIRE(fam.size() == 10);
  const double limit = 54.0 * std::pow(5.0, -2.5);
  CHECK(danilov_constant() == doctest::Approx(limit).epsilon(1e-15));
  for (size_t i = 0; i < fam.size(); ++i) {
    const auto& g = fam[i];
    CAPTURE(i);
    CHECK(g.gap == g.y * g.y - g.x * g.x * g.x);
    CHECK(g.gap != 0);
    CHECK(g.gap * g.gap < g.x);
    if (i >= 4) CHECK(std::stod(g.ratio) == doctest::Approx(limit).epsilon(0.01));
    if (i > 0) CHECK(g.x > fam[i - 1].x);
  }
}

TEST_CASE("Hall scan agrees with brute force and contains the Danilov members") {
  const long xmax = 20000;
  auto scan = hall_scan(Int(xmax), Rat(1), 3);
  std::set<long> brute;
  for (long x = 2; x <= xmax; ++x) {
    Int x3 = Int(x) * x * x;
    // Nearest square, checked on both neighbours.
    Int s = isqrt(x3);
    for (Int y : {s, Int(s + 1)}) {
      Int gap = y * y - x3;
      if (gap != 0 && gap * gap <= Int(x)) brute.insert(x);
    }
  }
  std::set<long> got;
  for (const auto& g : scan) {
    got.insert(g.x.get_si());
    CHECK(g.gap == g.y * g.y - g.x * g.x * g.x);
  }
  CHECK(got == brute);
  for (const auto& d : danilov_family(10)) {
    if (d.x <= xmax) CHECK(got.count(d.x.get_si()) == 1);
  }
  CHECK_THROWS_AS(hall_scan(Int(1), Rat(1)), Error);
}

TEST_CASE("gap ratios are exact to 12 decimals") {
  CHECK(gap_ratio(Int(3), Int(9), 2) == "1.000000000000");
  CHECK(gap_ratio(Int(-2), Int(8), 3) == "1.000000000000");
  CHECK(gap_ratio(Int(1), Int(72), 3) == "0.240374928385");
}

TEST_CASE("report writers") {
  auto fam = rouse_family(Int(1), Int(0), 1, 2);
  std::string csv = to_csv(fam);
  CHECK(csv.rfind("r,x,y,gap,gap_over_cbrt_x\n1,72,611,1,0.240374928385\n", 0) == 0);
  auto j = to_json(fam, Int(1), Int(0));
  CHECK(j["schema"] == "1");
  CHECK(to_csv(pell_solve(Int(5), Int(-4), 2)) == "u,v\n1,1\n4,2\n");
}
