#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witness/witness.hpp"
#include "support.hpp"

using namespace sextic;
using oracle::P;

namespace {

Witness run(const char* s, SearchBudget b = {}) {
  BivarPoly f = P(s);
  return find_witness(f, classify(f), b);
}

// Every recorded point re-evaluated with the independent oracle.
void check_points(const char* s, const Witness& w) {
  BivarPoly f = P(s);
  for (const auto& p : w.points) CHECK(oracle::eval(f, p.x, p.y) == p.value);
}

bool reaches(const Witness& w, const Rat& target) {
  for (const auto& p : w.points) {
    if (p.value <= target) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Dirichlet witness on the k = 2 fixture") {
  const char* s = "(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5";
  Witness w = dirichlet_witness(P(s), 20, Rat(-1000000));
  CHECK(w.kind == WitnessKind::NegativeValue);
  REQUIRE_FALSE(w.points.empty());
  CHECK(w.points.front().x == -2);
  CHECK(w.points.front().y == 1);
  CHECK(w.points.front().value == -12);
  CHECK(reaches(w, Rat(-1000000)));
  check_points(s, w);
}

TEST_CASE("Dirichlet witness for k = 3 and k = 5 within 20 convergents") {
  for (const char* s : {"(x^2 - 3*y^2)^2*(x^2 + y^2) + x^5", "(x^2 - 5*y^2)^2*(x^2 + y^2) + x^5"}) {
    CAPTURE(s);
    Witness w = dirichlet_witness(P(s), 20, Rat(-1000000));
    CHECK(reaches(w, Rat(-1000000)));
    check_points(s, w);
    CHECK(verify(P(s), w));
  }
  CHECK_THROWS_AS(dirichlet_witness(P("x^6 + y^6 + x^5"), 10, Rat(-1)), Error);
}

TEST_CASE("dispatch follows the route") {
  Witness w = run("(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5");
  CHECK(w.details["route"] == "MP1-quadratic");
  CHECK(w.kind == WitnessKind::NegativeValue);

  Witness rouse = run("(y^2 - x^3 - x)^2 - y + 100");
  CHECK(rouse.kind == WitnessKind::NegativeValue);
  CHECK(reaches(rouse, Rat(-1000000)));
  check_points("(y^2 - x^3 - x)^2 - y + 100", rouse);

  Witness cubic = run("x^6 - 3*x^2*y^2 + y^3");
  CHECK(cubic.kind == WitnessKind::NegativeValue);
  check_points("x^6 - 3*x^2*y^2 + y^3", cubic);

  Witness definite = run("x^6 + y^6");
  CHECK(definite.kind == WitnessKind::Inconclusive);
  CHECK(definite.points.empty());

  Witness lead = run("x^2*y^2*(x^2 - 3*y^2) + 1");
  CHECK(lead.kind == WitnessKind::NegativeValue);
  check_points("x^2*y^2*(x^2 - 3*y^2) + 1", lead);
}

TEST_CASE("anisotropic witness for x^6 + x^2 y^3 type inputs") {
  const char* s = "x^6 + x^2*y^3";
  Witness w = anisotropic_witness(P(s), make_rat(7, 12), Int("1000000000000"), Rat(-1000000));
  CHECK(w.kind == WitnessKind::NegativeValue);
  check_points(s, w);
  Witness d = run(s);
  CHECK(d.kind == WitnessKind::NegativeValue);
  check_points(s, d);
}

TEST_CASE("weighted sign search scales a negative seed") {
  const char* s = "x^6 - 3*x^2*y^2 + y^3";
  Witness w = weighted_cubic_sign_search(P(s), 4096, Rat(-1000000));
  REQUIRE(w.kind == WitnessKind::NegativeValue);
  check_points(s, w);
  // The seed scales as (N c1, N^2 c2), so F is -N^6 times a constant.
  CHECK(reaches(w, Rat(-1000000)));
}

TEST_CASE("strip witness stays near the root lines") {
  const char* s = "(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5";
  Witness w = strip_witness(P(s), 4, 200, Rat(-1000000));
  CHECK(w.kind == WitnessKind::NegativeValue);
  check_points(s, w);
}

TEST_CASE("branch following on an MP1 cubic core") {
  const char* s = "(x^3 - 2*y^3)^2 + x^2*y - 5";
  Witness w = branch_follow(P(s), P("x^3 - 2*y^3"), Int(100000), Rat(-1000000), 2, Rat(1));
  CHECK(w.kind == WitnessKind::NegativeValue);
  check_points(s, w);
  CHECK(w.details.contains("remainder_signs"));
  CHECK_THROWS_AS(branch_follow(P(s), P("x^2 + y^2 + 1"), Int(100), Rat(-1)), Error);
}

TEST_CASE("branch schedule is dense then geometric") {
  auto sched = branch_schedule(Int(100000));
  REQUIRE(sched.size() > 4096);
  for (long i = 0; i < 4096; ++i) CHECK(sched[i] == i + 1);
  for (size_t i = 1; i < sched.size(); ++i) CHECK(sched[i] > sched[i - 1]);
  CHECK(sched.back() <= 100000);
}

TEST_CASE("ECform witness: Tao shape grid reaches -10^6") {
  for (long b1 : {-2L, -1L, 1L, 2L, 3L}) {
    for (long b0 : {-1L, 0L, 1L}) {
      for (long c : {10L, 100L}) {
        std::string s = "(y^2 - x^3 - (" + std::to_string(b1) + ")*x - (" + std::to_string(b0) +
                        "))^2 - y + " + std::to_string(c);
        CAPTURE(s);
        Witness w = run(s.c_str());
        CHECK(w.kind == WitnessKind::NegativeValue);
        CHECK(reaches(w, Rat(-1000000)));
        check_points(s.c_str(), w);
      }
    }
  }
}

TEST_CASE("ECform witness with b1 = 0 uses the Danilov family") {
  const char* s = "(y^2 - x^3)^2 - x";
  Witness w = run(s);
  check_points(s, w);
  CHECK(w.kind != WitnessKind::Inconclusive);
}

TEST_CASE("growth diagnostic is labelled as a diagnostic") {
  Witness w = growth_diagnostic(P("x^6 + y^6 + 1"), make_rat(1, 10), 30);
  CHECK(w.kind == WitnessKind::DearthDiagnostic);
  CHECK(w.details["positive_on_box"] == true);
}

TEST_CASE("verify rejects tampered values") {
  BivarPoly f = P("(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5");
  Witness w = dirichlet_witness(f, 10, Rat(-100));
  REQUIRE_FALSE(w.points.empty());
  CHECK(verify(f, w));
  w.points.front().value += 1;
  CHECK_FALSE(verify(f, w));
}

TEST_CASE("witness JSON carries kind, lemma and exact values") {
  Witness w = run("(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5");
  auto j = to_json(w);
  CHECK(j["kind"] == to_string(w.kind));
  REQUIRE(j["points"].is_array());
  CHECK(j["points"][0][2] == "-12");
}
