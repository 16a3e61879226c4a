#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "density/density.hpp"
#include "eclab/eclab.hpp"
#include "support.hpp"
#include "witness/witness.hpp"

// Every floating-point starting guess is scaled away from its natural value;
// certified outputs must not move.

using namespace sextic;
using oracle::P;

namespace {

struct SeedScale {
  explicit SeedScale(double s) { set_seed_scale(s); }
  ~SeedScale() { set_seed_scale(1.0); }
};

const double kScales[] = {0.5, 0.999, 1.001, 2.0};

std::string certificates() {
  std::string out;
  for (const char* s : {"(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5", "(y^2 - x^3 - x)^2 - y + 100",
                        "x^6 - 3*x^2*y^2 + y^3", "x^6 + x^2*y^3", "(x^3 - 2*y^3)^2 + x^2*y - 5"}) {
    BivarPoly f = P(s);
    ClassificationReport r = classify(f);
    out += to_json(r).dump() + "\n";
    out += to_json(find_witness(f, r, SearchBudget{})).dump() + "\n";
  }
  for (const char* s : {"x^6 + y^6", "x^6 - x^3*y^3 + y^6 + 5*x", "x^2 + y^2"}) {
    DensityReport d = count_range(P(s), 300000);
    out += std::to_string(d.count) + " " + std::to_string(d.box.certified) + "\n";
  }
  out += to_csv(hall_scan(Int(3000), Rat(1), 2));
  out += to_csv(danilov_family(8));
  return out;
}

}  // namespace

TEST_CASE("certificates are unchanged when float seeds are perturbed") {
  const std::string reference = certificates();
  for (double s : kScales) {
    CAPTURE(s);
    SeedScale guard(s);
    CHECK(certificates() == reference);
  }
}

TEST_CASE("certified box bound does not depend on the float estimate") {
  BivarPoly f = P("x^6 - x^3*y^3 + y^6 - 40*x^5 + 7*y");
  auto reference = certified_box(f, Int(1000000));
  REQUIRE(reference);
  for (double s : kScales) {
    SeedScale guard(s);
    auto b = certified_box(f, Int(1000000));
    REQUIRE(b);
    CHECK(b->bound == reference->bound);
    CHECK(*b->c_lower == *reference->c_lower);
  }
}

TEST_CASE("a looser leading-form tolerance keeps the count") {
  // A different certified lower bound c changes the box, not the values.
  BivarPoly f = P("x^6 - x^3*y^3 + y^6 + 5*x");
  Rat tight = leading_form_minimum(f, Rat(1, 1000000000));
  Rat loose = leading_form_minimum(f, Rat(1, 10));
  CHECK(tight >= loose);
  CHECK(loose > 0);
  DensityReport r = count_range(f, 300000);
  DensityOptions o;
  o.box = r.box.bound * 2;
  CHECK(count_range(f, 300000, o).count == r.count);
}
