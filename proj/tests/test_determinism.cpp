#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "density/density.hpp"
#include "eclab/eclab.hpp"
#include "support.hpp"
#include "witness/witness.hpp"

using namespace sextic;
using oracle::P;

namespace {

const char* kWitnessInputs[] = {
    "(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5",
    "(y^2 - x^3 - x)^2 - y + 100",
    "x^6 - 3*x^2*y^2 + y^3",
    "x^6 + x^2*y^3",
    "(x^3 - 2*y^3)^2 + x^2*y - 5",
    "x^6 + y^6",
};

const char* kDensityInputs[] = {
    "x^6 + y^6",
    "x^2 + y^2",
    "x^2*y - y^3 + x",
    "(y^2 - x^3)^2 - x + 5",
};

}  // namespace

TEST_CASE("witness output is identical at 1, 4 and 16 workers") {
  for (const char* s : kWitnessInputs) {
    CAPTURE(s);
    BivarPoly f = P(s);
    ClassificationReport r = classify(f);
    std::string reference;
    for (int workers : {1, 4, 16}) {
      SearchBudget b;
      b.workers = workers;
      std::string out = to_json(find_witness(f, r, b)).dump();
      if (workers == 1) {
        reference = out;
      } else {
        CHECK(out == reference);
      }
    }
  }
}

TEST_CASE("density output is identical at 1, 4 and 16 workers") {
  for (const char* s : kDensityInputs) {
    for (auto method : {CountMethod::Bitmap, CountMethod::SortedUnique}) {
      CAPTURE(s);
      std::string reference;
      for (int workers : {1, 4, 16}) {
        DensityOptions o;
        o.workers = workers;
        o.method = method;
        std::string out = to_json(count_range(P(s), 200000, o)).dump();
        if (workers == 1) {
          reference = out;
        } else {
          CHECK(out == reference);
        }
      }
    }
  }
  std::string g1 = to_json(growth_exponent(P("x^6 + y^6"), {1000000, 100000000, 10000000000}, 1)).dump();
  for (int workers : {4, 16}) {
    CHECK(to_json(growth_exponent(P("x^6 + y^6"), {1000000, 100000000, 10000000000}, workers)).dump() == g1);
  }
}

TEST_CASE("Hall scan output is identical at 1, 4 and 16 workers") {
  std::string reference = to_csv(hall_scan(Int(200000), Rat(1), 1));
  for (int workers : {4, 16}) CHECK(to_csv(hall_scan(Int(200000), Rat(1), workers)) == reference);
}
