#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "sextic/sextic.h"

namespace {

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  sextic_string_free(s);
  return out;
}

sextic_poly* parse(const char* text) {
  sextic_poly* p = nullptr;
  REQUIRE(sextic_poly_parse(text, &p) == SEXTIC_OK);
  return p;
}

}  // namespace

TEST_CASE("parse, print and evaluate") {
  sextic_poly* p = parse("(x^2 - 2*y^2)^2*(x^2 + y^2) + x^5");
  char* v = nullptr;
  REQUIRE(sextic_poly_eval(p, "-7", "-5", &v) == SEXTIC_OK);
  CHECK(take(v) == "-16733");
  char* text = nullptr;
  REQUIRE(sextic_poly_to_string(p, &text) == SEXTIC_OK);
  sextic_poly* q = parse(take(text).c_str());
  char* j1 = nullptr;
  char* j2 = nullptr;
  sextic_poly_to_json(p, &j1);
  sextic_poly_to_json(q, &j2);
  std::string a = take(j1), b = take(j2);
  CHECK(a == b);
  sextic_poly* r = nullptr;
  REQUIRE(sextic_poly_from_json(a.c_str(), &r) == SEXTIC_OK);
  sextic_poly_free(r);
  sextic_poly_free(q);
  sextic_poly_free(p);
}

TEST_CASE("errors map to status codes and messages") {
  sextic_poly* p = nullptr;
  CHECK(sextic_poly_parse("x +", &p) == SEXTIC_ERR_INPUT);
  CHECK(p == nullptr);
  CHECK(std::string(sextic_last_error()).find("position") != std::string::npos);
  CHECK(sextic_poly_parse(nullptr, &p) == SEXTIC_ERR_ARGUMENT);
  CHECK(sextic_poly_from_json("{not json", &p) == SEXTIC_ERR_INPUT);

  sextic_poly* q = parse("x^2 + y^2");
  char* out = nullptr;
  sextic_density_options o;
  sextic_density_options_default(&o);
  o.memory_bits = 10;
  CHECK(sextic_density_count(q, 1000, &o, &out) == SEXTIC_ERR_BUDGET);
  CHECK(out == nullptr);
  CHECK(sextic_curve_pell("4", "1", 3, SEXTIC_FORMAT_CSV, &out) != SEXTIC_OK);
  sextic_poly_free(q);
  sextic_poly_free(nullptr);
}

TEST_CASE("classification and witness through handles") {
  sextic_poly* p = parse("(y^2 - x^3 - x)^2 - y + 100");
  sextic_report* r = nullptr;
  REQUIRE(sextic_classify(p, &r) == SEXTIC_OK);
  char* route = nullptr;
  sextic_report_route(r, &route);
  CHECK(take(route) == "MP3");
  char* rj = nullptr;
  REQUIRE(sextic_report_json(r, &rj) == SEXTIC_OK);
  CHECK(nlohmann::json::parse(take(rj))["route"] == "MP3");

  sextic_budget b;
  sextic_budget_default(&b);
  CHECK(b.target == -1000000);
  sextic_witness* w = nullptr;
  REQUIRE(sextic_witness_find(p, r, &b, &w) == SEXTIC_OK);
  sextic_witness_kind kind;
  sextic_witness_kind_of(w, &kind);
  CHECK(kind == SEXTIC_WITNESS_NEGATIVE_VALUE);
  int ok = 0;
  REQUIRE(sextic_witness_verify(p, w, &ok) == SEXTIC_OK);
  CHECK(ok == 1);
  char* wj = nullptr;
  REQUIRE(sextic_witness_json(w, &wj) == SEXTIC_OK);
  auto j = nlohmann::json::parse(take(wj));
  CHECK(j["kind"] == "negative-value");
  sextic_witness_free(w);

  sextic_witness* g = nullptr;
  REQUIRE(sextic_witness_growth(p, "1/10", 20, &g) == SEXTIC_OK);
  sextic_witness_kind_of(g, &kind);
  CHECK(kind == SEXTIC_WITNESS_DEARTH_DIAGNOSTIC);
  sextic_witness_free(g);
  sextic_report_free(r);
  sextic_poly_free(p);
}

TEST_CASE("density and curve reports") {
  sextic_poly* p = parse("x^6 + y^6");
  sextic_density_options o;
  sextic_density_options_default(&o);
  char* out = nullptr;
  REQUIRE(sextic_density_count(p, 1000000, &o, &out) == SEXTIC_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == 19);

  const int64_t ladder[] = {1000000, 100000000, 10000000000};
  REQUIRE(sextic_density_growth(p, ladder, 3, 2, &out) == SEXTIC_OK);
  CHECK(nlohmann::json::parse(take(out))["points"].size() == 3);

  REQUIRE(sextic_density_stanley(p, ladder, 2, &o, SEXTIC_FORMAT_CSV, &out) == SEXTIC_OK);
  CHECK(take(out).rfind("N,count,normalized\n", 0) == 0);

  REQUIRE(sextic_density_landau(100, o.memory_bits, &out) == SEXTIC_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == 43);
  sextic_poly_free(p);

  REQUIRE(sextic_curve_rouse("1", "0", 1, 2, SEXTIC_FORMAT_CSV, &out) == SEXTIC_OK);
  CHECK(take(out).rfind("r,x,y,gap,gap_over_cbrt_x\n1,72,611,1,", 0) == 0);
  REQUIRE(sextic_curve_pell("5", "-4", 3, SEXTIC_FORMAT_CSV, &out) == SEXTIC_OK);
  CHECK(take(out) == "u,v\n1,1\n4,2\n11,5\n");
  REQUIRE(sextic_curve_danilov(4, SEXTIC_FORMAT_JSON, &out) == SEXTIC_OK);
  CHECK(nlohmann::json::parse(take(out))["schema"] == "1");
  REQUIRE(sextic_curve_hall("1000", "1", 2, SEXTIC_FORMAT_CSV, &out) == SEXTIC_OK);
  CHECK(take(out).rfind("index,x,y,gap,gap_over_sqrt_x\n", 0) == 0);
  CHECK(std::string(sextic_version()).size() > 0);
}
