#include "sextic/sextic.h"

#include <cstring>
#include <new>
#include <string>

#include "classify/classify.hpp"
#include "density/density.hpp"
#include "eclab/eclab.hpp"
#include "polycore/parse.hpp"
#include "witness/witness.hpp"

struct sextic_poly {
  sextic::BivarPoly poly;
};

struct sextic_report {
  sextic::ClassificationReport report;
};

struct sextic_witness {
  sextic::Witness witness;
};

namespace {

thread_local std::string g_last_error;

sextic_status fail(sextic_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sextic_status status_of(const sextic::Error& e) {
  switch (e.kind()) {
    case sextic::Error::Kind::Input: return SEXTIC_ERR_INPUT;
    case sextic::Error::Kind::Precondition: return SEXTIC_ERR_PRECONDITION;
    case sextic::Error::Kind::Budget: return SEXTIC_ERR_BUDGET;
    case sextic::Error::Kind::Internal: return SEXTIC_ERR_INTERNAL;
  }
  return SEXTIC_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread-local
// message. The body returns SEXTIC_OK or another status of its own.
template <class Body>
sextic_status guarded(Body body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const sextic::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SEXTIC_ERR_INPUT, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEXTIC_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEXTIC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sextic::Int parse_int(const char* text, const char* what) {
  if (text == nullptr) throw sextic::input_error(std::string(what) + " is missing");
  sextic::Rat r = sextic::parse_rat(text);
  if (r.get_den() != 1) throw sextic::input_error(std::string(what) + " must be an integer");
  return r.get_num();
}

sextic::DensityOptions density_options(const sextic_density_options* o) {
  sextic::DensityOptions opt;
  if (o == nullptr) return opt;
  if (o->workers < 1) throw sextic::input_error("workers must be positive");
  if (o->memory_bits == 0) throw sextic::input_error("memory budget must be positive");
  if (o->box < 0) throw sextic::input_error("box must be nonnegative");
  opt.workers = o->workers;
  opt.memory_bits = o->memory_bits;
  opt.box = o->box;
  opt.method = o->method == 1 ? sextic::CountMethod::SortedUnique : sextic::CountMethod::Bitmap;
  return opt;
}

std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* sextic_version(void) { return "1.0.0"; }

const char* sextic_last_error(void) { return g_last_error.c_str(); }

void sextic_string_free(char* s) { delete[] s; }

sextic_status sextic_poly_parse(const char* text, sextic_poly** out) {
  if (text == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sextic_poly{sextic::parse(text)};
    return SEXTIC_OK;
  });
}

sextic_status sextic_poly_from_json(const char* json, sextic_poly** out) {
  if (json == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sextic_poly{sextic::poly_from_json(nlohmann::json::parse(json))};
    return SEXTIC_OK;
  });
}

sextic_status sextic_poly_to_string(const sextic_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(sextic::format(p->poly));
    return SEXTIC_OK;
  });
}

sextic_status sextic_poly_to_json(const sextic_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(sextic::to_json(p->poly).dump());
    return SEXTIC_OK;
  });
}

sextic_status sextic_poly_eval(const sextic_poly* p, const char* x, const char* y, char** out) {
  if (p == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    sextic::Rat v = p->poly.eval(sextic::Rat(parse_int(x, "x")), sextic::Rat(parse_int(y, "y")));
    *out = copy_string(sextic::to_string(v));
    return SEXTIC_OK;
  });
}

void sextic_poly_free(sextic_poly* p) { delete p; }

sextic_status sextic_classify(const sextic_poly* p, sextic_report** out) {
  if (p == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sextic_report{sextic::classify(p->poly)};
    return SEXTIC_OK;
  });
}

sextic_status sextic_report_route(const sextic_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(sextic::to_string(r->report.route));
    return SEXTIC_OK;
  });
}

sextic_status sextic_report_json(const sextic_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(render(sextic::to_json(r->report)));
    return SEXTIC_OK;
  });
}

void sextic_report_free(sextic_report* r) { delete r; }

void sextic_budget_default(sextic_budget* b) {
  if (b == nullptr) return;
  sextic::SearchBudget d;
  b->convergents = d.convergents;
  b->tmax = d.tmax.get_si();
  b->xmax = d.xmax.get_si();
  b->box = d.box;
  b->family = d.family;
  b->workers = d.workers;
  b->target = d.target.get_num().get_si();
}

sextic_status sextic_witness_find(const sextic_poly* p, const sextic_report* r,
                                  const sextic_budget* b, sextic_witness** out) {
  if (p == nullptr || r == nullptr || out == nullptr) {
    return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    sextic::SearchBudget budget;
    if (b != nullptr) {
      if (b->convergents < 1 || b->tmax < 1 || b->xmax < 1 || b->box < 1 || b->family < 1 ||
          b->workers < 1) {
        throw sextic::input_error("budgets must be positive");
      }
      budget.convergents = b->convergents;
      budget.tmax = sextic::Int(static_cast<long>(b->tmax));
      budget.xmax = sextic::Int(static_cast<long>(b->xmax));
      budget.box = b->box;
      budget.family = b->family;
      budget.workers = b->workers;
      budget.target = sextic::Rat(static_cast<long>(b->target));
    }
    *out = new sextic_witness{sextic::find_witness(p->poly, r->report, budget)};
    return SEXTIC_OK;
  });
}

sextic_status sextic_witness_growth(const sextic_poly* p, const char* delta, int64_t box,
                                    sextic_witness** out) {
  if (p == nullptr || delta == nullptr || out == nullptr) {
    return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new sextic_witness{sextic::growth_diagnostic(p->poly, sextic::parse_rat(delta), box)};
    return SEXTIC_OK;
  });
}

sextic_status sextic_witness_kind_of(const sextic_witness* w, sextic_witness_kind* out) {
  if (w == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  switch (w->witness.kind) {
    case sextic::WitnessKind::NegativeValue: *out = SEXTIC_WITNESS_NEGATIVE_VALUE; break;
    case sextic::WitnessKind::SmallCoreSequence: *out = SEXTIC_WITNESS_SMALL_CORE_SEQUENCE; break;
    case sextic::WitnessKind::DearthDiagnostic: *out = SEXTIC_WITNESS_DEARTH_DIAGNOSTIC; break;
    case sextic::WitnessKind::Inconclusive: *out = SEXTIC_WITNESS_INCONCLUSIVE; break;
  }
  return SEXTIC_OK;
}

sextic_status sextic_witness_json(const sextic_witness* w, char** out) {
  if (w == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(render(sextic::to_json(w->witness)));
    return SEXTIC_OK;
  });
}

sextic_status sextic_witness_verify(const sextic_poly* p, const sextic_witness* w, int* ok) {
  if (p == nullptr || w == nullptr || ok == nullptr) {
    return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *ok = sextic::verify(p->poly, w->witness) ? 1 : 0;
    return SEXTIC_OK;
  });
}

void sextic_witness_free(sextic_witness* w) { delete w; }

void sextic_density_options_default(sextic_density_options* o) {
  if (o == nullptr) return;
  sextic::DensityOptions d;
  o->workers = d.workers;
  o->memory_bits = d.memory_bits;
  o->box = d.box;
  o->method = 0;
}

sextic_status sextic_density_count(const sextic_poly* p, int64_t n, const sextic_density_options* o,
                                   char** out) {
  if (p == nullptr || out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(render(sextic::to_json(sextic::count_range(p->poly, n, density_options(o)))));
    return SEXTIC_OK;
  });
}

sextic_status sextic_density_growth(const sextic_poly* p, const int64_t* ns, size_t count,
                                    int workers, char** out) {
  if (p == nullptr || out == nullptr || (ns == nullptr && count > 0)) {
    return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::int64_t> ladder(ns, ns + count);
    *out = copy_string(render(sextic::to_json(sextic::growth_exponent(p->poly, ladder, workers))));
    return SEXTIC_OK;
  });
}

sextic_status sextic_density_landau(int64_t n_max, uint64_t memory_bits, char** out) {
  if (out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(render(sextic::to_json(sextic::landau_baseline(n_max, memory_bits))));
    return SEXTIC_OK;
  });
}

sextic_status sextic_density_stanley(const sextic_poly* p, const int64_t* ns, size_t count,
                                     const sextic_density_options* o, sextic_format format,
                                     char** out) {
  if (p == nullptr || out == nullptr || (ns == nullptr && count > 0)) {
    return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::int64_t> ladder(ns, ns + count);
    auto probe = sextic::stanley_probe(p->poly, ladder, density_options(o));
    *out = copy_string(format == SEXTIC_FORMAT_JSON ? render(sextic::to_json(probe))
                                                    : sextic::to_csv(probe));
    return SEXTIC_OK;
  });
}

sextic_status sextic_curve_rouse(const char* b1, const char* b0, int64_t r_from, int64_t r_to,
                                 sextic_format format, char** out) {
  if (out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    sextic::Int B1 = parse_int(b1, "b1"), B0 = parse_int(b0, "b0");
    if (B1 == 0) throw sextic::input_error("b1 must be nonzero for the Rouse family");
    if (r_from > r_to) throw sextic::input_error("empty r range");
    auto family = sextic::rouse_family(B1, B0, r_from, r_to);
    *out = copy_string(format == SEXTIC_FORMAT_JSON ? render(sextic::to_json(family, B1, B0))
                                                    : sextic::to_csv(family));
    return SEXTIC_OK;
  });
}

sextic_status sextic_curve_danilov(int count, sextic_format format, char** out) {
  if (out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (count < 1) throw sextic::input_error("count must be positive");
    auto family = sextic::danilov_family(count);
    *out = copy_string(format == SEXTIC_FORMAT_JSON ? render(sextic::to_json(family, "danilov"))
                                                    : sextic::to_csv(family));
    return SEXTIC_OK;
  });
}

sextic_status sextic_curve_hall(const char* xmax, const char* threshold, int workers,
                                sextic_format format, char** out) {
  if (out == nullptr || threshold == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto points = sextic::hall_scan(parse_int(xmax, "xmax"), sextic::parse_rat(threshold), workers);
    *out = copy_string(format == SEXTIC_FORMAT_JSON ? render(sextic::to_json(points, "hall-scan"))
                                                    : sextic::to_csv(points));
    return SEXTIC_OK;
  });
}

sextic_status sextic_curve_pell(const char* d, const char* c, int count, sextic_format format,
                                char** out) {
  if (out == nullptr) return fail(SEXTIC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (count < 1) throw sextic::input_error("count must be positive");
    auto sol = sextic::pell_solve(parse_int(d, "d"), parse_int(c, "c"), count);
    *out = copy_string(format == SEXTIC_FORMAT_JSON ? render(sextic::to_json(sol))
                                                    : sextic::to_csv(sol));
    return SEXTIC_OK;
  });
}

}  // extern "C"
