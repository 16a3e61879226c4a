#include <cmath>

#include "polycore/parse.hpp"
#include "witness/internal.hpp"

namespace sextic {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::NegativeValue: return "negative-value";
    case WitnessKind::SmallCoreSequence: return "small-core-sequence";
    case WitnessKind::DearthDiagnostic: return "dearth-diagnostic";
    case WitnessKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool verify(const BivarPoly& f, const Witness& w) {
  PointEvaluator eval(f);
  for (const auto& p : w.points) {
    if (eval(p.x, p.y) != p.value) return false;
  }
  if (w.kind == WitnessKind::NegativeValue) {
    return !w.points.empty() && w.points.front().value < 0;
  }
  return true;
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : w.points) pts.push_back(detail::point_json(p));
  return {{"kind", to_string(w.kind)},
          {"lemma", w.lemma},
          {"points", pts},
          {"note", w.note},
          {"details", w.details}};
}

namespace detail {

nlohmann::json point_json(const WitnessPoint& p) {
  return nlohmann::json::array({to_string(p.x), to_string(p.y), to_string(p.value)});
}

Witness from_tracker(const Tracker& t, const std::string& lemma, const std::string& note) {
  Witness w;
  w.lemma = lemma;
  w.note = note;
  if (t.first_negative) {
    w.kind = WitnessKind::NegativeValue;
    w.points.push_back(*t.first_negative);
    if (t.at_target && (t.at_target->x != t.first_negative->x ||
                        t.at_target->y != t.first_negative->y)) {
      w.points.push_back(*t.at_target);
    }
  }
  w.details["target"] = to_string(t.target);
  w.details["reached_target"] = t.at_target.has_value();
  return w;
}

std::vector<Direction> root_directions(const BinaryForm& form) {
  std::vector<Direction> out;
  FormRealRoots roots = real_roots(form);
  for (std::size_t i = 0; i < roots.slopes.size(); ++i) {
    Direction d;
    d.multiplicity = roots.multiplicities[i];
    if (auto r = exact_rational_root(roots.slopes[i])) {
      d.rational = true;
      d.p = r->get_num();
      d.q = r->get_den();
      d.text = "x/y = " + to_string(*r);
    } else {
      d.slope = roots.slopes[i];
      d.text = "x/y in (" + to_string(roots.slopes[i].lo) + ", " + to_string(roots.slopes[i].hi) +
               ")";
    }
    out.push_back(std::move(d));
  }
  if (roots.infinity_multiplicity > 0) {
    Direction d;
    d.rational = true;
    d.p = 1;
    d.q = 0;
    d.multiplicity = roots.infinity_multiplicity;
    d.text = "y = 0";
    out.push_back(std::move(d));
  }
  return out;
}

Int floor_times(IsolatingInterval& iv, const Int& y) {
  while (true) {
    Int a = floor_rat(iv.lo * Rat(y)), b = floor_rat(iv.hi * Rat(y));
    if (a == b) return a;
    refine(iv, iv.width() / 2);
  }
}

double log_abs(const Rat& v) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

nlohmann::json components_at(const BivarPoly& f, const Int& x, const Int& y) {
  nlohmann::json out = nlohmann::json::object();
  for (int d = std::max(0, f.total_degree()); d >= 0; --d) {
    out["F" + std::to_string(d)] = to_string(f.homogeneous_part(d).eval(Rat(x), Rat(y)));
  }
  return out;
}

Witness pull_back(Witness w, const BivarPoly& f,
                  const std::function<std::pair<Int, Int>(const Int&, const Int&)>& map) {
  PointEvaluator eval(f);
  for (auto& p : w.points) {
    auto [x, y] = map(p.x, p.y);
    Rat v = eval(x, y);
    if (v != p.value) throw internal_error("witness changed value under the change of variables");
    p.x = x;
    p.y = y;
  }
  return w;
}

}  // namespace detail
}  // namespace sextic
