#include <cmath>
#include <cstdio>

#include "eclab/eclab.hpp"
#include "polycore/parse.hpp"
#include "witness/internal.hpp"

namespace sextic {

using detail::Tracker;

namespace {

constexpr long kDenseSchedule = 4096;
constexpr long kGeometricStep = 64;
// Danilov members grow like 10^(6 k); a handful is already enormous.
constexpr int kDanilovMembers = 6;

struct BranchState {
  explicit BranchState(const Rat& target) : t(target) {}

  Tracker t;
  std::optional<WitnessPoint> min_point;
  long branch_points = 0;
  long remainder_pos = 0, remainder_neg = 0, remainder_zero = 0;
  long bound_checked = 0;
  bool bound_ok = true;
};

// Nearest integer to the root isolated by iv (ties to even), after
// shrinking iv so that it holds no half-integer in its interior.
Int nearest_integer(IsolatingInterval& iv) {
  refine(iv, Rat(1, 2));
  const Rat half(1, 2);
  int s_lo = iv.poly.sign_at(iv.lo);
  Rat h = Rat(floor_rat(iv.lo + half)) + half;
  if (h < iv.hi) {
    int s = iv.poly.sign_at(h);
    if (s == 0) {
      Int below = floor_rat(h), above = below + 1;
      return below % 2 == 0 ? below : above;
    }
    if (s == s_lo) {
      iv.lo = h;
    } else {
      iv.hi = h;
    }
  }
  return floor_rat(iv.lo + half);
}

}  // namespace

std::vector<Int> branch_schedule(const Int& xmax) {
  std::vector<Int> xs;
  for (Int x = 1; x <= xmax; ) {
    xs.push_back(x);
    if (x < kDenseSchedule) {
      x += 1;
    } else {
      x += x / kGeometricStep;
    }
  }
  return xs;
}

Witness branch_follow(const BivarPoly& f, const BivarPoly& core, const Int& xmax,
                      const Rat& target, int workers, const std::optional<Rat>& scale) {
  if (core.degree_y() < 1) throw precondition_error("core does not involve y: no branch y(x)");
  if (xmax < 1) throw input_error("Xmax must be positive");
  const std::vector<Int> xs = branch_schedule(xmax);
  const bool check_bound = core.degree_y() <= 2;
  const BivarPoly core_dy = core.dy();
  const BivarPoly remainder = scale ? f - *scale * (core * core) : BivarPoly();
  PointEvaluator eval(f), eval_core(core), eval_dy(core_dy), eval_rem(remainder);

  BranchState total(target);
  long merged = detail::ordered_scan(
      static_cast<long>(xs.size()), workers, BranchState(target),
      [&](long i, BranchState& st) {
        for (int sgn : {1, -1}) {
          Int x = sgn * xs[i];
          UPoly g = core.in_y_at(Rat(x));
          if (g.degree() < 1) continue;
          for (IsolatingInterval iv : isolate_real_roots(g)) {
            Int near = nearest_integer(iv);
            // Both neighbours of the root are certificates in their own right.
            for (Int y = floor_rat(iv.lo); y <= ceil_rat(iv.hi); ++y) {
              Rat v = eval(x, y);
              if (st.t.offer(x, y, v)) return;
              if (y != near) continue;
              ++st.branch_points;
              if (!st.min_point || v < st.min_point->value) st.min_point = WitnessPoint{x, y, v};
              if (scale) {
                int s = sign(eval_rem(x, y));
                (s > 0 ? st.remainder_pos : s < 0 ? st.remainder_neg : st.remainder_zero)++;
              }
              if (check_bound) {
                // core(y) = core'(y) d - c2 d^2 with |d| <= 1/2 for the nearest y.
                Rat c = eval_core(x, y), d = eval_dy(x, y);
                Rat c2 = g.degree() == 2 ? g.lead() : Rat(0);
                ++st.bound_checked;
                if (abs(c) > abs(d) / 2 + abs(c2) / 4) st.bound_ok = false;
              }
            }
          }
        }
      },
      [&](BranchState&& st) {
        if (st.min_point && (!total.min_point || st.min_point->value < total.min_point->value)) {
          total.min_point = st.min_point;
        }
        total.branch_points += st.branch_points;
        total.remainder_pos += st.remainder_pos;
        total.remainder_neg += st.remainder_neg;
        total.remainder_zero += st.remainder_zero;
        total.bound_checked += st.bound_checked;
        total.bound_ok = total.bound_ok && st.bound_ok;
        return total.t.absorb(st.t);
      });
  if (total.branch_points == 0 && !total.t.first_negative) {
    throw precondition_error("no real branch of core(x, y) = 0 on the schedule");
  }
  if (!total.bound_ok) throw internal_error("branch point failed the nearest-integer bound");

  Witness w = detail::from_tracker(
      total.t, "branch",
      "integer points nearest the real branches of core(x, y) = 0, rounding ties to even; both "
      "neighbours of each root are evaluated");
  w.details["schedule_points"] = merged;
  w.details["x_last_scanned"] = merged > 0 ? to_string(xs[merged - 1]) : "none";
  w.details["branch_points"] = total.branch_points;
  w.details["core"] = format(core);
  if (total.min_point) w.details["min_on_branch"] = detail::point_json(*total.min_point);
  if (scale) {
    w.details["remainder_signs"] = {{"positive", total.remainder_pos},
                                    {"negative", total.remainder_neg},
                                    {"zero", total.remainder_zero}};
  }
  w.details["nearest_bound_checked"] = total.bound_checked;
  return w;
}

Witness ecform_witness(const BivarPoly& f, const EcForm& ec, int family, const Rat& target) {
  if (ec.b1.get_den() != 1 || ec.b0.get_den() != 1) {
    throw precondition_error("ECform coefficients must be integers");
  }
  if (family < 1) throw input_error("family budget must be positive");
  const Int b1 = ec.b1.get_num(), b0 = ec.b0.get_num();
  const auto& sub = ec.substitution;
  PointEvaluator eval(f);
  Tracker t(target);
  nlohmann::json rows = nlohmann::json::array();
  std::vector<WitnessPoint> integral;
  long skipped = 0;

  auto try_point = [&](const Int& index, const Int& X, const Int& Y, const Int& gap) {
    auto [xr, yr] = sub.to_original(Rat(X), Rat(Y));
    nlohmann::json row = {{"index", to_string(index)}, {"X", to_string(X)}, {"Y", to_string(Y)},
                          {"core", to_string(gap)}};
    if (xr.get_den() != 1 || yr.get_den() != 1) {
      ++skipped;
      row["integral"] = false;
      rows.push_back(row);
      return false;
    }
    Int x = xr.get_num(), y = yr.get_num();
    Rat v = eval(x, y);
    row["integral"] = true;
    row["x"] = to_string(x);
    row["y"] = to_string(y);
    row["value"] = to_string(v);
    rows.push_back(row);
    integral.push_back({x, y, v});
    return t.offer(x, y, v);
  };

  std::string lemma;
  if (b1 != 0) {
    lemma = "Rouse";
    for (long r = 1; r <= family && !t.done(); ++r) {
      for (long rr : {r, -r}) {
        RousePoint p = rouse_point(b1, b0, Int(rr));
        if (try_point(Int(rr), p.x, p.y, p.gap)) break;
      }
    }
  } else {
    lemma = "Danilov";
    auto members = danilov_family(std::min(family, kDanilovMembers));
    for (const auto& m : members) {
      if (t.done()) break;
      Int core = m.gap - b0;
      if (try_point(m.index, m.x, m.y, core)) break;
      if (try_point(m.index, m.x, -m.y, core)) break;
    }
  }
  Witness w = detail::from_tracker(
      t, lemma,
      lemma == "Rouse"
          ? "3P on E_r: y^2 = x^3 + b1 x + r^2 b1^2 keeps the core at b1^2 r^2 - b0 = O(x^(1/3))"
          : "Danilov points keep |y^2 - x^3| below sqrt(x); the core stays O(sqrt(x))");
  if (w.kind == WitnessKind::Inconclusive && !integral.empty()) {
    w.kind = WitnessKind::SmallCoreSequence;
    for (std::size_t i = 0; i < integral.size() && i < 5; ++i) w.points.push_back(integral[i]);
  }
  w.details["ecform"] = {{"a", to_string(ec.a)},
                         {"b1", to_string(ec.b1)},
                         {"b0", to_string(ec.b0)},
                         {"G", format(ec.G)},
                         {"substitution", sub.to_string()}};
  w.details["family"] = rows;
  w.details["non_integral_skipped"] = skipped;
  return w;
}

Witness growth_diagnostic(const BivarPoly& f, const Rat& delta, long box) {
  if (delta <= 0) throw input_error("delta must be positive");
  if (box < 1) throw input_error("box must be positive");
  PointEvaluator eval(f);
  const double exponent = 1.0 + to_double(delta);
  double best = INFINITY;
  WitnessPoint best_point{0, 0, 0};
  for (long x = -box; x <= box; ++x) {
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      Rat v = eval(Int(x), Int(y));
      double m = static_cast<double>(std::max(std::labs(x), std::labs(y)));
      double ratio = to_double(v) / std::pow(m, exponent);
      if (ratio < best) {
        best = ratio;
        best_point = {Int(x), Int(y), v};
      }
    }
  }
  Witness w;
  w.kind = WitnessKind::DearthDiagnostic;
  w.lemma = "bdlem";
  w.note = "empirical minimum of F / max(|x|,|y|)^(1+delta) over the box; diagnostic, not a proof";
  w.points.push_back(best_point);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", best);
  w.details = {{"delta", to_string(delta)},
               {"box", box},
               {"min_ratio", buf},
               {"positive_on_box", best > 0}};
  return w;
}

}  // namespace sextic
