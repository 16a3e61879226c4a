#include "polycore/parse.hpp"
#include "witness/internal.hpp"

namespace sextic {

using detail::Tracker;

namespace {

// First level of the doubling schedule and the cap on x candidates per level.
const Int kFirstT = 100;
constexpr int kWidthCap = 256;

// Points of the box |c1|, |c2| <= box in order of max-norm, then c1, then c2.
template <class Fn>
bool for_box(long box, Fn fn) {
  for (long m = 1; m <= box; ++m) {
    for (long c1 = -m; c1 <= m; ++c1) {
      for (long c2 = -m; c2 <= m; ++c2) {
        if (std::max(std::labs(c1), std::labs(c2)) != m) continue;
        if (fn(c1, c2)) return true;
      }
    }
  }
  return false;
}

}  // namespace

Witness anisotropic_witness(const BivarPoly& f, const Rat& theta, const Int& tmax,
                            const Rat& target, int workers) {
  if (theta <= 0 || theta >= 1) throw input_error("theta must lie in (0, 1)");
  if (tmax < kFirstT) throw input_error("Tmax must be at least 100");
  std::vector<Int> levels;
  for (Int t = kFirstT; t <= tmax; t *= 2) levels.push_back(t);
  const unsigned long p = theta.get_num().get_ui(), q = theta.get_den().get_ui();

  PointEvaluator eval(f);
  Tracker total(target);
  long merged = detail::ordered_scan(
      static_cast<long>(levels.size()), workers, Tracker{target},
      [&](long i, Tracker& t) {
        const Int& T = levels[i];
        // c = floor(T^theta); candidates stay within [T^theta / 2, 2 T^theta].
        Int c = iroot(pow_int(T, p), q);
        if (c < 1) c = 1;
        Int lo = (c + 2) / 2, hi = 2 * c;
        std::vector<Int> xs{c};
        for (long k = 1; static_cast<int>(xs.size()) < kWidthCap; ++k) {
          bool any = false;
          if (c + k <= hi) {
            xs.push_back(c + k);
            any = true;
          }
          if (c - k >= lo && static_cast<int>(xs.size()) < kWidthCap) {
            xs.push_back(c - k);
            any = true;
          }
          if (!any) break;
        }
        for (const Int& x : xs) {
          for (auto [sx, sy] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
            Int px = sx * x, py = sy * T;
            if (t.offer(px, py, eval(px, py))) return;
          }
        }
      },
      [&](Tracker&& t) { return total.absorb(t); });

  Witness w = detail::from_tracker(total, "anisotropic",
                                   "|x| ~ T^theta, |y| = T on a doubling schedule in T");
  w.details["theta"] = to_string(theta);
  w.details["levels_scanned"] = merged;
  w.details["T_first"] = to_string(kFirstT);
  w.details["T_last_scanned"] = merged > 0 ? to_string(levels[merged - 1]) : "none";
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& pt : w.points) comps.push_back(detail::components_at(f, pt.x, pt.y));
  w.details["components"] = comps;
  return w;
}

Witness weighted_sign_search(const BivarPoly& f, int wx, int wy, long box, long nmax,
                             const Rat& target, int workers) {
  if (wx < 1 || wy < 1) throw input_error("weights must be positive");
  if (f.is_zero()) throw precondition_error("zero polynomial");
  const int weight = f.weighted_degree(wx, wy);
  BivarPoly top = f.weighted_part(wx, wy, weight);

  std::optional<std::pair<long, long>> seed;
  Rat seed_value;
  for_box(std::min(box, 64L), [&](long c1, long c2) {
    Rat v = top.eval(Rat(c1), Rat(c2));
    if (v < 0) {
      seed = {c1, c2};
      seed_value = v;
      return true;
    }
    return false;
  });
  nlohmann::json details = {{"weights", nlohmann::json::array({wx, wy})},
                            {"weight", weight},
                            {"lead", format(top)}};
  if (!seed) {
    Witness w;
    w.lemma = "weighted-sign";
    w.note = "the weighted lead form is nonnegative on the seed box: degenerate, no sign change";
    w.details = details;
    return w;
  }
  const auto [c1, c2] = *seed;
  PointEvaluator eval(f);
  Tracker total(target);
  long merged = detail::ordered_scan(
      nmax, workers, Tracker{target},
      [&](long i, Tracker& t) {
        Int n = i + 1;
        Int x = pow_int(n, static_cast<unsigned long>(wx)) * c1;
        Int y = pow_int(n, static_cast<unsigned long>(wy)) * c2;
        t.offer(x, y, eval(x, y));
      },
      [&](Tracker&& t) { return total.absorb(t); });
  Witness w = detail::from_tracker(
      total, "weighted-sign",
      "lead weighted form negative at (c1, c2); F(N^wx c1, N^wy c2) = N^w lead(c1, c2) + "
      "O(N^(w-1))");
  for (auto& [k, v] : details.items()) w.details[k] = v;
  w.details["seed"] = {{"c1", c1}, {"c2", c2}, {"lead_value", to_string(seed_value)}};
  w.details["N_scanned"] = merged;
  return w;
}

Witness weighted_cubic_sign_search(const BivarPoly& f, long nmax, const Rat& target,
                                   int workers) {
  Witness w = weighted_sign_search(f, 1, 2, 64, nmax, target, workers);
  w.lemma = "weighted-cubic";
  return w;
}

Witness leading_form_witness(const BivarPoly& f, long box, const Rat& target) {
  const int d = f.total_degree();
  if (d < 1) throw precondition_error("leading-form witness needs a nonconstant polynomial");
  BivarPoly lead = f.homogeneous_part(d);
  std::optional<std::pair<long, long>> seed;
  for_box(box, [&](long x, long y) {
    if (lead.eval(Rat(x), Rat(y)) < 0) {
      seed = {x, y};
      return true;
    }
    return false;
  });
  if (!seed) throw precondition_error("the leading form is nonnegative on the box");
  PointEvaluator eval(f);
  Tracker t(target);
  int steps = 0;
  for (Int n = 1; steps < 256 && !t.done(); n *= 2, ++steps) {
    Int x = n * seed->first, y = n * seed->second;
    t.offer(x, y, eval(x, y));
  }
  Witness w = detail::from_tracker(
      t, "indef", "the leading form is negative at an integer point; scaling it by N makes F "
                  "~ N^d F_d(x0, y0)");
  w.details["seed"] = {{"x0", seed->first},
                       {"y0", seed->second},
                       {"lead_value", to_string(lead.eval(Rat(seed->first), Rat(seed->second)))}};
  w.details["scalings"] = steps;
  return w;
}

}  // namespace sextic
