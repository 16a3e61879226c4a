#include <cmath>
#include <cstdio>

#include "polycore/parse.hpp"
#include "witness/internal.hpp"

namespace sextic {

using detail::Direction;
using detail::Tracker;

namespace {

// Growth exponent 5/2 - epsilon with epsilon = 1/10, used for reporting only.
constexpr double kGrowthExponent = 2.4;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

nlohmann::json directions_json(const std::vector<Direction>& dirs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : dirs) {
    out.push_back({{"direction", d.text}, {"multiplicity", d.multiplicity}, {"rational", d.rational}});
  }
  return out;
}

// Completion (r, s) of a primitive (p, q) to a determinant-one matrix.
std::pair<Int, Int> completion_of(const Int& p, const Int& q) {
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  // p u + q v = 1, so (r, s) = (-v, u) has p s - q r = 1.
  return {-v, u};
}

}  // namespace

Witness dirichlet_witness(const BivarPoly& f, int max_convergents, const Rat& target) {
  if (f.total_degree() != 6) throw precondition_error("Dirichlet witness needs a sextic");
  if (max_convergents < 1) throw input_error("convergent budget must be positive");
  auto parts = decompose(f);
  if (definiteness(parts[6]) != Definiteness::PositiveSemi) {
    throw precondition_error("Dirichlet witness needs F6 positive semi-definite and not definite");
  }
  if (parts[5].is_zero()) throw precondition_error("Dirichlet witness needs F5 != 0");

  auto dirs = detail::root_directions(parts[6]);
  std::vector<std::vector<std::pair<Int, Int>>> conv(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (!dirs[i].rational) conv[i] = convergents(*dirs[i].slope, max_convergents);
  }

  PointEvaluator eval(f);
  Tracker t(target);
  nlohmann::json growth = nlohmann::json::array();
  double fit = INFINITY;
  long evaluated = 0;
  for (int n = 0; n < max_convergents && !t.done(); ++n) {
    for (std::size_t i = 0; i < dirs.size() && !t.done(); ++i) {
      Int u, v;
      if (dirs[i].rational) {
        Int scale = pow_int(Int(2), static_cast<unsigned long>(n));
        u = scale * dirs[i].p;
        v = scale * dirs[i].q;
      } else {
        if (n >= static_cast<int>(conv[i].size())) continue;
        u = conv[i][n].first;
        v = conv[i][n].second;
      }
      for (int sgn : {1, -1}) {
        Int x = sgn * u, y = sgn * v;
        Rat value = eval(x, y);
        ++evaluated;
        if (value < 0) {
          double norm_log = detail::log_abs(Rat(x * x + y * y));
          double ratio = std::exp(detail::log_abs(value) - kGrowthExponent * norm_log);
          fit = std::min(fit, ratio);
          growth.push_back({{"point", nlohmann::json::array({to_string(x), to_string(y)})},
                            {"ratio", fmt_double(ratio)}});
        }
        if (t.offer(x, y, value)) break;
      }
    }
  }
  Witness w = detail::from_tracker(
      t, "gcd",
      "convergents toward a real root of F6 where F5 does not vanish; F = F5 + O(|(u,v)|^4) "
      "there, and the sign of F5 flips with (u, v) -> (-u, -v)");
  w.details["directions"] = directions_json(dirs);
  w.details["evaluated"] = evaluated;
  w.details["growth_exponent"] = "5/2 - 1/10";
  w.details["growth"] = growth;
  if (std::isfinite(fit)) w.details["growth_constant_fit"] = fmt_double(fit);
  return w;
}

Witness strip_witness(const BivarPoly& f, long radius, long ymax, const Rat& target) {
  if (f.total_degree() < 1) throw precondition_error("strip search needs a nonconstant polynomial");
  if (radius < 0 || ymax < 1) throw input_error("strip search budgets must be positive");
  auto parts = decompose(f);
  auto dirs = detail::root_directions(parts[f.total_degree()]);
  if (dirs.empty()) throw precondition_error("the leading form has no real root direction");

  PointEvaluator eval(f);
  Tracker t(target);
  std::vector<long> offsets{0};
  for (long d = 1; d <= radius; ++d) {
    offsets.push_back(d);
    offsets.push_back(-d);
  }
  std::vector<std::pair<Int, Int>> completions(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i].rational) completions[i] = completion_of(dirs[i].p, dirs[i].q);
  }
  long evaluated = 0;
  for (long n = 1; n <= ymax && !t.done(); ++n) {
    for (std::size_t i = 0; i < dirs.size() && !t.done(); ++i) {
      Int bx, by, sx, sy;
      if (dirs[i].rational) {
        bx = n * dirs[i].p;
        by = n * dirs[i].q;
        sx = completions[i].first;
        sy = completions[i].second;
      } else {
        by = n;
        bx = detail::floor_times(*dirs[i].slope, by);
        sx = 1;
        sy = 0;
      }
      for (long d : offsets) {
        Int x = bx + d * sx, y = by + d * sy;
        bool hit = false;
        for (int sgn : {1, -1}) {
          ++evaluated;
          if (t.offer(sgn * x, sgn * y, eval(sgn * x, sgn * y))) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
    }
  }
  Witness w = detail::from_tracker(
      t, "strip", "integer points within a bounded distance of the real root lines of the leading form");
  w.details["directions"] = directions_json(dirs);
  w.details["radius"] = radius;
  w.details["ymax"] = ymax;
  w.details["evaluated"] = evaluated;
  return w;
}

}  // namespace sextic
