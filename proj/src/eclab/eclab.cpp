#include "eclab/eclab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace sextic {

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + sextic::to_string(x) + ", " + sextic::to_string(y) + ")";
}

EllipticCurve::EllipticCurve(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant() == 0) throw input_error("singular curve: 4A^3 + 27B^2 = 0");
}

Rat EllipticCurve::discriminant() const {
  return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_);
}

bool EllipticCurve::contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + a_ * p.x + b_;
}

CurvePoint ec_neg(const EllipticCurve& e, const CurvePoint& p) {
  if (!e.contains(p)) throw precondition_error("point " + p.to_string() + " is not on the curve");
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y);
}

CurvePoint ec_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (!e.contains(p)) throw precondition_error("point " + p.to_string() + " is not on the curve");
  if (!e.contains(q)) throw precondition_error("point " + q.to_string() + " is not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rat lambda;
  if (p.x == q.x) {
    if (p.y + q.y == 0) return CurvePoint::at_infinity();
    lambda = (3 * p.x * p.x + e.a()) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda - p.x - q.x;
  Rat y3 = lambda * (p.x - x3) - p.y;
  CurvePoint out = CurvePoint::affine(x3, y3);
  if (!e.contains(out)) throw internal_error("group law left the curve");
  return out;
}

CurvePoint ec_mul(const EllipticCurve& e, const CurvePoint& p, long n) {
  CurvePoint base = n < 0 ? ec_neg(e, p) : p;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1UL) acc = ec_add(e, acc, base);
    base = ec_add(e, base, base);
    k >>= 1;
  }
  return acc;
}

std::pair<Int, Int> rouse_closed_form(const Int& b1, const Int& r) {
  Int r2 = r * r;
  Int x = 64 * b1 * b1 * pow_int(r, 6) + 8 * b1 * r2;
  Int y = 512 * b1 * b1 * b1 * pow_int(r, 9) + 96 * b1 * b1 * pow_int(r, 5) + 3 * b1 * r;
  return {x, y};
}

RousePoint rouse_point(const Int& b1, const Int& b0, const Int& r) {
  if (b1 == 0) throw precondition_error("b1 = 0: the Rouse point is 3P = O; use the Danilov family");
  if (r == 0) throw precondition_error("r = 0 gives a singular curve");
  auto [x, y] = rouse_closed_form(b1, r);
  EllipticCurve e(Rat(b1), Rat(r * r * b1 * b1));
  CurvePoint p = CurvePoint::affine(Rat(0), Rat(r * b1));
  CurvePoint triple = ec_mul(e, p, 3);
  if (triple.infinity || triple.x != Rat(x) || triple.y != Rat(y)) {
    throw internal_error("closed-form 3P disagrees with the group law at b1 = " +
                         to_string(b1) + ", r = " + to_string(r) + ": " + triple.to_string());
  }
  Int gap = y * y - x * x * x - b1 * x - b0;
  if (gap != b1 * b1 * r * r - b0) throw internal_error("Rouse gap identity failed");
  return {r, x, y, gap};
}

std::vector<RousePoint> rouse_family(const Int& b1, const Int& b0, long r_from, long r_to,
                                     int y_sign) {
  std::vector<RousePoint> out;
  for (long r = r_from; r <= r_to; ++r) {
    if (r == 0) continue;
    Int rr = r;
    if (y_sign != 0) {
      // y(-r) = -y(r), so the sign of y follows sign(b1 r).
      int natural = sign(b1) * (r > 0 ? 1 : -1);
      if (natural != y_sign) rr = -rr;
    }
    out.push_back(rouse_point(b1, b0, rr));
  }
  return out;
}

std::pair<Int, Int> pell_fundamental(const Int& d) {
  if (d <= 0) throw input_error("Pell: d must be positive");
  if (is_perfect_square(d)) throw input_error("Pell: d = " + to_string(d) + " is a square");
  // Continued fraction of sqrt(d): m, q, a recurrences; convergents h/k.
  Int a0 = isqrt(d);
  Int m = 0, q = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  while (h * h - d * k * k != 1) {
    m = a * q - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    Int h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k};
}

PellSolution pell_solve(const Int& d, const Int& c, int count) {
  if (c != 1 && c != -1 && c != 4 && c != -4) {
    throw input_error("Pell: unsupported c = " + to_string(c) + " (supported: 1, -1, 4, -4)");
  }
  if (count < 1) throw input_error("Pell: count must be positive");
  auto [a, b] = pell_fundamental(d);
  PellSolution out{d, c, {}};

  // Every class of solutions has a representative with 0 <= v <= bound.
  Rat bound_sq = c > 0 ? Rat(b * b * c) / Rat(2 * (a + 1)) : Rat(b * b * (-c)) / Rat(2 * (a - 1));
  Int vmax = floor_rat(bound_sq);
  std::vector<std::pair<Int, Int>> reps;
  for (Int v = 0; v * v <= vmax; ++v) {
    Int u2 = c + d * v * v;
    if (u2 < 0 || !is_perfect_square(u2)) continue;
    Int u = isqrt(u2);
    reps.emplace_back(u, v);
    if (v != 0) reps.emplace_back(u, -v);
  }
  std::vector<std::pair<Int, Int>> all;
  for (auto [u, v] : reps) {
    for (int step = 0; step <= count + 1; ++step) {
      Int au = abs(u), av = abs(v);
      if (au > 0 && av > 0) all.emplace_back(au, av);
      Int nu = u * a + d * v * b, nv = u * b + v * a;
      u = nu;
      v = nv;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& [u, v] : all) {
    if (u * u - d * v * v != c) throw internal_error("Pell recurrence broke the norm");
    if (static_cast<int>(out.solutions.size()) == count) break;
    out.solutions.emplace_back(u, v);
  }
  return out;
}

std::string gap_ratio(const Int& gap, const Int& x, int root) {
  if (x <= 0) throw precondition_error("gap ratio needs x > 0");
  // ratio^root = |gap|^root / x; take the root in 256-bit floating point.
  const mp_bitcnt_t prec = 256;
  Rat q = make_rat(pow_int(abs(gap), static_cast<unsigned long>(root)), x);
  mpf_class value(q, prec);
  mpf_class z(0, prec);
  if (root == 2) {
    mpf_sqrt(z.get_mpf_t(), value.get_mpf_t());
  } else {
    double seed = seed_scale() * std::pow(value.get_d(), 1.0 / root);
    z = seed > 0 ? mpf_class(seed, prec) : mpf_class(1, prec);
    if (value == 0) {
      z = 0;
    } else {
      for (int i = 0; i < 200; ++i) {
        mpf_class zp(z, prec);
        mpf_class pw(1, prec);
        for (int j = 0; j < root - 1; ++j) pw *= z;
        z = ((root - 1) * z + value / pw) / root;
        if (abs(z - zp) == 0) break;
      }
    }
  }
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.12Ff", z.get_mpf_t());
  return buf;
}

double danilov_constant() { return 54.0 * std::pow(5.0, -2.5); }

std::vector<GapPoint> danilov_family(int count) {
  if (count < 1) throw input_error("Danilov family: count must be positive");
  std::vector<GapPoint> out;
  // Members sit at Lucas indices n = 15, 45, 75, ...: the Pell solution
  // number i is (L_n, F_n) with n = 2i + 1.
  int needed = 8 + 15 * count;
  auto pell = pell_solve(5, -4, needed);
  for (std::size_t i = 0; i < pell.solutions.size() && static_cast<int>(out.size()) < count; ++i) {
    const auto& [u, s] = pell.solutions[i];
    for (int sgn : {1, -1}) {
      // With t = u - 11, x = (t^2 + 10t + 5)/20 and y = (t^2 + 4t - 1)s/40
      // satisfy y^2 - x^3 = -27t/125 whenever u^2 - 5s^2 = -4.
      Int t = sgn * u - 11;
      Int xn = t * t + 10 * t + 5, yn = (t * t + 4 * t - 1) * s;
      if (xn <= 0 || xn % 20 != 0 || yn % 40 != 0) continue;
      Int x = xn / 20, y = abs(yn / 40);
      Int gap = y * y - x * x * x;
      if (gap * 125 != -27 * t) throw internal_error("Danilov gap identity failed");
      if (gap == 0 || gap * gap >= x) continue;
      out.push_back({Int(2 * static_cast<long>(i) + 1), x, y, gap, gap_ratio(gap, x, 2)});
      break;
    }
  }
  if (static_cast<int>(out.size()) < count) {
    throw internal_error("Danilov family: fewer members than requested in the Pell range");
  }
  return out;
}

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 isqrt_u128(u128 n) {
  u128 s = static_cast<u128>(seed_scale() * std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

Int to_int(i128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  Int hi = static_cast<unsigned long>(m >> 64);
  Int lo = static_cast<unsigned long>(m & ~static_cast<unsigned long>(0));
  Int out = hi * pow_int(Int(2), 64) + lo;
  return neg ? Int(-out) : out;
}

}  // namespace

std::vector<GapPoint> hall_scan(const Int& xmax_in, const Rat& threshold, int workers) {
  if (xmax_in < 2) throw input_error("hall_scan: Xmax must be at least 2");
  if (threshold < 0) throw input_error("hall_scan: threshold must be nonnegative");
  if (xmax_in > Int("5000000000000")) throw budget_error("hall_scan: Xmax above 5e12");
  const long xmax = to_long(xmax_in);
  const Int tnum = threshold.get_num(), tden = threshold.get_den();
  workers = std::max(1, workers);
  const Int cap_int = ceil_rat(threshold * threshold);
  const bool use_prefilter = cap_int < Int("1000000000000000000");
  const u128 cap = use_prefilter ? static_cast<u128>(to_long(cap_int)) : 0;
  const long span = xmax - 1;
  const long chunks = std::min<long>(std::max(1, workers) * 8L, span);
  std::vector<std::vector<GapPoint>> parts(chunks);
  auto work = [&](long c) {
    long lo = 2 + span * c / chunks, hi = 2 + span * (c + 1) / chunks;
    for (long x = lo; x < hi; ++x) {
      u128 x3 = static_cast<u128>(x) * x * x;
      u128 s = isqrt_u128(x3);
      if (x3 - s * s > s) ++s;
      i128 gap = static_cast<i128>(s * s) - static_cast<i128>(x3);
      if (gap == 0) continue;
      // |gap| <= threshold sqrt(x)  <=>  gap^2 tden^2 <= tnum^2 x. The
      // integer prefilter uses ceil(threshold^2) >= threshold^2.
      u128 ag = static_cast<u128>(gap < 0 ? -gap : gap);
      if (use_prefilter && ag * ag > cap * static_cast<u128>(x)) continue;
      Int g = to_int(gap);
      if (g * g * tden * tden > tnum * tnum * x) continue;
      Int xi = x;
      parts[c].push_back({0, xi, to_int(static_cast<i128>(s)), g, gap_ratio(g, xi, 2)});
    }
  };
  if (workers == 1) {
    for (long c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (long c; (c = next.fetch_add(1)) < chunks;) work(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<GapPoint> out;
  for (auto& p : parts) {
    for (auto& g : p) {
      g.index = static_cast<long>(out.size()) + 1;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace sextic
