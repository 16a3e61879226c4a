#include "density/density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>

#include "classify/classify.hpp"
#include "polycore/evaluator.hpp"
#include "polycore/roots.hpp"

namespace sextic {

namespace {

constexpr std::uint64_t kDefaultMemoryBits = std::uint64_t(1) << 31;
// Branch-following stops after this many consecutive |x| without a value
// below the top of the range.
constexpr std::int64_t kBranchQuietRun = 256;
constexpr int kBranchNeighbourhood = 2;

std::string decimal(const Rat& r, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double(r));
  return buf;
}

BinaryForm top_form(const BivarPoly& f) {
  int d = f.total_degree();
  std::vector<Rat> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = f.coeff(d - k, k);
  return BinaryForm(d, c);
}

// Bound for |p'| on [-M, M].
Rat derivative_bound(const UPoly& p, const Rat& M) {
  Rat bound = 0, power = 1;
  for (int k = 1; k <= p.degree(); ++k) {
    bound += abs(p.coeff(k)) * Rat(k) * power;
    power *= M;
  }
  return bound;
}

// Certified lower bound for min p on [-1, 1], within tolerance of the
// true minimum.
Rat interval_minimum(const UPoly& p, const Rat& tolerance) {
  const Rat one(1), minus_one(-1);
  Rat best = std::min(p.eval(minus_one), p.eval(one));
  UPoly dp = p.derivative();
  if (dp.degree() < 1) return best;
  for (IsolatingInterval iv : isolate_real_roots(dp)) {
    // Roots at +-1 are already covered by the endpoint values.
    bool at_endpoint = false;
    for (const Rat& e : {minus_one, one}) {
      if (iv.lo <= e && e <= iv.hi && dp.eval(e) == 0) at_endpoint = true;
    }
    if (at_endpoint) continue;
    while ((iv.lo < minus_one && iv.hi > minus_one) || (iv.lo < one && iv.hi > one)) {
      refine(iv, iv.width() / 2);
    }
    if (iv.hi <= minus_one || iv.lo >= one) continue;
    if (auto r = exact_rational_root(iv)) {
      best = std::min(best, p.eval(*r));
      continue;
    }
    // p is monotone between an endpoint and the critical point, so
    // p(xi) >= p(lo) - width * max |p'|.
    while (true) {
      Rat M = std::max(abs(iv.lo), abs(iv.hi));
      Rat slack = iv.width() * derivative_bound(p, M);
      if (slack <= tolerance) {
        best = std::min(best, Rat(std::min(p.eval(iv.lo), p.eval(iv.hi)) - slack));
        break;
      }
      refine(iv, iv.width() / 2);
    }
  }
  return best;
}

// c m^d >= threshold + sum_k S_k m^k; increasing in m once it holds.
bool box_check(const Rat& c, int d, const std::vector<Rat>& norms, const Int& threshold,
               std::int64_t m) {
  Rat mm(m);
  Rat lhs = c * Rat(pow_int(Int(m), static_cast<unsigned long>(d)));
  Rat rhs(threshold);
  Rat power = 1;
  for (int k = 0; k < d; ++k) {
    rhs += norms[k] * power;
    power *= mm;
  }
  return lhs >= rhs;
}

template <class Fn>
void parallel_rows(std::int64_t first, std::int64_t last, int workers, Fn fn) {
  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::int64_t x = first; x <= last; ++x) fn(x);
    return;
  }
  std::atomic<std::int64_t> next{first};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t x; (x = next.fetch_add(1)) <= last;) fn(x);
    });
  }
  for (auto& t : pool) t.join();
}

// Value sink for [lo, hi): a presence bitmap or a list of offsets.
class ValueSink {
 public:
  ValueSink(CountMethod method, std::int64_t lo, std::int64_t hi, std::int64_t rows)
      : method_(method), lo_(lo), hi_(hi) {
    if (method_ == CountMethod::Bitmap) {
      words_ = std::vector<std::atomic<std::uint64_t>>((hi - lo + 63) / 64);
    } else {
      per_row_.resize(rows);
    }
  }

  bool in_range(const Int& v) const { return v >= lo_ && v < hi_; }

  void add(std::int64_t row, const Int& v) {
    std::int64_t off = v.get_si() - lo_;
    if (method_ == CountMethod::Bitmap) {
      words_[off >> 6].fetch_or(std::uint64_t(1) << (off & 63), std::memory_order_relaxed);
    } else {
      per_row_[row].push_back(off);
    }
  }

  void add_extra(const Int& v) {
    std::int64_t off = v.get_si() - lo_;
    if (method_ == CountMethod::Bitmap) {
      words_[off >> 6].fetch_or(std::uint64_t(1) << (off & 63), std::memory_order_relaxed);
    } else {
      extra_.push_back(off);
    }
  }

  std::int64_t count() {
    if (method_ == CountMethod::Bitmap) {
      std::int64_t n = 0;
      for (const auto& w : words_) n += __builtin_popcountll(w.load());
      return n;
    }
    std::vector<std::int64_t> all = extra_;
    for (const auto& row : per_row_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  }

 private:
  CountMethod method_;
  std::int64_t lo_, hi_;
  std::vector<std::atomic<std::uint64_t>> words_;
  std::vector<std::vector<std::int64_t>> per_row_;
  std::vector<std::int64_t> extra_;
};

// Enumerates the box |x|, |y| <= B and sends integral values in range to
// the sink. Returns the number of points evaluated.
std::uint64_t enumerate_box(const BivarPoly& f, std::int64_t B, int workers, ValueSink& sink) {
  PointEvaluator eval(f);
  const Int& den = eval.denominator();
  parallel_rows(-B, B, workers, [&](std::int64_t x) {
    std::vector<Int> col = eval.column(Int(x));
    Int v, q;
    for (std::int64_t y = -B; y <= B; ++y) {
      v = 0;
      for (auto c = col.rbegin(); c != col.rend(); ++c) {
        v *= y;
        v += *c;
      }
      if (den != 1) {
        if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) continue;
        v /= den;
      }
      if (sink.in_range(v)) sink.add(x + B, v);
    }
  });
  return static_cast<std::uint64_t>(2 * B + 1) * static_cast<std::uint64_t>(2 * B + 1);
}

// Cores in the original coordinates whose real branches carry small values.
std::vector<BivarPoly> small_value_cores(const BivarPoly& f) {
  std::vector<BivarPoly> cores;
  if (f.total_degree() != 6) return cores;
  ClassificationReport rep = classify(f);
  const BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
  std::vector<BivarPoly> normalized;
  if (rep.mp1_cubic && rep.mp1_cubic->completion) cores.push_back(rep.mp1_cubic->completion->core);
  if (rep.mp2 && rep.mp2->completion) {
    BivarPoly c = rep.mp2->completion->core;
    normalized.push_back(rep.mp2->y_flipped ? c.substitute(x, -y) : c);
  }
  if (rep.mp3 && rep.mp3->square) {
    const Mp3Square& sq = *rep.mp3->square;
    BivarPoly c;
    if (sq.completion) {
      c = sq.completion->core;
    } else if (sq.alpha1 != 0) {
      c = x.pow(3) - sq.alpha1 * y.pow(2);
    }
    if (!c.is_zero()) normalized.push_back(sq.x_flipped ? c.substitute(-x, y) : c);
  }
  // G(X, Y) = F(to_original(X, Y)); a core in (X, Y) is carried back with
  // the inverse map X = p x + q y, Y = r x + s y.
  const Unimodular& n = rep.normalization;
  BivarPoly X = Rat(n.p) * x + Rat(n.q) * y, Y = Rat(n.r) * x + Rat(n.s) * y;
  for (const auto& c : normalized) cores.push_back(c.substitute(X, Y));
  return cores;
}

std::uint64_t follow_branches(const BivarPoly& f, const std::vector<BivarPoly>& cores,
                              std::int64_t xmax, std::int64_t top, ValueSink& sink) {
  PointEvaluator eval(f);
  const Int& den = eval.denominator();
  std::uint64_t points = 0;
  for (const auto& core : cores) {
    if (core.degree_y() < 1) continue;
    std::int64_t quiet = 0;
    for (std::int64_t ax = 0; ax <= xmax && quiet < kBranchQuietRun; ++ax) {
      bool below_top = false;
      for (std::int64_t x : {ax, -ax}) {
        if (ax == 0 && x < 0) continue;
        UPoly g = core.in_y_at(Rat(x));
        if (g.degree() < 1) continue;
        for (IsolatingInterval iv : isolate_real_roots(g)) {
          refine(iv, Rat(1));
          Int lo = floor_rat(iv.lo) - kBranchNeighbourhood, hi = ceil_rat(iv.hi) + kBranchNeighbourhood;
          for (Int yy = lo; yy <= hi; ++yy) {
            Int v = eval.numerator(Int(x), yy);
            ++points;
            if (den != 1) {
              if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) continue;
              v /= den;
            }
            if (v < top) below_top = true;
            if (sink.in_range(v)) sink.add_extra(v);
          }
        }
      }
      quiet = below_top ? 0 : quiet + 1;
    }
  }
  return points;
}

std::int64_t best_effort_bound(int d, std::int64_t threshold) {
  double root = d >= 1 ? std::pow(static_cast<double>(threshold), 1.0 / d) : 1.0;
  return 2 * static_cast<std::int64_t>(std::ceil(root)) + 16;
}

}  // namespace

std::uint64_t default_memory_bits() {
  if (const char* env = std::getenv("SEXTIC_SIEVE_MEM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMemoryBits;
}

Rat leading_form_minimum(const BivarPoly& f, const Rat& tolerance) {
  if (f.total_degree() < 1) throw precondition_error("leading-form minimum needs a nonconstant F");
  BinaryForm top = top_form(f);
  if (definiteness(top) != Definiteness::PositiveDefinite) {
    throw precondition_error("the leading form is not positive definite");
  }
  // By evenness the boundary of the unit square reduces to x = 1 and y = 1.
  UPoly along_x = top.dehomogenize_x();  // F_d(t, 1)
  UPoly along_y = top.dehomogenize();    // F_d(1, t)
  Rat tol = tolerance;
  while (true) {
    Rat c = std::min(interval_minimum(along_x, tol), interval_minimum(along_y, tol));
    if (c > 0) return c;
    tol /= 16;
  }
}

std::optional<EnumerationBox> certified_box(const BivarPoly& f, const Int& threshold) {
  int d = f.total_degree();
  if (d < 2 || definiteness(top_form(f)) != Definiteness::PositiveDefinite) return std::nullopt;
  Rat c = leading_form_minimum(f);
  std::vector<Rat> norms(d, Rat(0));
  for (const auto& [e, coeff] : f.terms()) {
    int k = e.first + e.second;
    if (k < d) norms[k] += abs(coeff);
  }
  double estimate =
      seed_scale() * std::pow(std::max(1.0, threshold.get_d()) / to_double(c), 1.0 / d);
  std::int64_t B = std::max<std::int64_t>(0, static_cast<std::int64_t>(estimate));
  while (B > 0 && box_check(c, d, norms, threshold, B)) --B;
  while (!box_check(c, d, norms, threshold, B + 1)) ++B;
  EnumerationBox box;
  box.bound = B;
  box.certified = true;
  box.c_lower = c;
  box.c_decimal = decimal(c);
  box.justification = "F >= c m^" + std::to_string(d) +
                      " - sum_k |F_k|_1 m^k >= " + to_string(threshold) +
                      " for every point with max(|x|,|y|) = m > " + std::to_string(B);
  return box;
}

DensityReport count_range(const BivarPoly& f, std::int64_t N, const DensityOptions& opt) {
  if (N < 2) throw input_error("N must be at least 2");
  if (N > (std::int64_t(1) << 61)) throw input_error("N is too large");
  DensityReport rep;
  rep.N = N;
  rep.method = opt.method == CountMethod::Bitmap ? "bitmap" : "sorted-unique";
  if (opt.method == CountMethod::Bitmap && static_cast<std::uint64_t>(N) > opt.memory_bits) {
    throw budget_error("bitmap of " + std::to_string(N) + " bits exceeds the memory budget of " +
                       std::to_string(opt.memory_bits) + " bits");
  }
  const Int threshold(static_cast<long>(2 * N));
  auto cert = certified_box(f, threshold);
  if (opt.box > 0) {
    rep.box.bound = opt.box;
    if (cert && opt.box >= cert->bound) {
      rep.box = *cert;
      rep.box.bound = opt.box;
    } else {
      rep.box.justification = "user box; completeness not certified";
    }
  } else if (cert) {
    rep.box = *cert;
  } else {
    rep.box.bound = best_effort_bound(std::max(1, f.total_degree()), 2 * N);
    rep.box.justification =
        "leading form not positive definite: best-effort box plus branch-following points; "
        "completeness not claimed";
  }
  ValueSink sink(opt.method, N, 2 * N, 2 * rep.box.bound + 1);
  if (!f.is_zero()) rep.points_enumerated = enumerate_box(f, rep.box.bound, opt.workers, sink);
  if (!rep.box.certified && !f.is_zero()) {
    rep.branch_points = follow_branches(f, small_value_cores(f), opt.branch_xmax, 2 * N, sink);
  }
  rep.count = sink.count();
  double n = static_cast<double>(N);
  rep.landau_fit = static_cast<double>(rep.count) * std::sqrt(std::log(n)) / n;
  rep.cube_root_fit = static_cast<double>(rep.count) / std::cbrt(n);
  return rep;
}

GrowthFit growth_exponent(const BivarPoly& f, const std::vector<std::int64_t>& Ns, int workers) {
  if (Ns.size() < 3) throw input_error("growth fit needs at least 3 ladder points");
  GrowthFit fit;
  for (std::int64_t N : Ns) {
    if (N < 2) throw input_error("ladder points must be at least 2");
    auto box = certified_box(f, Int(static_cast<long>(N)) + 1);
    if (!box) throw precondition_error("growth fit needs a positive definite leading form");
    ValueSink sink(CountMethod::SortedUnique, -N, N + 1, 2 * box->bound + 1);
    enumerate_box(f, box->bound, workers, sink);
    fit.points.push_back({N, sink.count(), box->bound});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(fit.points.size());
  for (const auto& p : fit.points) {
    double lx = std::log(static_cast<double>(p.N));
    double ly = std::log(static_cast<double>(std::max<std::int64_t>(1, p.count)));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = k * sxx - sx * sx;
  if (denom == 0) throw input_error("ladder points must be distinct");
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  return fit;
}

std::vector<std::int64_t> two_squares_sieve(std::int64_t n_max, std::uint64_t memory_bits) {
  if (n_max < 1) throw input_error("Nmax must be positive");
  if (static_cast<std::uint64_t>(n_max) * 9 > memory_bits) {
    throw budget_error("sieve up to " + std::to_string(n_max) + " exceeds the memory budget");
  }
  std::vector<std::uint8_t> good(n_max + 1, 1);
  std::vector<bool> composite(n_max + 1, false);
  good[0] = 0;
  for (std::int64_t p = 2; p <= n_max; ++p) {
    if (composite[p]) continue;
    if (p <= n_max / p) {
      for (std::int64_t m = p * p; m <= n_max; m += p) composite[m] = true;
    }
    if (p % 4 != 3) continue;
    for (std::int64_t m = p; m <= n_max; m += p) {
      int v = 0;
      for (std::int64_t q = m; q % p == 0; q /= p) ++v;
      if (v % 2 == 1) good[m] = 0;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (good[n]) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> two_squares_enumeration(std::int64_t n_max) {
  if (n_max < 1) throw input_error("Nmax must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a * a <= n_max; ++a) {
    for (std::int64_t b = a; a * a + b * b <= n_max; ++b) {
      if (a + b > 0) out.push_back(a * a + b * b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LandauBaseline landau_baseline(std::int64_t n_max, std::uint64_t memory_bits) {
  if (n_max < 100) throw input_error("Nmax must be at least 100");
  LandauBaseline l;
  l.n_max = n_max;
  l.count = static_cast<std::int64_t>(two_squares_sieve(n_max, memory_bits).size());
  double n = static_cast<double>(n_max);
  l.ratio = static_cast<double>(l.count) / (n / std::sqrt(std::log(n)));
  return l;
}

StanleyProbe stanley_probe(const BivarPoly& f, const std::vector<std::int64_t>& Ns,
                           const DensityOptions& opt) {
  StanleyProbe probe;
  for (std::int64_t N : Ns) {
    DensityReport r = count_range(f, N, opt);
    probe.rows.push_back({N, r.count, r.landau_fit, r.box.certified});
  }
  if (probe.rows.size() >= 2) {
    probe.bounded_looking = true;
    for (std::size_t i = probe.rows.size() / 3; i + 1 < probe.rows.size(); ++i) {
      if (probe.rows[i + 1].normalized > probe.rows[i].normalized) probe.bounded_looking = false;
    }
  }
  return probe;
}

nlohmann::json to_json(const DensityReport& r) {
  nlohmann::json box = {{"bound", r.box.bound},
                        {"certified", r.box.certified},
                        {"justification", r.box.justification}};
  if (r.box.c_lower) {
    box["c_lower"] = to_string(*r.box.c_lower);
    box["c_decimal"] = r.box.c_decimal;
  }
  return {{"schema", "1"},
          {"N", r.N},
          {"range", nlohmann::json::array({r.N, 2 * r.N})},
          {"count", r.count},
          {"box", box},
          {"points_enumerated", r.points_enumerated},
          {"branch_points", r.branch_points},
          {"method", r.method},
          {"fits",
           {{"count_sqrt_log_N_over_N", r.landau_fit}, {"count_over_cbrt_N", r.cube_root_fit}}}};
}

nlohmann::json to_json(const GrowthFit& g) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : g.points) pts.push_back({{"N", p.N}, {"count", p.count}, {"box", p.box}});
  return {{"schema", "1"}, {"slope", g.slope}, {"intercept", g.intercept}, {"points", pts}};
}

nlohmann::json to_json(const LandauBaseline& l) {
  return {{"schema", "1"},
          {"n_max", l.n_max},
          {"count", l.count},
          {"ratio", l.ratio},
          {"landau_ramanujan", 0.76422365358922}};
}

nlohmann::json to_json(const StanleyProbe& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"N", r.N},
                    {"count", r.count},
                    {"normalized", r.normalized},
                    {"certified", r.certified}});
  }
  return {{"schema", "1"}, {"rows", rows}, {"bounded_looking", s.bounded_looking}};
}

std::string to_csv(const StanleyProbe& s) {
  std::string out = "N,count,normalized\n";
  char buf[128];
  for (const auto& r : s.rows) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%.12g\n", static_cast<long long>(r.N),
                  static_cast<long long>(r.count), r.normalized);
    out += buf;
  }
  return out;
}

}  // namespace sextic
