#include <algorithm>
#include <cmath>

#include "classify/classify.hpp"
#include "polycore/parse.hpp"

namespace sextic {

std::string to_string(Route r) {
  switch (r) {
    case Route::MP0: return "MP0";
    case Route::MP1Cubic: return "MP1-cubic";
    case Route::MP1Quadratic: return "MP1-quadratic";
    case Route::MP1Linear: return "MP1-linear";
    case Route::MP2: return "MP2";
    case Route::MP3: return "MP3";
    case Route::PaperGap: return "paper-gap";
    case Route::NotPositiveLeading: return "not-positive-leading";
    case Route::NotASextic: return "not-a-sextic";
  }
  return "unknown";
}

Unimodular Unimodular::sending_to_x(const Int& a, const Int& b) {
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw precondition_error("linear form is not primitive");
  // a*u + b*v = 1, so (r, s) = (-v, u) has a*s - b*r = 1; shift by k*(a, b).
  Int r0 = -v, s0 = u;
  std::vector<Int> candidates;
  auto add_near = [&](const Int& num, const Int& den) {
    if (den == 0) return;
    Rat c = make_rat(num, den);
    for (Int k = floor_rat(c) - 1; k <= ceil_rat(c) + 1; ++k) candidates.push_back(k);
  };
  add_near(-r0, a);
  add_near(-s0, b);
  add_near(-(r0 - s0), a - b);
  add_near(-(r0 + s0), a + b);
  candidates.push_back(0);
  std::sort(candidates.begin(), candidates.end());
  // Smallest max-norm, ties broken by the smaller sum |r| + |s|.
  Int best_k = 0, best_norm = -1, best_sum = -1;
  for (const auto& k : candidates) {
    Int nr = abs(r0 + k * a), ns = abs(s0 + k * b);
    Int norm = std::max(nr, ns), sum = nr + ns;
    if (best_norm < 0 || norm < best_norm || (norm == best_norm && sum < best_sum)) {
      best_norm = norm;
      best_sum = sum;
      best_k = k;
    }
  }
  Unimodular m;
  m.p = a;
  m.q = b;
  m.r = r0 + best_k * a;
  m.s = s0 + best_k * b;
  return m;
}

BivarPoly Unimodular::to_new(const BivarPoly& f) const {
  // x = s X - q Y, y = -r X + p Y.
  BivarPoly x_img = BivarPoly::monomial(1, 0, Rat(s)) - BivarPoly::monomial(0, 1, Rat(q));
  BivarPoly y_img = BivarPoly::monomial(1, 0, Rat(-r)) + BivarPoly::monomial(0, 1, Rat(p));
  return f.substitute(x_img, y_img);
}

std::pair<Int, Int> Unimodular::to_original(const Int& X, const Int& Y) const {
  return {s * X - q * Y, -r * X + p * Y};
}

std::pair<Int, Int> Unimodular::to_new_point(const Int& x, const Int& y) const {
  return {p * x + q * y, r * x + s * y};
}

Unimodular Unimodular::then(const Unimodular& n) const {
  Unimodular m;
  m.p = n.p * p + n.q * r;
  m.q = n.p * q + n.q * s;
  m.r = n.r * p + n.s * r;
  m.s = n.r * q + n.s * s;
  return m;
}

SquareCompletion make_completion(const BivarPoly& input, BivarPoly core, Rat scale,
                                 std::string substitution) {
  BivarPoly remainder = input - scale * (core * core);
  SquareCompletion c{std::move(core), std::move(scale), std::move(remainder),
                     std::move(substitution)};
  if (c.scale * (c.core * c.core) + c.remainder != input) {
    throw internal_error("square completion identity failed");
  }
  return c;
}

std::string SqrtRat::to_string() const {
  if (!under_sqrt) return sextic::to_string(value);
  return "sqrt(" + sextic::to_string(value) + ")";
}

double SqrtRat::approx() const {
  double v = to_double(value);
  return under_sqrt ? std::sqrt(v) : v;
}

Condition divides_condition(const std::string& name, const BinaryForm& divisor,
                            const BinaryForm& dividend) {
  Condition c;
  c.name = name;
  c.divisor = format(divisor);
  c.dividend = format(dividend);
  if (dividend.is_zero()) {
    c.value = true;
    c.quotient = "0";
    c.remainder = "0";
    return c;
  }
  if (dividend.degree() < divisor.degree()) {
    c.value = false;
    c.quotient = "0";
    c.remainder = c.dividend;
    return c;
  }
  auto d = divide(dividend, divisor);
  c.value = d.exact;
  c.quotient = format(d.quotient);
  c.remainder = format(d.remainder);
  return c;
}

Condition gcd_condition(const BinaryForm& f6, const BinaryForm& f5) {
  if (f6.is_zero()) throw precondition_error("gcd condition needs a nonzero leading form");
  Condition c;
  c.name = "gcd(F6,F5)=1";
  c.dividend = format(f6);
  c.divisor = format(f5);
  BinaryForm g = form_gcd(f6, f5);
  c.value = g.degree() == 0;
  c.quotient = format(g);
  c.remainder = "0";
  c.detail = "gcd = " + format(g);
  return c;
}

const Condition* ClassificationReport::condition(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace sextic
