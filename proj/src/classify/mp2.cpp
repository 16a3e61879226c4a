#include "classify/classify.hpp"
#include "polycore/parse.hpp"

namespace sextic {

namespace {

SqrtRat sqrt_of(const Rat& v) {
  if (auto r = rational_sqrt(v)) return {*r, false};
  return {v, true};
}

BivarPoly flip_y(const BivarPoly& f) {
  return f.substitute(BivarPoly::var_x(), -BivarPoly::var_y());
}

}  // namespace

Mp2Analysis mp2_square_check(const BivarPoly& input) {
  Mp2Analysis m;
  BivarPoly f = input;
  if (f.coeff(2, 3) > 0) {
    f = flip_y(f);
    m.y_flipped = true;
  }
  m.a2 = f.coeff(4, 2);
  m.a1 = f.coeff(2, 3);
  m.a0 = f.coeff(0, 4);
  m.b2 = f.coeff(5, 1);
  m.b1 = f.coeff(3, 2);
  m.b0 = f.coeff(1, 3);

  Rat disc = m.a1 * m.a1 - 4 * m.a2 * m.a0;
  m.is_square = disc == 0 && m.a2 > 0 && m.a0 >= 0;
  if (!m.is_square) {
    m.verdict = disc > 0 ? "a2 x^4 + a1 x^2 y + a0 y^2 is indefinite in (x^2, y): not arithmetically positive"
                         : "a2 x^4 + a1 x^2 y + a0 y^2 is not a perfect square";
    return m;
  }
  m.alpha1 = sqrt_of(m.a2);
  m.alpha2 = sqrt_of(m.a0);
  m.A = m.a2;
  m.rho = -m.a1 / (2 * m.a2);
  if (m.a0 == 0) {
    m.verdict = "alpha2 = 0: |x| is bounded on the small region, fixed-x dearth";
    return m;
  }

  m.b_divisible = m.b2 * m.rho * m.rho + m.b1 * m.rho + m.b0 == 0;
  if (!m.b_divisible) {
    m.verdict = "b2 x^4 + b1 x^2 y + b0 y^2 is not divisible by x^2 - rho y";
    return m;
  }
  m.beta1 = m.b2 / (2 * m.A);
  m.beta2 = -(m.b1 + m.b2 * m.rho) / (2 * m.A);

  BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
  BivarPoly core = y * (x * x - m.rho * y) + x * (m.beta1 * (x * x) - m.beta2 * y);
  m.completion = make_completion(f, core, m.A, m.y_flipped ? "y -> -y" : "none");

  BivarPoly rem = m.completion->remainder;
  for (auto [i, j] : {std::pair{6, 0}, std::pair{4, 1}, std::pair{2, 2}}) {
    m.b_layer = m.b_layer + BivarPoly::monomial(i, j, rem.coeff(i, j));
  }
  m.b_vanishes = m.b_layer.is_zero();
  if (!m.b_vanishes) {
    m.verdict = "B = " + format(m.b_layer) +
                " is nonzero: F is of size x^6 with the sign of B near y = x^2/rho";
    return m;
  }
  try {
    m.quartic = reduce_to_quartic(f, Rat(1), m.rho, m.beta1, m.beta2);
    m.verdict = "reduced to a weighted quartic in (x, t)";
  } catch (const Error& e) {
    m.quartic_failure = e.what();
    m.verdict = "square completed and B = 0; weighted quartic reduction failed: " +
                m.quartic_failure;
  }
  return m;
}

BivarPoly reduce_to_quartic(const BivarPoly& f, const Rat& alpha1, const Rat& alpha2,
                            const Rat& beta1, const Rat& beta2) {
  if (alpha1 == 0 || alpha2 == 0) throw precondition_error("alpha1 and alpha2 must be nonzero");
  Rat lead = alpha1 / alpha2;
  Rat sigma = (beta1 * alpha2 - beta2 * alpha1) / (alpha1 * alpha2);
  BivarPoly x = BivarPoly::var_x(), t = BivarPoly::var_y();
  BivarPoly y_img = lead * (x * x) + sigma * x + t;
  BivarPoly out = f.substitute(x, y_img);
  // Inverse substitution t = y - lead x^2 - sigma x must give F back.
  BivarPoly t_img = t - lead * (x * x) - sigma * x;
  if (out.substitute(x, t_img) != f) throw internal_error("quartic reduction round trip failed");
  int w = out.weighted_degree(1, 2);
  if (w > 4) {
    BivarPoly excess;
    for (int k = w; k > 4; --k) excess = excess + out.weighted_part(1, 2, k);
    throw precondition_error("weighted degree " + std::to_string(w) +
                             " > 4 after substitution; offending terms " + format(excess));
  }
  return out;
}

}  // namespace sextic
