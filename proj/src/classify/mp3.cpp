#include <algorithm>
#include <map>

#include "classify/classify.hpp"
#include "polycore/parse.hpp"

namespace sextic {

namespace {

constexpr int kWx = 2, kWy = 3;

// (x-exponent, y-exponent) multipliers of the L layers in (calF0), with the
// weighted degree of the layer: xy L1, x^2 L2, y L3, x L4.
struct LayerSpec {
  int i, j, weight;
};
constexpr LayerSpec kLayers[4] = {{1, 1, 11}, {2, 0, 10}, {0, 1, 9}, {1, 0, 8}};

BivarPoly flip_x(const BivarPoly& f) {
  return f.substitute(-BivarPoly::var_x(), BivarPoly::var_y());
}

// Smallest positive integer u with den1 | u^4 and den2 | u^6.
Int minimal_scale(const Int& den1, const Int& den2) {
  std::map<Int, std::pair<long, long>> vals;  // prime -> (v in den1, v in den2)
  auto factor_into = [&](Int n, bool first) {
    for (Int p = 2; p * p <= n && p < 1000000; ++p) {
      while (n % p == 0) {
        n /= p;
        auto& v = vals[p];
        (first ? v.first : v.second)++;
      }
    }
    if (n > 1) {
      auto& v = vals[n];
      (first ? v.first : v.second)++;
    }
  };
  factor_into(den1, true);
  factor_into(den2, false);
  Int u = 1;
  for (const auto& [p, v] : vals) {
    long e = std::max((v.first + 3) / 4, (v.second + 5) / 6);
    u *= pow_int(p, static_cast<unsigned long>(e));
  }
  return u;
}

}  // namespace

Mp3Shape mp3_shape_extract(const BivarPoly& f) {
  auto parts = decompose(f);
  if (f.total_degree() != 6) throw precondition_error("MP3 shape needs a sextic");
  const BinaryForm& f6 = parts[6];
  for (int k = 1; k <= 6; ++k) {
    if (f6.coeff(k) != 0) throw precondition_error("F6 is not a multiple of x^6");
  }
  int v5 = parts[5].x_power(), v4 = parts[4].x_power();
  if (v5 < 3) throw precondition_error("x^3 does not divide F5: anisotropic witness applies");
  if (v5 >= 4 && v4 == 1) {
    throw precondition_error("x^4 | F5 and x | F4 exactly: degenerate witness applies");
  }
  if (v5 >= 4 && v4 >= 2) {
    throw precondition_error("x^4 | F5 and x^2 | F4: weighted-cubic sign search applies");
  }
  Mp3Shape s;
  s.a2 = f.coeff(6, 0);
  s.a1 = f.coeff(3, 2);
  s.a0 = f.coeff(0, 4);
  BivarPoly lead = BivarPoly::monomial(6, 0, s.a2) + BivarPoly::monomial(3, 2, s.a1) +
                   BivarPoly::monomial(0, 4, s.a0);
  BivarPoly layers;
  for (int n = 0; n < 4; ++n) {
    const auto& L = kLayers[n];
    s.L[n] = {f.coeff(L.i + 3, L.j), f.coeff(L.i, L.j + 2)};
    layers = layers + BivarPoly::monomial(L.i + 3, L.j, s.L[n].first) +
             BivarPoly::monomial(L.i, L.j + 2, s.L[n].second);
  }
  s.G = f - lead - layers;
  if (s.G.weighted_degree(kWx, kWy) > 7) throw internal_error("calF0 remainder has weight above 7");
  return s;
}

Mp3Square mp3_square_and_proportionality(const BivarPoly& input, const Mp3Shape& shape0) {
  Mp3Square sq;
  Rat disc = shape0.a1 * shape0.a1 - 4 * shape0.a2 * shape0.a0;
  sq.is_square = disc == 0 && shape0.a2 > 0 && shape0.a0 >= 0;
  if (!sq.is_square) {
    sq.verdict = disc > 0 ? "calF is indefinite in (x^3, y^2): not arithmetically positive"
                          : "calF = a2 x^6 + a1 x^3 y^2 + a0 y^4 is not a perfect square";
    return sq;
  }
  if (shape0.a0 == 0) {
    sq.is_square = false;
    sq.verdict = "calF = a2 x^6 is degenerate (alpha1 = 0)";
    return sq;
  }
  BivarPoly f = input;
  if (shape0.a1 > 0) {
    f = flip_x(f);
    sq.x_flipped = true;
  }
  sq.a = shape0.a2;
  sq.alpha1 = abs(shape0.a1) / (2 * shape0.a2);

  BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
  BivarPoly base = x.pow(3) - sq.alpha1 * y.pow(2);
  BivarPoly core = base;
  // beta index for layers L1..L4 in order: xy -> beta1, x^2 -> beta2,
  // y -> beta4, x -> beta3.
  const int beta_index[4] = {1, 2, 4, 3};
  for (int n = 0; n < 4; ++n) {
    const auto& L = kLayers[n];
    BivarPoly layer = (f - sq.a * core * core).weighted_part(kWx, kWy, L.weight);
    Rat c = layer.coeff(L.i + 3, L.j);
    BivarPoly monomial = BivarPoly::monomial(L.i, L.j);
    if (layer != c * (monomial * base)) {
      sq.failed_layer = n;
      sq.verdict = "L" + std::to_string(n + 1) + " is not proportional to alpha2 u - alpha1 v";
      return sq;
    }
    Rat beta = c / (2 * sq.a);
    sq.beta[beta_index[n]] = beta;
    core = core + beta * monomial;
  }
  BivarPoly w6 = (f - sq.a * core * core).weighted_part(kWx, kWy, 6);
  Rat d = w6.coeff(3, 0);
  bool proportional = w6 == d * base;
  if (proportional) {
    sq.beta[5] = d / (2 * sq.a);
    core = core + BivarPoly::constant(sq.beta[5]);
  }
  sq.completion = make_completion(f, core, sq.a, sq.x_flipped ? "x -> -x" : "none");
  sq.remainder_small = sq.completion->remainder.weighted_degree(kWx, kWy) <= 5;
  sq.verdict = sq.remainder_small
                   ? "F = a (core)^2 + G' with every monomial of G' of size O(|x|^(5/2))"
                   : "square completed; remainder keeps terms of size >= |x|^3 near the curve";
  return sq;
}

BivarPoly EcSubstitution::apply(const BivarPoly& f) const {
  BivarPoly X = BivarPoly::var_x(), Y = BivarPoly::var_y();
  BivarPoly x_img = sigma * X + BivarPoly::constant(mu);
  BivarPoly y_img = tau * Y + nu1 * X + BivarPoly::constant(nu0);
  return f.substitute(x_img, y_img);
}

std::pair<Rat, Rat> EcSubstitution::to_original(const Rat& X, const Rat& Y) const {
  return {sigma * X + mu, tau * Y + nu1 * X + nu0};
}

std::string EcSubstitution::to_string() const {
  auto r = [](const Rat& v) { return "(" + sextic::to_string(v) + ")"; };
  return "x = " + r(sigma) + "*X + " + r(mu) + ", y = " + r(tau) + "*Y + " + r(nu1) + "*X + " +
         r(nu0);
}

EcForm ecform_normalize(const BivarPoly& input, const Mp3Square& sq) {
  if (!sq.completion) throw precondition_error("MP3 square completion is not available");
  const Rat& a1 = sq.alpha1;
  const auto& b = sq.beta;
  // Work in the flipped coordinates where the core is
  // x^3 - a1 y^2 + b1 x y + b2 x^2 + b3 x + b4 y + b5.
  Rat b2p = b[2] + b[1] * b[1] / (4 * a1);
  Rat b3p = b[3] + b[1] * b[4] / (2 * a1);
  Rat b5p = b[5] + b[4] * b[4] / (4 * a1);
  Rat p = b3p - b2p * b2p / 3;
  Rat q = b5p - b2p * b3p / 3 + 2 * b2p * b2p * b2p / 27;
  Rat p_over = p / (a1 * a1), q_over = q / (a1 * a1 * a1);
  Int u = minimal_scale(p_over.get_den(), q_over.get_den());
  Rat sigma = a1 / Rat(u * u), tau = a1 / Rat(u * u * u);

  EcForm ec;
  ec.b1 = p / (sigma * sigma);
  ec.b0 = q / (sigma * sigma * sigma);
  ec.a = sq.a * pow_rat(sigma, 6);
  Rat mu = -b2p / 3;
  EcSubstitution sub;
  sub.sigma = sigma;
  sub.mu = mu;
  sub.tau = tau;
  sub.nu1 = b[1] * sigma / (2 * a1);
  sub.nu0 = (b[1] * mu + b[4]) / (2 * a1);
  if (sq.x_flipped) {
    sub.sigma = -sub.sigma;
    sub.mu = -sub.mu;
  }

  BivarPoly X = BivarPoly::var_x(), Y = BivarPoly::var_y();
  BivarPoly weier = Y.pow(2) - X.pow(3) - ec.b1 * X - BivarPoly::constant(ec.b0);
  BivarPoly transformed = sub.apply(input);
  ec.G = transformed - ec.a * weier * weier;

  // The core must map to -sigma^3 times the Weierstrass polynomial, so the
  // remainder is the completion remainder carried along.
  Rat s3 = pow_rat(sigma, 3);
  EcSubstitution flipped_sub = sub;
  if (sq.x_flipped) {
    flipped_sub.sigma = -sub.sigma;
    flipped_sub.mu = -sub.mu;
  }
  if (flipped_sub.apply(sq.completion->core) != -s3 * weier) {
    throw internal_error("ECform core transformation failed");
  }
  if (flipped_sub.apply(sq.completion->remainder) != ec.G) {
    throw internal_error("ECform remainder transformation failed");
  }
  // Round trip through the inverse substitution.
  BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
  BivarPoly X_inv = (Rat(1) / sub.sigma) * (x - BivarPoly::constant(sub.mu));
  BivarPoly Y_inv = (Rat(1) / sub.tau) * (y - sub.nu1 * X_inv - BivarPoly::constant(sub.nu0));
  if ((ec.a * weier * weier + ec.G).substitute(X_inv, Y_inv) != input) {
    throw internal_error("ECform round trip failed");
  }

  // Residue classes of (X, Y) mapping to integer points, when small.
  Int m = 1;
  for (const Rat* v : {&sub.sigma, &sub.mu, &sub.tau, &sub.nu1, &sub.nu0}) {
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v->get_den_mpz_t());
  }
  sub.modulus = m;
  if (m <= 200) {
    for (Int i = 0; i < m; ++i) {
      for (Int j = 0; j < m; ++j) {
        auto [xv, yv] = sub.to_original(Rat(i), Rat(j));
        if (xv.get_den() == 1 && yv.get_den() == 1) sub.residues.emplace_back(i, j);
      }
    }
  } else {
    sub.modulus = 0;
  }
  ec.substitution = sub;
  return ec;
}

}  // namespace sextic
