#include "classify/classify.hpp"
#include "classify/internal.hpp"
#include "polycore/parse.hpp"

namespace sextic {

std::vector<BinaryForm> rational_linear_factors(const BinaryForm& a) {
  std::vector<BinaryForm> out;
  if (a.y_power() > 0) out.push_back(BinaryForm(1, {Rat(0), Rat(1)}));
  UPoly d = a.dehomogenize();
  if (d.degree() < 1) return out;
  for (const auto& iv : isolate_real_roots(d)) {
    if (auto r = exact_rational_root(iv)) {
      // t = x/y = u/v  ->  v x - u y
      out.push_back(BinaryForm(1, {Rat(r->get_den()), Rat(-r->get_num())}));
    }
  }
  return out;
}

BinaryForm irrational_part(const BinaryForm& a) {
  BinaryForm rest = a;
  for (const auto& l : rational_linear_factors(a)) {
    auto q = divide_exact(rest, l);
    if (!q) throw internal_error("rational linear factor does not divide its form");
    rest = *q;
  }
  return rest.primitive();
}

QuadExt eval_at_sqrt(const BinaryForm& f, long k) {
  // sum c_j (sqrt k)^(d-j) * 1^j
  QuadExt acc(k, Rat(0));
  QuadExt root(k, Rat(0), Rat(1));
  QuadExt power(k, Rat(1));
  for (int j = f.degree(); j >= 0; --j) {
    acc = acc + QuadExt(k, f.coeff(j)) * power;
    power = power * root;
  }
  return acc;
}

SquareCompletion cubic_square_completion(const BivarPoly& f) {
  auto parts = decompose(f);
  const BinaryForm& f6 = parts[6];
  auto factors = squarefree_factors(f6);
  if (factors.size() != 1 || factors[0].multiplicity != 2 || factors[0].factor.degree() != 3) {
    throw precondition_error("leading form is not a constant times the square of a cubic");
  }
  BinaryForm cubic = factors[0].factor;
  auto aq = divide_exact(f6, cubic * cubic);
  if (!aq) throw internal_error("square of the cubic factor does not divide F6");
  Rat a = aq->coeff(0);
  auto g5 = divide_exact(parts[5], cubic);
  if (!g5) throw precondition_error("f does not divide F5; use the Dirichlet witness");
  auto g4 = divide_exact(parts[4], cubic);
  if (!g4) throw precondition_error("f does not divide F4; use the Dirichlet witness");
  BivarPoly g = g5->to_poly() + g4->to_poly();
  BivarPoly core = cubic.to_poly() + (Rat(1) / (2 * a)) * g;
  return make_completion(f, core, a, "none");
}

QuadraticCaseReport quadratic_case_analysis(const BivarPoly& f, long k) {
  if (k <= 1 || !is_squarefree(k)) throw precondition_error("k must be square-free and > 1");
  auto parts = decompose(f);
  BinaryForm quad;
  bool found = false;
  for (const auto& sf : squarefree_factors(parts[6])) {
    if (sf.multiplicity != 2) continue;
    BinaryForm q = irrational_part(sf.factor);
    if (q.degree() == 2) {
      quad = q;
      found = true;
    }
  }
  if (!found) throw precondition_error("no squared irreducible quadratic factor in F6");

  // a f = ((2a x + b y)^2 - D y^2) / 4 with D = m^2 k.
  Rat a = quad.coeff(0), b = quad.coeff(1), c = quad.coeff(2);
  Rat disc = b * b - 4 * a * c;
  if (disc <= 0) throw precondition_error("squared quadratic factor is definite");
  auto m = rational_sqrt(disc / Rat(k));
  if (!m) {
    throw precondition_error("factor is not equivalent to x^2 - " + std::to_string(k) + "*y^2");
  }
  // X = 2a x + b y, Y = m y; inverse y = Y/m, x = (X - (b/m) Y) / (2a).
  BivarPoly X = BivarPoly::var_x(), Y = BivarPoly::var_y();
  BivarPoly x_img = (Rat(1) / (2 * a)) * (X - (b / *m) * Y);
  BivarPoly y_img = (Rat(1) / *m) * Y;
  QuadraticCaseReport rep;
  rep.k = k;
  rep.transformation = "x = (X - (" + to_string(b / *m) + ")*Y)/(" + to_string(2 * a) +
                       "), y = Y/(" + to_string(*m) + ")";
  rep.transformed = f.substitute(x_img, y_img);

  auto tp = decompose(rep.transformed);
  BinaryForm f0(2, {Rat(1), Rat(0), Rat(-k)});
  auto g = divide_exact(tp[6], f0 * f0);
  if (!g) throw internal_error("transformed F6 not divisible by (x^2 - k y^2)^2");
  auto h = divide_exact(tp[5], f0);
  if (!h) throw precondition_error("f does not divide F5; use the Dirichlet witness");

  QuadExt sk(k, Rat(0), Rat(1));
  QuadExt g_s = eval_at_sqrt(*g, k), gx_s = eval_at_sqrt(g->dx(), k);
  QuadExt h_s = eval_at_sqrt(*h, k), hx_s = eval_at_sqrt(h->dx(), k);
  QuadExt f4_s = eval_at_sqrt(tp[4], k), f4x_s = eval_at_sqrt(tp[4].dx(), k);
  QuadExt f3_s = eval_at_sqrt(tp[3], k);
  QuadExt four_k(k, Rat(4 * k)), two(k, Rat(2)), four(k, Rat(4));

  rep.v_k = {f4_s, two * sk * h_s, four_k * g_s};
  rep.w_k = {f3_s, f4x_s, h_s + two * sk * hx_s, four_k * gx_s + four * sk * g_s};

  const QuadExt& A = rep.v_k[2];
  const QuadExt& B = rep.v_k[1];
  const QuadExt& C = rep.v_k[0];
  if (A.is_zero()) {
    rep.vk_is_square = B.is_zero() && C.is_zero();
    if (rep.vk_is_square) rep.beta = QuadExt(k, Rat(0));
  } else {
    QuadExt d = B * B - four * A * C;
    rep.vk_is_square = d.is_zero();
    if (rep.vk_is_square) rep.beta = -B / (two * A);
  }
  if (rep.beta) {
    QuadExt z = *rep.beta, acc(k, Rat(0));
    for (int i = 3; i >= 0; --i) acc = acc * z + rep.w_k[i];
    rep.wk_at_beta = acc;
  }
  if (!rep.vk_is_square) {
    rep.verdict = "v_k is not a perfect square: not arithmetically complete by sign change";
  } else if (!rep.wk_at_beta->is_zero()) {
    rep.verdict = "w_k(beta) != 0: values of size max(|x|,|y|)^3 of both signs near the root line";
  } else {
    rep.verdict = "v_k square and w_k(beta) = 0: F >> y^2 away from finitely many lines, dearth";
  }
  return rep;
}

}  // namespace sextic
