#include "classify/classify.hpp"

namespace sextic {

namespace {

BinaryForm part(const BivarPoly& f, int degree) {
  return BinaryForm::from_poly(f.homogeneous_part(degree), degree);
}

// F = s * H^m + c with deg H = deg F / m, or nothing.
std::optional<Composition> power_pattern(const BivarPoly& f, int m) {
  int d = f.total_degree();
  int n = d / m;
  BinaryForm top = part(f, d);
  BinaryForm hn(0, {Rat(1)});
  for (const auto& sf : squarefree_factors(top)) {
    if (sf.multiplicity % m != 0) return std::nullopt;
    hn = hn * sf.factor.pow(static_cast<unsigned>(sf.multiplicity / m));
  }
  auto s_form = divide_exact(top, hn.pow(static_cast<unsigned>(m)));
  if (!s_form) return std::nullopt;
  Rat s = s_form->coeff(0);

  BinaryForm denom = Rat(m) * hn.pow(static_cast<unsigned>(m - 1));
  BivarPoly h = hn.to_poly();
  for (int k = 1; k <= n; ++k) {
    BivarPoly known = h.pow(static_cast<unsigned>(m)).homogeneous_part(d - k);
    BinaryForm target = part((Rat(1) / s) * f.homogeneous_part(d - k) - known, d - k);
    auto next = divide_exact(target, denom);
    if (!next) return std::nullopt;
    h = h + next->to_poly();
  }
  BivarPoly c = f - s * h.pow(static_cast<unsigned>(m));
  if (!c.is_constant()) return std::nullopt;
  std::vector<Rat> outer(m + 1);
  outer[m] = s;
  outer[0] = c.coeff(0, 0);
  return Composition{UPoly(std::move(outer)), h};
}

}  // namespace

std::optional<Composition> detect_composed(const BivarPoly& f) {
  int d = f.total_degree();
  if (d < 2) return std::nullopt;
  for (int m = d; m >= 2; --m) {
    if (d % m != 0) continue;
    if (auto c = power_pattern(f, m)) return c;
  }
  if (f.degree_y() <= 0) return Composition{f.as_upoly_x(), BivarPoly::var_x()};
  if (f.degree_x() <= 0) {
    UPoly p = f.as_upoly_y();
    return Composition{p, BivarPoly::var_y()};
  }
  return std::nullopt;
}

}  // namespace sextic
