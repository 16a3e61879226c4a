#pragma once

#include <vector>

#include "polycore/poly.hpp"

namespace sextic {

/// Exact evaluation of a fixed polynomial at integer points. The polynomial
/// is cleared of denominators once; each evaluation is Horner in x over
/// integer polynomials in y.
class PointEvaluator {
 public:
  explicit PointEvaluator(const BivarPoly& f);

  /// den * F(x, y), an integer.
  Int numerator(const Int& x, const Int& y) const;
  Rat operator()(const Int& x, const Int& y) const;
  /// Coefficients in y (ascending) of den * F(x, y) for a fixed x.
  std::vector<Int> column(const Int& x) const;
  const Int& denominator() const { return den_; }

 private:
  Int den_;
  // rows_[i] holds the coefficients in y (ascending) of x^i.
  std::vector<std::vector<Int>> rows_;
};

}  // namespace sextic
