#pragma once

#include <string>

#include "polycore/rational.hpp"

namespace sextic {

/// Element a + b*sqrt(k) of the real quadratic field Q(sqrt k), k > 1
/// square-free.
class QuadExt {
 public:
  QuadExt(long k, Rat a, Rat b = Rat(0));

  long k() const { return k_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  QuadExt conjugate() const { return QuadExt(k_, a_, -b_); }
  Rat norm() const { return a_ * a_ - Rat(k_) * b_ * b_; }
  Rat trace() const { return 2 * a_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// Exact sign of the real number a + b*sqrt(k).
  int sign() const;
  QuadExt inverse() const;
  QuadExt pow(unsigned e) const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt operator-() const { return QuadExt(k_, -a_, -b_); }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  long k_;
  Rat a_;
  Rat b_;
};

}  // namespace sextic
