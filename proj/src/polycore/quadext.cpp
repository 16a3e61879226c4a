#include "polycore/quadext.hpp"

namespace sextic {

QuadExt::QuadExt(long k, Rat a, Rat b) : k_(k), a_(std::move(a)), b_(std::move(b)) {
  if (k <= 1 || !is_squarefree(k)) {
    throw precondition_error("quadratic field parameter must be square-free and > 1");
  }
}

namespace {

void require_same_field(const QuadExt& x, const QuadExt& y) {
  if (x.k() != y.k()) throw precondition_error("mixing elements of different quadratic fields");
}

}  // namespace

int QuadExt::sign() const {
  int sa = sextic::sign(a_), sb = sextic::sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with k b^2.
  int cmp = sextic::sign(a_ * a_ - Rat(k_) * b_ * b_);
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

QuadExt QuadExt::inverse() const {
  Rat n = norm();
  if (n == 0) throw precondition_error("inverse of zero in quadratic field");
  return QuadExt(k_, a_ / n, -b_ / n);
}

QuadExt QuadExt::pow(unsigned e) const {
  QuadExt result(k_, Rat(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return QuadExt(x.k_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return QuadExt(x.k_, x.a_ * y.a_ + Rat(x.k_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

std::string QuadExt::to_string() const {
  std::string s = sextic::to_string(a_);
  if (b_ != 0) {
    s += b_ < 0 ? " - " : " + ";
    s += sextic::to_string(Rat(abs(b_))) + "*sqrt(" + std::to_string(k_) + ")";
  }
  return s;
}

}  // namespace sextic
