#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polycore/poly.hpp"

namespace sextic {

/// Open interval (lo, hi) with rational endpoints that are not roots of
/// `poly` and which contains exactly one real root of it.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
  UPoly poly;

  Rat width() const { return hi - lo; }
};

/// Number of distinct real roots of p in the open interval (lo, hi), for
/// endpoints that are not roots.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  int sign_changes(const Rat& t) const;
  int count(const Rat& lo, const Rat& hi) const { return sign_changes(lo) - sign_changes(hi); }

 private:
  std::vector<UPoly> seq_;
};

/// Cauchy bound: every real root lies strictly inside (-B, B).
Rat cauchy_bound(const UPoly& p);

/// Isolates all distinct real roots of a nonzero univariate polynomial,
/// returned in increasing order. Rational roots get an isolating interval
/// too; use exact_rational_root to detect them.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);

/// Halves the interval until its width is at most `width`.
void refine(IsolatingInterval& iv, const Rat& width);

/// If the isolated root is rational, returns it.
std::optional<Rat> exact_rational_root(const IsolatingInterval& iv);

struct FormRealRoots {
  /// Roots of A(t, 1), t = x/y, in increasing order.
  std::vector<IsolatingInterval> slopes;
  /// Multiplicity of each slope root in A.
  std::vector<int> multiplicities;
  /// Multiplicity of the projective root (1:0), i.e. the power of y in A.
  int infinity_multiplicity = 0;
};

FormRealRoots real_roots(const BinaryForm& a);

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  PositiveSemi,
  NegativeSemi,
  Indefinite,
  Zero,
};

std::string to_string(Definiteness d);
Definiteness definiteness(const BinaryForm& a);

/// Continued-fraction convergents (p, q) of the irrational root isolated by
/// `iv`, each partial quotient certified exactly. Throws Error::Precondition
/// carrying the root when it is rational.
std::vector<std::pair<Int, Int>> convergents(const IsolatingInterval& iv, int n);

}  // namespace sextic
