#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polycore/rational.hpp"

namespace sextic {

/// Affine point or the point at infinity.
struct CurvePoint {
  bool infinity = true;
  Rat x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  std::string to_string() const;
};

/// y^2 = x^3 + A x + B over the rationals, nonsingular.
class EllipticCurve {
 public:
  EllipticCurve(Rat a, Rat b);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  /// -16 (4 A^3 + 27 B^2)
  Rat discriminant() const;
  bool contains(const CurvePoint& p) const;

 private:
  Rat a_, b_;
};

CurvePoint ec_neg(const EllipticCurve& e, const CurvePoint& p);
CurvePoint ec_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q);
/// n P by double-and-add; negative n multiplies -P.
CurvePoint ec_mul(const EllipticCurve& e, const CurvePoint& p, long n);

/// A member of the Rouse family: 3P on E_r : y^2 = x^3 + b1 x + r^2 b1^2
/// with P = (0, r b1), and gap = y^2 - x^3 - b1 x - b0 = b1^2 r^2 - b0.
struct RousePoint {
  Int r, x, y, gap;
};

/// The closed-form coordinates of 3P, before any check.
std::pair<Int, Int> rouse_closed_form(const Int& b1, const Int& r);

/// Closed form asserted equal to the group-law triple and the gap identity
/// asserted exactly. Throws Error::Internal on any mismatch.
RousePoint rouse_point(const Int& b1, const Int& b0, const Int& r);

/// Members for r in [r_from, r_to], skipping r = 0. With y_sign = +1 or -1
/// each member takes the sign of r that gives y that sign (y is odd in r).
std::vector<RousePoint> rouse_family(const Int& b1, const Int& b0, long r_from, long r_to,
                                     int y_sign = 0);

struct PellSolution {
  Int d, c;
  /// Pairs (u, v) with u, v > 0 and u^2 - d v^2 = c, increasing in u.
  std::vector<std::pair<Int, Int>> solutions;
};

/// Supports c in {1, -1, 4, -4}; d must be a positive nonsquare.
PellSolution pell_solve(const Int& d, const Int& c, int count);

/// Fundamental solution of u^2 - d v^2 = 1 from the continued fraction of sqrt d.
std::pair<Int, Int> pell_fundamental(const Int& d);

/// Integer pair with a small Hall gap y^2 - x^3.
struct GapPoint {
  /// Family index (Lucas index for Danilov members, ordinal for scans).
  Int index;
  Int x, y, gap;
  /// |gap| / sqrt(x) to 12 decimals.
  std::string ratio;
};

/// |gap| / x^(1/root) as a fixed 12-decimal string.
std::string gap_ratio(const Int& gap, const Int& x, int root);

/// Integer points with 0 < |y^2 - x^3| < sqrt(x) whose ratio tends to
/// 54 * 5^(-5/2), from the parametrization by solutions of u^2 - 5 s^2 = -4.
std::vector<GapPoint> danilov_family(int count);

/// 2 <= x <= xmax, y the integer nearest x^(3/2), kept when
/// 0 < |y^2 - x^3| <= threshold sqrt(x).
std::vector<GapPoint> hall_scan(const Int& xmax, const Rat& threshold, int workers = 1);

/// Limit of the Danilov ratios, 54 * 5^(-5/2).
double danilov_constant();

/// Report writers. CSV rows carry a header line; JSON carries "schema": "1".
std::string to_csv(const std::vector<RousePoint>& family);
nlohmann::json to_json(const std::vector<RousePoint>& family, const Int& b1, const Int& b0);
std::string to_csv(const std::vector<GapPoint>& points);
nlohmann::json to_json(const std::vector<GapPoint>& points, const std::string& source);
std::string to_csv(const PellSolution& s);
nlohmann::json to_json(const PellSolution& s);

}  // namespace sextic
