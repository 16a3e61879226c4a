#pragma once

// Independent oracles shared by the test binaries. Nothing here calls the
// evaluator, the group law or the sieve under test.

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "polycore/parse.hpp"
#include "polycore/poly.hpp"

namespace oracle {

using sextic::BivarPoly;
using sextic::Int;
using sextic::Rat;

inline BivarPoly P(const std::string& text) { return sextic::parse(text); }

/// Term-by-term evaluation with repeated multiplication.
inline Rat eval(const BivarPoly& f, const Int& x, const Int& y) {
  Rat total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rat term = c;
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int j = 0; j < e.second; ++j) term *= y;
    total += term;
  }
  return total;
}

/// Affine point on y^2 = x^3 + a x + b; `inf` marks the identity.
struct Pt {
  bool inf = false;
  Rat x, y;
};

/// Chord and tangent addition written out directly.
inline Pt add(const Rat& a, const Pt& p, const Pt& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  Rat lambda;
  if (p.x == q.x) {
    if (p.y + q.y == 0) return {true, 0, 0};
    lambda = (3 * p.x * p.x + a) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda - p.x - q.x;
  Rat y3 = lambda * (p.x - x3) - p.y;
  return {false, x3, y3};
}

inline Pt triple(const Rat& a, const Pt& p) { return add(a, p, add(a, p, p)); }

/// Distinct integer values in [lo, hi) of an integer polynomial over a box.
inline std::set<std::int64_t> values_in(const BivarPoly& f, std::int64_t box, std::int64_t lo,
                                        std::int64_t hi) {
  std::set<std::int64_t> out;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      Rat v = eval(f, Int(static_cast<long>(x)), Int(static_cast<long>(y)));
      if (v.get_den() != 1) continue;
      if (v >= Rat(static_cast<long>(lo)) && v < Rat(static_cast<long>(hi))) {
        out.insert(v.get_num().get_si());
      }
    }
  }
  return out;
}

}  // namespace oracle
