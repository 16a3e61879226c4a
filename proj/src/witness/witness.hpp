#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify/classify.hpp"
#include "polycore/poly.hpp"

namespace sextic {

enum class WitnessKind {
  NegativeValue,
  SmallCoreSequence,
  DearthDiagnostic,
  Inconclusive,
};

std::string to_string(WitnessKind k);

struct WitnessPoint {
  Int x;
  Int y;
  Rat value;
};

/// A certificate produced by one of the search engines. `points` holds the
/// first negative value met in schedule order and, when the target was
/// reached later, the first point at or below the target.
struct Witness {
  WitnessKind kind = WitnessKind::Inconclusive;
  std::string lemma;
  std::vector<WitnessPoint> points;
  std::string note;
  nlohmann::json details = nlohmann::json::object();
};

/// Search budgets. Every engine stops at its budget and reports
/// inconclusive rather than looping.
struct SearchBudget {
  int convergents = 64;
  Int tmax = Int("1000000000000");
  Int xmax = Int("1000000000");
  long box = 200;
  /// Family members tried by the elliptic-curve engines (|r| <= family).
  int family = 25;
  int workers = 1;
  /// Engines keep going after the first negative value until F <= target.
  Rat target = Rat(-1000000);
};

/// Re-evaluates every recorded point exactly.
bool verify(const BivarPoly& f, const Witness& w);

nlohmann::json to_json(const Witness& w);

/// Walks continued-fraction convergents (u, v) toward every real root
/// direction of F6 (multiples N(p, q) for rational directions) and evaluates
/// F at (u, v) and (-u, -v). Requires F6 positive semi-definite but not
/// definite and F5 != 0.
Witness dirichlet_witness(const BivarPoly& f, int max_convergents, const Rat& target);

/// Points near the real root lines of F6: x = floor(alpha y) + d for
/// |d| <= radius and 1 <= y <= ymax, both signs; rational directions use
/// N(p, q) + d(r, s).
Witness strip_witness(const BivarPoly& f, long radius, long ymax, const Rat& target);

/// |x| around T^theta, y = +-T, T = 100, 200, 400, ... <= tmax.
Witness anisotropic_witness(const BivarPoly& f, const Rat& theta, const Int& tmax,
                            const Rat& target, int workers = 1);

/// Finds a small (c1, c2) where the top weighted part of F for weights
/// (wx, wy) is negative, then evaluates F(N^wx c1, N^wy c2), N = 1, 2, ...
Witness weighted_sign_search(const BivarPoly& f, int wx, int wy, long box, long nmax,
                             const Rat& target, int workers = 1);

/// The weights (1, 2) instance: lead form G(x^2, y) of a weighted cubic.
Witness weighted_cubic_sign_search(const BivarPoly& f, long nmax, const Rat& target,
                                   int workers = 1);

/// For x on a dense-then-geometric schedule up to xmax (both signs), the
/// integers next to each real root y of core(x, .) are evaluated. With a
/// scale s, the sign of F - s core^2 at the nearest points is tallied.
Witness branch_follow(const BivarPoly& f, const BivarPoly& core, const Int& xmax,
                      const Rat& target, int workers = 1,
                      const std::optional<Rat>& scale = std::nullopt);

/// The x schedule of branch_follow: 1..4096, then steps of x/64.
std::vector<Int> branch_schedule(const Int& xmax);

/// A small integer point where F6 < 0, scaled by N = 1, 2, 4, ...
Witness leading_form_witness(const BivarPoly& f, long box, const Rat& target);

/// Rouse (b1 != 0) or Danilov (b1 = 0) points on the ECform curve, carried
/// to the original coordinates through the recorded substitution.
Witness ecform_witness(const BivarPoly& f, const EcForm& ec, int family, const Rat& target);

/// Empirical min of F / max(|x|,|y|)^(1+delta) over the box. Not a proof.
Witness growth_diagnostic(const BivarPoly& f, const Rat& delta, long box);

/// Runs the engine prescribed by the classification route.
Witness find_witness(const BivarPoly& f, const ClassificationReport& report,
                     const SearchBudget& budget);

}  // namespace sextic
