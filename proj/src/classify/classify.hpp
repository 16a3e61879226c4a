#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polycore/poly.hpp"
#include "polycore/quadext.hpp"
#include "polycore/roots.hpp"

namespace sextic {

enum class Route {
  MP0,
  MP1Cubic,
  MP1Quadratic,
  MP1Linear,
  MP2,
  MP3,
  PaperGap,
  NotPositiveLeading,
  NotASextic,
};

std::string to_string(Route r);

/// A named divisibility or gcd test with the exact division data behind it.
struct Condition {
  std::string name;
  bool value = false;
  std::string divisor;
  std::string dividend;
  std::string quotient;
  std::string remainder;
  std::string detail;
};

/// Determinant-one integer change of variables X = p x + q y, Y = r x + s y.
struct Unimodular {
  Int p = 1, q = 0, r = 0, s = 1;

  static Unimodular identity() { return {}; }
  /// Sends the primitive linear form a x + b y to X, with (r, s) the
  /// completion of smallest max-norm.
  static Unimodular sending_to_x(const Int& a, const Int& b);

  /// G(X, Y) = F(x(X, Y), y(X, Y)).
  BivarPoly to_new(const BivarPoly& f) const;
  std::pair<Int, Int> to_original(const Int& X, const Int& Y) const;
  std::pair<Int, Int> to_new_point(const Int& x, const Int& y) const;
  bool is_identity() const { return p == 1 && q == 0 && r == 0 && s == 1; }
  /// Composition: first this, then `next` (both act on coordinates).
  Unimodular then(const Unimodular& next) const;
};

/// scale * core^2 + remainder == input, verified exactly at construction.
struct SquareCompletion {
  BivarPoly core;
  Rat scale;
  BivarPoly remainder;
  std::string substitution;
};

/// Builds the record and throws Error::Internal when the identity fails.
SquareCompletion make_completion(const BivarPoly& input, BivarPoly core, Rat scale,
                                 std::string substitution);

/// (value, under_sqrt): the number is sqrt(value) when under_sqrt is set.
struct SqrtRat {
  Rat value;
  bool under_sqrt = false;
  std::string to_string() const;
  double approx() const;
};

struct QuadraticCaseReport {
  long k = 0;
  /// Rational change of variables bringing f to x^2 - k y^2 (times a constant).
  std::string transformation;
  BivarPoly transformed;
  std::vector<QuadExt> v_k;  // coefficients of z^0, z^1, z^2
  std::vector<QuadExt> w_k;  // coefficients of z^0 .. z^3
  bool vk_is_square = false;
  std::optional<QuadExt> beta;
  std::optional<QuadExt> wk_at_beta;
  std::string verdict;
};

struct Mp2Analysis {
  Rat a2, a1, a0, b2, b1, b0;
  bool y_flipped = false;
  bool is_square = false;
  /// (alpha1 x^2 - alpha2 y)^2 = a2 x^4 + a1 x^2 y + a0 y^2, alpha1, alpha2 >= 0.
  std::optional<SqrtRat> alpha1, alpha2;
  /// Ratio alpha2/alpha1 and the scale A with the normalization alpha1 = 1.
  Rat rho, A;
  bool b_divisible = false;
  Rat beta1, beta2;
  std::optional<SquareCompletion> completion;
  /// Weight-6 layer x^2 (h2 x^4 + h1 x^2 y + h0 y^2) of the remainder.
  BivarPoly b_layer;
  bool b_vanishes = false;
  std::optional<BivarPoly> quartic;
  std::string quartic_failure;
  std::string verdict;
};

/// Layers of (calF0) in the weighting x:2, y:3. Each L pair is the
/// coefficients of (x^3, y^2) in L(x^3, y^2).
struct Mp3Shape {
  Rat a2, a1, a0;
  std::array<std::pair<Rat, Rat>, 4> L;
  BivarPoly G;
};

Mp3Shape mp3_shape_extract(const BivarPoly& f);

struct Mp3Square {
  bool is_square = false;
  bool x_flipped = false;
  Rat a;       // scale
  Rat alpha1;  // alpha2 normalized to 1
  /// Index (0-based) of the first L layer that failed proportionality.
  std::optional<int> failed_layer;
  std::array<Rat, 6> beta{};  // beta[1..5]; beta[0] unused
  std::optional<SquareCompletion> completion;
  /// Whether the remainder has only monomials of weight <= 5 (x:2, y:3).
  bool remainder_small = false;
  std::string verdict;
};

/// F (already in x^6-normalized coordinates) against its (calF0) shape.
Mp3Square mp3_square_and_proportionality(const BivarPoly& f, const Mp3Shape& shape);

/// x = sigma X + mu, y = tau Y + (nu1 X + nu0), all rational.
struct EcSubstitution {
  Rat sigma, mu, tau, nu1, nu0;
  BivarPoly apply(const BivarPoly& f) const;
  std::pair<Rat, Rat> to_original(const Rat& X, const Rat& Y) const;
  /// Moduli and admissible residues of (X, Y) giving integral (x, y); empty
  /// residues with a zero modulus mean "not enumerated".
  Int modulus;
  std::vector<std::pair<Int, Int>> residues;
  std::string to_string() const;
};

struct EcForm {
  Rat a, b1, b0;
  BivarPoly G;
  EcSubstitution substitution;
};

/// Brings a * core^2 + G, core = x^3 - alpha1 y^2 + beta terms, to
/// a' (Y^2 - X^3 - b1 X - b0)^2 + G'. Identity verified exactly.
EcForm ecform_normalize(const BivarPoly& f, const Mp3Square& sq);

enum class Mp3Branch { Anisotropic, Degenerate, WeightedCubic, Shape };

struct Mp3Analysis {
  Mp3Branch branch = Mp3Branch::Shape;
  Rat theta;  // for the anisotropic and degenerate branches
  std::optional<Mp3Shape> shape;
  std::optional<Mp3Square> square;
  std::optional<EcForm> ecform;
  /// Weighted lead cubic G(m, n) = u3 m^3 + u2 m^2 n + u1 m n^2 + u0 n^3.
  std::array<Rat, 4> lead_cubic{};
  std::string verdict;
};

struct Mp1CubicAnalysis {
  BinaryForm f;
  Rat a;
  std::optional<SquareCompletion> completion;
};

struct Composition {
  UPoly outer;
  BivarPoly inner;
};

std::optional<Composition> detect_composed(const BivarPoly& f);

struct ClassificationReport {
  BivarPoly input;
  int degree = -1;
  Profile profile;
  Definiteness definiteness = Definiteness::Zero;
  Route route = Route::NotASextic;
  std::vector<Condition> conditions;
  std::vector<std::string> notes;
  Unimodular normalization;
  /// F in normalized coordinates (equal to the input when no change is made).
  BivarPoly normalized;
  std::optional<Mp1CubicAnalysis> mp1_cubic;
  std::optional<QuadraticCaseReport> quadratic;
  std::optional<Mp2Analysis> mp2;
  std::optional<Mp3Analysis> mp3;
  std::optional<Composition> composed;

  const Condition* condition(const std::string& name) const;
};

ClassificationReport classify(const BivarPoly& f);

/// gcd(F6, F5) = 1 test; F5 = 0 reports gcd = F6.
Condition gcd_condition(const BinaryForm& f6, const BinaryForm& f5);

/// Divisibility record for "divisor | dividend".
Condition divides_condition(const std::string& name, const BinaryForm& divisor,
                            const BinaryForm& dividend);

SquareCompletion cubic_square_completion(const BivarPoly& f);
QuadraticCaseReport quadratic_case_analysis(const BivarPoly& f, long k);
Mp2Analysis mp2_square_check(const BivarPoly& f);

/// Weighted quartic reduction with y = (alpha1/alpha2) x^2 + sigma x + t
/// where sigma = (beta1 alpha2 - beta2 alpha1) / (alpha1 alpha2); the
/// result is in variables (x, t) stored as (x, y). Throws Error::Precondition
/// naming the offending monomials when weighted degree (x:1, t:2) exceeds 4.
BivarPoly reduce_to_quartic(const BivarPoly& f, const Rat& alpha1, const Rat& alpha2,
                            const Rat& beta1, const Rat& beta2);

nlohmann::json to_json(const ClassificationReport& r);

}  // namespace sextic
