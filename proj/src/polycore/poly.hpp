#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycore/rational.hpp"

namespace sextic {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);

  static UPoly constant(const Rat& c);
  static UPoly monomial(int degree, const Rat& c);
  static UPoly identity();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  const Rat& lead() const;

  Rat eval(const Rat& t) const;
  int sign_at(const Rat& t) const { return sign(eval(t)); }
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;
  /// p(t + shift)
  UPoly shifted(const Rat& shift) const;
  /// t^deg * p(1/t)
  UPoly reversed() const;
  UPoly compose(const UPoly& inner) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& s, const UPoly& a);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& p, unsigned e);

/// Polynomial in x, y with exact rational coefficients. Zero coefficients
/// are never stored, so equality of term maps is polynomial equality.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rat>;

  BivarPoly() = default;
  explicit BivarPoly(TermMap terms);

  static BivarPoly constant(const Rat& c);
  static BivarPoly monomial(int i, int j, const Rat& c = Rat(1));
  static BivarPoly var_x() { return monomial(1, 0); }
  static BivarPoly var_y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat coeff(int i, int j) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  int weighted_degree(int wx, int wy) const;
  bool is_homogeneous(int degree) const;

  BivarPoly homogeneous_part(int degree) const;
  BivarPoly weighted_part(int wx, int wy, int weight) const;

  Rat eval(const Rat& x, const Rat& y) const;
  BivarPoly substitute(const BivarPoly& x_image, const BivarPoly& y_image) const;
  BivarPoly dx() const;
  BivarPoly dy() const;
  BivarPoly pow(unsigned e) const;
  /// Univariate restriction in y at a fixed x.
  UPoly in_y_at(const Rat& x) const;
  /// Univariate in x when the polynomial does not involve y.
  UPoly as_upoly_x() const;
  UPoly as_upoly_y() const;

  /// Least common multiple of coefficient denominators.
  Int common_denominator() const;

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Rat& s, const BivarPoly& a);
  BivarPoly operator-() const;
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int i, int j, const Rat& c);
  TermMap terms_;
};

BivarPoly from_upoly_x(const UPoly& p);
BivarPoly from_upoly_y(const UPoly& p);

/// Homogeneous polynomial of declared degree; coefficient k multiplies
/// x^(d-k) y^k.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0, {Rat(0)}) {}
  BinaryForm(int degree, std::vector<Rat> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm from_poly(const BivarPoly& p, int degree);
  /// Homogenizes p(t) with t = x/y to the given degree (>= deg p).
  static BinaryForm homogenize(const UPoly& p, int degree);

  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int k) const { return c_.at(k); }
  bool is_zero() const;
  bool is_constant() const { return degree_ == 0; }

  BivarPoly to_poly() const;
  Rat eval(const Rat& x, const Rat& y) const;
  /// Largest m with y^m dividing the form (degree+1 for zero).
  int y_power() const;
  /// Largest m with x^m dividing the form (degree+1 for zero).
  int x_power() const;
  /// A(t, 1)
  UPoly dehomogenize() const;
  /// A(1, s)
  UPoly dehomogenize_x() const;
  /// Integer coefficients, content 1, first nonzero coefficient positive.
  BinaryForm primitive() const;
  /// Partial derivative in x, as a form of degree d-1.
  BinaryForm dx() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rat& s, const BinaryForm& a);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }
  BinaryForm pow(unsigned e) const;

 private:
  int degree_;
  std::vector<Rat> c_;
};

struct FormDivision {
  BinaryForm quotient;
  BinaryForm remainder;
  bool exact = false;
};

/// a = b * quotient + remainder with quotient of degree deg a - deg b.
FormDivision divide(const BinaryForm& a, const BinaryForm& b);
std::optional<BinaryForm> divide_exact(const BinaryForm& a, const BinaryForm& b);

/// Homogeneous components F_0 .. F_6. Throws when deg F > 6.
std::array<BinaryForm, 7> decompose(const BivarPoly& f);
BivarPoly reassemble(const std::array<BinaryForm, 7>& parts);

/// Primitive gcd of two forms over the rationals; not both zero.
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

struct SquarefreeFactor {
  int multiplicity;
  BinaryForm factor;
};

/// A = c * prod B_i^i with B_i square-free, pairwise coprime, primitive.
/// Factors of the same multiplicity are merged (the y-power included).
std::vector<SquarefreeFactor> squarefree_factors(const BinaryForm& a);

/// (multiplicity, degree of the product of factors with that multiplicity),
/// ordered by decreasing multiplicity.
using Profile = std::vector<std::pair<int, int>>;
Profile squarefree_profile(const BinaryForm& a);
int max_multiplicity(const Profile& p);

}  // namespace sextic
