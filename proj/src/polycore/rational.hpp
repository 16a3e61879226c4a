#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sextic {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all errors raised by the analysis core. The C API maps
/// the category onto its status codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { Input, Precondition, Budget, Internal };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error input_error(const std::string& what) {
  return Error(Error::Kind::Input, what);
}
inline Error precondition_error(const std::string& what) {
  return Error(Error::Kind::Precondition, what);
}
inline Error budget_error(const std::string& what) {
  return Error(Error::Kind::Budget, what);
}
inline Error internal_error(const std::string& what) {
  return Error(Error::Kind::Internal, what);
}

Rat make_rat(const Int& num, const Int& den);
inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Parses "n" or "n/d" (optional sign on n). Throws Error::Input.
Rat parse_rat(std::string_view text);

/// Lowest-terms decimal string, "n" for integers and "n/d" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

int sign(const Rat& r);
int sign(const Int& z);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

/// Floor of the real square root of a nonnegative integer.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

/// Exact square root of a rational when it is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& r);

/// Floor of the q-th root of a nonnegative integer.
Int iroot(const Int& n, unsigned long q);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

/// Values too large for a long throw Error::Input.
long to_long(const Int& z);

/// Approximate value for reporting and search seeding only.
double to_double(const Rat& r);

/// Factor applied to every floating-point starting guess that is later
/// corrected exactly (box sizes, integer square roots). Tests move it away
/// from 1 to show that no certified result depends on the guess.
double seed_scale();
void set_seed_scale(double s);

/// Square-free part test for machine integers (trial division).
bool is_squarefree(long k);

}  // namespace sextic
