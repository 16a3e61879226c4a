#include "polycore/rational.hpp"

#include <atomic>
#include <cctype>

namespace sextic {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!valid_integer(s)) throw input_error("malformed integer '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw input_error("malformed rational '" + std::string(text) + "'");
  }
  return make_rat(num, parse_int(den_text));
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

int sign(const Rat& r) { return sgn(r); }
int sign(const Int& z) { return sgn(z); }

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int isqrt(const Int& n) {
  if (n < 0) throw precondition_error("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int num = r.get_num(), den = r.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  return make_rat(isqrt(num), isqrt(den));
}

Int iroot(const Int& n, unsigned long q) {
  if (n < 0) throw precondition_error("iroot of negative integer");
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
  return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw input_error("integer " + z.get_str() + " out of range");
  return z.get_si();
}

double to_double(const Rat& r) { return r.get_d(); }

namespace {
std::atomic<double> g_seed_scale{1.0};
}  // namespace

double seed_scale() { return g_seed_scale.load(std::memory_order_relaxed); }
void set_seed_scale(double s) { g_seed_scale.store(s, std::memory_order_relaxed); }

bool is_squarefree(long k) {
  if (k == 0) return false;
  if (k < 0) k = -k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace sextic
