#include "polycore/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sextic {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::identity() { return monomial(1, Rat(1)); }

Rat UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

const Rat& UPoly::lead() const {
  if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / lead();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Int den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Int content = 0;
  std::vector<Int> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) {
    Int v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Int(v / content));
  return UPoly(std::move(out));
}

UPoly UPoly::shifted(const Rat& shift) const {
  // Horner in the polynomial ring: p(t + s).
  UPoly acc;
  UPoly lin(std::vector<Rat>{shift, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly::constant(*it);
  return acc;
}

UPoly UPoly::reversed() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly::constant(*it);
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& c : r) c = -c;
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rat& s, const UPoly& a) {
  if (s == 0) return UPoly();
  std::vector<Rat> r(a.c_);
  for (auto& c : r) c *= s;
  return UPoly(std::move(r));
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << sextic::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw precondition_error("polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UPoly(), a};
  std::vector<Rat> q(dq + 1);
  Rat inv = 1 / b.lead();
  for (int k = dq; k >= 0; --k) {
    Rat f = rem[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly result = UPoly::constant(1), base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------- BivarPoly

BivarPoly::BivarPoly(TermMap terms) {
  for (auto& [e, c] : terms) {
    if (e.first < 0 || e.second < 0) throw input_error("negative exponent");
    if (c != 0) terms_.emplace(e, c);
  }
}

void BivarPoly::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int i, int j, const Rat& c) {
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rat BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BivarPoly::total_degree() const { return weighted_degree(1, 1); }

int BivarPoly::degree_x() const { return weighted_degree(1, 0); }

int BivarPoly::degree_y() const { return weighted_degree(0, 1); }

int BivarPoly::weighted_degree(int wx, int wy) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, wx * e.first + wy * e.second);
  return d;
}

bool BivarPoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second != degree) return false;
  }
  return true;
}

BivarPoly BivarPoly::homogeneous_part(int degree) const { return weighted_part(1, 1, degree); }

BivarPoly BivarPoly::weighted_part(int wx, int wy, int weight) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) {
    if (wx * e.first + wy * e.second == weight) out.terms_.emplace(e, c);
  }
  return out;
}

Rat BivarPoly::eval(const Rat& x, const Rat& y) const {
  int dx = degree_x(), dy = degree_y();
  if (dx < 0) return Rat(0);
  std::vector<Rat> xp(dx + 1), yp(dy + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (int k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * x;
  for (int k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * y;
  Rat acc = 0;
  for (const auto& [e, c] : terms_) acc += c * xp[e.first] * yp[e.second];
  return acc;
}

BivarPoly BivarPoly::substitute(const BivarPoly& x_image, const BivarPoly& y_image) const {
  std::vector<BivarPoly> xp{constant(1)}, yp{constant(1)};
  int dx = degree_x(), dy = degree_y();
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * x_image);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * y_image);
  BivarPoly out;
  for (const auto& [e, c] : terms_) out = out + c * (xp[e.first] * yp[e.second]);
  return out;
}

BivarPoly BivarPoly::dx() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * e.first);
  }
  return out;
}

BivarPoly BivarPoly::dy() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * e.second);
  }
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UPoly BivarPoly::in_y_at(const Rat& x) const {
  int dy = degree_y();
  if (dy < 0) return UPoly();
  std::vector<Rat> c(dy + 1);
  for (const auto& [e, v] : terms_) c[e.second] += v * pow_rat(x, e.first);
  return UPoly(std::move(c));
}

UPoly BivarPoly::as_upoly_x() const {
  if (degree_y() > 0) throw precondition_error("polynomial involves y");
  int d = degree_x();
  std::vector<Rat> c(std::max(d + 1, 0));
  for (const auto& [e, v] : terms_) c[e.first] = v;
  return UPoly(std::move(c));
}

UPoly BivarPoly::as_upoly_y() const {
  if (degree_x() > 0) throw precondition_error("polynomial involves x");
  int d = degree_y();
  std::vector<Rat> c(std::max(d + 1, 0));
  for (const auto& [e, v] : terms_) c[e.second] = v;
  return UPoly(std::move(c));
}

Int BivarPoly::common_denominator() const {
  Int den = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BivarPoly operator*(const Rat& s, const BivarPoly& a) {
  if (s == 0) return BivarPoly();
  BivarPoly out = a;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

BivarPoly from_upoly_x(const UPoly& p) {
  BivarPoly out;
  for (int k = 0; k <= p.degree(); ++k) out = out + BivarPoly::monomial(k, 0, p.coeff(k));
  return out;
}

BivarPoly from_upoly_y(const UPoly& p) {
  BivarPoly out;
  for (int k = 0; k <= p.degree(); ++k) out = out + BivarPoly::monomial(0, k, p.coeff(k));
  return out;
}

// ------------------------------------------------------------ BinaryForm

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0) throw precondition_error("negative form degree");
  if (static_cast<int>(c_.size()) != degree + 1) {
    throw precondition_error("form coefficient count does not match degree");
  }
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Rat>(degree + 1));
}

BinaryForm BinaryForm::from_poly(const BivarPoly& p, int degree) {
  BinaryForm f = zero(degree);
  for (const auto& [e, c] : p.terms()) {
    if (e.first + e.second != degree) throw precondition_error("polynomial is not homogeneous");
    f.c_[e.second] = c;
  }
  return f;
}

BinaryForm BinaryForm::homogenize(const UPoly& p, int degree) {
  if (p.degree() > degree) throw precondition_error("homogenization degree too small");
  BinaryForm f = zero(degree);
  for (int i = 0; i <= p.degree(); ++i) f.c_[degree - i] = p.coeff(i);
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

BivarPoly BinaryForm::to_poly() const {
  BivarPoly out;
  for (int k = 0; k <= degree_; ++k) out = out + BivarPoly::monomial(degree_ - k, k, c_[k]);
  return out;
}

Rat BinaryForm::eval(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  // Horner in y/x without division: sum c_k x^(d-k) y^k.
  Rat xp = 1;
  std::vector<Rat> xpow(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) {
    xpow[k] = xp;
    xp *= x;
  }
  Rat yp = 1;
  for (int k = 0; k <= degree_; ++k) {
    acc += c_[k] * xpow[degree_ - k] * yp;
    yp *= y;
  }
  return acc;
}

int BinaryForm::y_power() const {
  for (int k = 0; k <= degree_; ++k) {
    if (c_[k] != 0) return k;
  }
  return degree_ + 1;
}

int BinaryForm::x_power() const {
  for (int k = degree_; k >= 0; --k) {
    if (c_[k] != 0) return degree_ - k;
  }
  return degree_ + 1;
}

UPoly BinaryForm::dehomogenize() const {
  std::vector<Rat> p(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) p[degree_ - k] = c_[k];
  return UPoly(std::move(p));
}

UPoly BinaryForm::dehomogenize_x() const { return UPoly(c_); }

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  Int den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Int content = 0;
  for (const auto& c : c_) {
    Int v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rat scale = make_rat(den, content);
  if (c_[y_power()] < 0) scale = -scale;
  return scale * *this;
}

BinaryForm BinaryForm::dx() const {
  if (degree_ == 0) return zero(0);
  BinaryForm out = zero(degree_ - 1);
  for (int k = 0; k < degree_; ++k) out.c_[k] = c_[k] * (degree_ - k);
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out = BinaryForm::zero(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j <= b.degree_; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

BinaryForm operator*(const Rat& s, const BinaryForm& a) {
  BinaryForm out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw precondition_error("adding forms of different degree");
  BinaryForm out = a;
  for (int k = 0; k <= a.degree_; ++k) out.c_[k] += b.c_[k];
  return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + Rat(-1) * b; }

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result(0, {Rat(1)}), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FormDivision divide(const BinaryForm& a, const BinaryForm& b) {
  int dq = a.degree() - b.degree();
  if (dq < 0) throw precondition_error("form division with larger divisor degree");
  if (b.is_zero()) throw precondition_error("form division by zero");
  // Long division in the chart x = 1, s = y/x, ascending in s: this keeps the
  // quotient homogeneous of the right degree even when x divides b.
  int lb = b.y_power();
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> q(dq + 1);
  Rat inv = 1 / b.coeff(lb);
  for (int k = 0; k <= dq; ++k) {
    if (k + lb > a.degree()) break;
    Rat f = rem[k + lb] * inv;
    if (f == 0) continue;
    q[k] = f;
    for (int j = lb; j <= b.degree(); ++j) rem[k + j] -= f * b.coeff(j);
  }
  BinaryForm quotient(dq, std::move(q));
  BinaryForm remainder(a.degree(), std::move(rem));
  bool exact = remainder.is_zero();
  return {std::move(quotient), std::move(remainder), exact};
}

std::optional<BinaryForm> divide_exact(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() < b.degree()) return std::nullopt;
  auto d = divide(a, b);
  if (!d.exact) return std::nullopt;
  return d.quotient;
}

std::array<BinaryForm, 7> decompose(const BivarPoly& f) {
  if (f.total_degree() > 6) throw input_error("total degree exceeds 6");
  std::array<BinaryForm, 7> parts;
  for (int j = 0; j <= 6; ++j) parts[j] = BinaryForm::from_poly(f.homogeneous_part(j), j);
  return parts;
}

BivarPoly reassemble(const std::array<BinaryForm, 7>& parts) {
  BivarPoly out;
  for (const auto& p : parts) out = out + p.to_poly();
  return out;
}

namespace {

// Univariate gcd of the y-free parts together with the common power of y.
BinaryForm form_from_parts(const UPoly& dehom, int ypow) {
  BinaryForm base = BinaryForm::homogenize(dehom, dehom.degree());
  if (ypow == 0) return base;
  BinaryForm y(1, {Rat(0), Rat(1)});
  return base * y.pow(static_cast<unsigned>(ypow));
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) throw precondition_error("gcd of two zero forms");
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  int m = std::min(a.y_power(), b.y_power());
  UPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  return form_from_parts(g, m).primitive();
}

std::vector<SquarefreeFactor> squarefree_factors(const BinaryForm& a) {
  if (a.is_zero()) throw precondition_error("square-free factorization of zero form");
  std::map<int, BinaryForm> by_mult;
  auto merge = [&](int mult, const BinaryForm& f) {
    if (f.degree() == 0) return;
    auto it = by_mult.find(mult);
    if (it == by_mult.end()) by_mult.emplace(mult, f.primitive());
    else it->second = (it->second * f).primitive();
  };

  int m = a.y_power();
  if (m > 0) merge(m, BinaryForm(1, {Rat(0), Rat(1)}));

  // Yun's algorithm on the dehomogenized polynomial.
  UPoly p = a.dehomogenize();
  if (p.degree() > 0) {
    UPoly dp = p.derivative();
    UPoly g = gcd(p, dp);
    UPoly b = divmod(p, g).quotient;
    UPoly c = divmod(dp, g).quotient;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
      UPoly ai = gcd(b, d);
      if (ai.degree() > 0) merge(i, BinaryForm::homogenize(ai, ai.degree()));
      b = divmod(b, ai).quotient;
      c = divmod(d, ai).quotient;
      d = c - b.derivative();
      ++i;
    }
  }

  std::vector<SquarefreeFactor> out;
  for (auto it = by_mult.rbegin(); it != by_mult.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

Profile squarefree_profile(const BinaryForm& a) {
  Profile p;
  for (const auto& f : squarefree_factors(a)) p.emplace_back(f.multiplicity, f.factor.degree());
  return p;
}

int max_multiplicity(const Profile& p) {
  int m = 0;
  for (const auto& [mult, deg] : p) m = std::max(m, mult);
  return m;
}

}  // namespace sextic
