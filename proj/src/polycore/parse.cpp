#include "polycore/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sextic {

namespace {

constexpr long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BivarPoly run() {
    BivarPoly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivarPoly expr() {
    BivarPoly acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  BivarPoly term() {
    BivarPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        size_t at = pos_;
        BivarPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          throw ParseError(at, "divisor must be a nonzero constant");
        }
        acc = (Rat(1) / d.coeff(0, 0)) * acc;
      } else {
        return acc;
      }
    }
  }

  BivarPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivarPoly power() {
    BivarPoly base = atom();
    skip_space();
    if (!accept('^')) return base;
    long e = exponent();
    return base.pow(static_cast<unsigned>(e));
  }

  // Right-associative tower of integer literals.
  long exponent() {
    skip_space();
    size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("exponent must be a nonnegative integer literal");
    }
    Int e = integer_literal();
    if (accept('^')) {
      long inner = exponent();
      if (e > 1 && inner > 64) throw ParseError(at, "exponent too large");
      e = pow_int(e, static_cast<unsigned long>(inner));
    }
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return e.get_si();
  }

  Int integer_literal() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Int v(std::string(s_.substr(start, pos_ - start)), 10);
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
      fail("implicit multiplication is not allowed");
    }
    return v;
  }

  BivarPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      check_no_juxtaposition();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BivarPoly::constant(Rat(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "x") return checked(BivarPoly::var_x());
      if (name == "y") return checked(BivarPoly::var_y());
      throw ParseError(start, "unsupported variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BivarPoly checked(BivarPoly p) {
    check_no_juxtaposition();
    return p;
  }

  void check_no_juxtaposition() {
    size_t save = pos_;
    skip_space();
    if (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        fail("implicit multiplication is not allowed");
      }
    }
    pos_ = save;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

void append_monomial(std::ostringstream& os, int i, int j) {
  bool any = false;
  if (i > 0) {
    os << "x";
    if (i > 1) os << "^" << i;
    any = true;
  }
  if (j > 0) {
    if (any) os << "*";
    os << "y";
    if (j > 1) os << "^" << j;
  }
}

}  // namespace

BivarPoly parse(std::string_view text) { return Parser(text).run(); }

std::string format(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BivarPoly::Exponent, Rat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = e.first == 0 && e.second == 0;
    if (constant) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      append_monomial(os, e.first, e.second);
    }
  }
  return os.str();
}

std::string format(const BinaryForm& f) { return format(f.to_poly()); }

nlohmann::json to_json(const BivarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, to_string(c)});
  return {{"terms", terms}};
}

BivarPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw input_error("polynomial JSON must be an object with a \"terms\" array");
  }
  BivarPoly out;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw input_error("each term must be [i, j, coefficient]");
    }
    long i = t[0].get<long>(), k = t[1].get<long>();
    if (i < 0 || k < 0 || i > kMaxExponent || k > kMaxExponent) {
      throw input_error("term exponent out of range");
    }
    Rat c;
    if (t[2].is_string()) c = parse_rat(t[2].get<std::string>());
    else if (t[2].is_number_integer()) c = Rat(Int(t[2].dump(), 10));
    else throw input_error("coefficient must be a string \"num/den\" or an integer");
    out = out + BivarPoly::monomial(static_cast<int>(i), static_cast<int>(k), c);
  }
  return out;
}

nlohmann::json to_json(const BinaryForm& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return {{"degree", f.degree()}, {"coeffs", coeffs}, {"text", format(f)}};
}

}  // namespace sextic
