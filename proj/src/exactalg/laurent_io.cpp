// Text and JSON forms of LaurentPoly.
//
// Text: terms in descending canonical order joined by " + " / " - ",
// e.g. "3/2*a1^2*q^(-1/2) + 1". Exponents that are not positive integers
// are parenthesized.

#include <cctype>
#include <sstream>

#include "whitlocal/error.hpp"
#include "whitlocal/laurent.hpp"

namespace whitlocal {

namespace {

std::string exponent_text(std::int32_t twice) {
  Rational e(twice, 2);
  e.canonicalize();
  if (e.get_den() == 1 && sgn(e) > 0) return to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace

std::string Monomial::to_string() const {
  std::vector<std::pair<std::string, std::int32_t>> named;
  for (const auto& [id, e] : entries_) named.emplace_back(variable_name(id), e);
  std::sort(named.begin(), named.end());
  std::string out;
  for (const auto& [name, twice] : named) {
    if (!out.empty()) out += '*';
    out += name;
    if (twice != 2) out += "^" + exponent_text(twice);
  }
  return out.empty() ? "1" : out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    std::string body;
    if (m.is_one()) {
      body = whitlocal::to_string(mag);
    } else if (mag == 1) {
      body = m.to_string();
    } else {
      body = whitlocal::to_string(mag) + "*" + m.to_string();
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip();
    if (at_end()) fail("empty input");
    LaurentPoly out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
      skip();
    }
    LaurentPoly t = term();
    out += negative ? -t : t;
    for (;;) {
      skip();
      if (at_end()) break;
      char op = take();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      skip();
      t = term();
      out += op == '-' ? -t : t;
    }
    return out;
  }

 private:
  LaurentPoly term() {
    LaurentPoly out = factor();
    for (;;) {
      skip();
      if (at_end() || peek() != '*') break;
      take();
      skip();
      out = out * factor();
    }
    return out;
  }

  LaurentPoly factor() {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      Rational exponent = 1;
      skip();
      if (!at_end() && peek() == '^') {
        take();
        skip();
        exponent = power();
      }
      return LaurentPoly::variable(name, exponent);
    }
    if (c == '(') {
      // A parenthesized coefficient such as (-3/2).
      take();
      skip();
      Rational r = signed_number();
      skip();
      expect(')');
      return LaurentPoly(r);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Rational power() {
    if (!at_end() && peek() == '(') {
      take();
      skip();
      Rational r = signed_number();
      skip();
      expect(')');
      return r;
    }
    return signed_number();
  }

  Rational signed_number() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = take() == '-';
      skip();
    }
    Rational r = number();
    return negative ? Rational(-r) : r;
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << why << " at offset " << pos_ << " in '" << text_ << "'";
    throw Error(ErrorCode::ParseError, os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).parse(); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [id, twice] : m.entries()) {
      Rational e(twice, 2);
      e.canonicalize();
      exps[variable_name(id)] = whitlocal::to_string(e);
    }
    out.push_back({{"coeff", whitlocal::to_string(c)}, {"exps", exps}});
  }
  return out;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array");
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string())
      throw Error(ErrorCode::ParseError, "term needs a string 'coeff'");
    Monomial m;
    if (t.contains("exps")) {
      if (!t["exps"].is_object()) throw Error(ErrorCode::ParseError, "'exps' must be an object");
      for (const auto& [name, e] : t["exps"].items()) {
        if (!e.is_string()) throw Error(ErrorCode::ParseError, "exponent must be a string");
        m = m * Monomial::variable(name, parse_rational(e.get<std::string>()));
      }
    }
    out.add_term(parse_rational(t["coeff"].get<std::string>()), m);
  }
  return out;
}

}  // namespace whitlocal
