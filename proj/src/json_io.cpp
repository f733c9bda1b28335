#include "qmforms/json_io.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>

#include "qmforms/error.hpp"

namespace qmf {

Json to_json(const QSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string or an integer, got " + j.dump());
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

QSeries series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a series is a non-empty JSON array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return QSeries(std::move(coeffs));
}

Json to_json(const QMForm& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.poly().terms()) terms.push_back({{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"coeff", c.str()}});
  return {{"weight", f.weight()}, {"terms", terms}};
}

QMForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) throw ParseError("a form is an object with 'weight' and 'terms'");
  FormPoly poly;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff")) throw ParseError("term without 'coeff'");
    poly.add_term({int_field(t, "a"), int_field(t, "b"), int_field(t, "c")}, rational_from_json(t.at("coeff")));
  }
  return QMForm(int_field(j, "weight"), poly);
}

Json to_json(const TPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coeff", c.str()}});
  return out;
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

namespace {

// Recursive-descent reader for the form mini-language:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' integer))*
//   factor := (number | 'g1' | 'g2' | 'g3' | '(' expr ')') ['^' integer]
class FormParser {
 public:
  explicit FormParser(std::string_view text) : s_(text) {}

  FormPoly parse() {
    FormPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("form syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<BigInt> integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  FormPoly expr() {
    FormPoly acc;
    bool negative = false;
    if (eat('-')) negative = true;
    else eat('+');
    FormPoly t = term();
    acc = negative ? -t : t;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  FormPoly term() {
    FormPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        auto d = integer();
        if (!d) fail("expected an integer after '/'");
        if (*d == 0) fail("division by zero");
        acc = acc / Rational(*d);
      } else {
        return acc;
      }
    }
  }

  FormPoly factor() {
    FormPoly base;
    skip();
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (pos_ < s_.size() && s_[pos_] == 'g') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '3') fail("generator must be g1, g2 or g3");
      base = FormPoly::variable(static_cast<std::size_t>(s_[pos_] - '1'));
      ++pos_;
    } else if (auto n = integer()) {
      base = FormPoly(Rational(*n));
    } else {
      fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input");
    }
    if (eat('^')) {
      auto e = integer();
      if (!e) fail("expected an exponent after '^'");
      if (!e->fits_uint_p() || *e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e->get_ui()));
    }
    return base;
  }
};

}  // namespace

QMForm parse_form(std::string_view text, int weight) {
  FormPoly p = FormParser(text).parse();
  return QMForm(weight, std::move(p));
}

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty complex number");
  auto to_double = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) throw ParseError("bad complex number '" + std::string(text) + "'");
    return v;
  };
  if (auto comma = s.find(','); comma != std::string::npos) return {to_double(s.substr(0, comma)), to_double(s.substr(comma + 1))};
  if (s.back() != 'i') return {to_double(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return to_double(part);
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {to_double(s.substr(0, split)), imag_part(s.substr(split))};
}

}  // namespace qmf
