#include "satdiv/rational.hpp"

#include <cctype>

#include "satdiv/error.hpp"

namespace satdiv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad(text);

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = trim(body.substr(0, slash));
    auto den = trim(body.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    result = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) bad(text);
    result = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  const BigInt d = denominator_of(value);
  if (d == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + d.str();
}

std::string to_decimal(const Rational& value, int digits) {
  BigInt num = numerator_of(value);
  const BigInt den = denominator_of(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0 && frac != 0) {
    std::string f = frac.str();
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  if (negative && (whole != 0 || frac != 0)) out.insert(0, "-");
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace satdiv
