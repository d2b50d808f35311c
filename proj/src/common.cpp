#include "ellschub/common.hpp"

#include <charconv>

namespace ellschub {

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("not a rational number: '" + whole + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(std::string_view(text).substr(0, slash), text);
  const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ellschub
