#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Boost 1.74 under C++20: the reversed rewrite of rational == int selects boost's own
// (int, rational) overload, which calls itself. Exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<int>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<int>& a) { return a == b; }
inline bool operator!=(const rational<int>& a, int b) { return !(a == b); }
inline bool operator!=(int b, const rational<int>& a) { return !(a == b); }
}  // namespace boost

namespace ellschub {

using Rational = boost::rational<int>;

/// Integer vector in ambient coordinates (weights, roots and coweights alike).
using IntVec = std::vector<int>;

/// Invalid user-facing configuration: unsupported family/rank, bad flags, n too large.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain of an operation (w not in W^P, non-reduced word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed JSON or textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q".
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

int dot(const IntVec& a, const IntVec& b);

}  // namespace ellschub
