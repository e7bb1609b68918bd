// Exact rational scalars: the arithmetic substrate for every module.
#ifndef HALPHEN_RATIONAL_HPP
#define HALPHEN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace halphen {

// Raised when an operation is evaluated outside its mathematical domain
// (poles, wrong-sign arguments, out-of-range parameters).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structural precondition on an object fails (degree leaks,
// asymmetric structure constants, band violations).
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

namespace exactmath {

using Integer = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator; arithmetic exact.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

std::string to_string(const Rational& q);      // "p/q", or "p" when q = 1
std::string num_string(const Rational& q);
std::string den_string(const Rational& q);

// Parses "p/q", integers, and finite decimal expansions ("-3.25" -> -13/4).
// No float round-trip: the text maps to the exact rational it denotes.
std::optional<Rational> parse_rational(const std::string& text);

// Floor of a rational (towards -infinity).
Integer floor(const Rational& q);

// Exact square root when the argument is a square of a rational; nullopt
// otherwise (including all negative inputs).
std::optional<Rational> sqrt_exact(const Rational& q);

}  // namespace exactmath
}  // namespace halphen

#endif
