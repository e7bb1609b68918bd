#include "halphen/rational.hpp"

#include <cctype>

namespace halphen {
namespace exactmath {

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string num_string(const Rational& q) { return num(q).str(); }
std::string den_string(const Rational& q) { return den(q).str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string p = text.substr(0, slash);
    std::string q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    Integer ip(p), iq(q);
    if (iq == 0) return std::nullopt;
    return Rational(ip, iq);
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || !is_int(head + frac.front()) ) {
      // head may be just a sign or empty ("-.5", ".5")
    }
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (!is_int(head) || frac.empty() || !is_int(frac)) return std::nullopt;
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer value = Integer(head) * scale + Integer(frac);
    Rational r(value, scale);
    return neg ? Rational(-r) : r;
  }

  if (!is_int(text)) return std::nullopt;
  return Rational(Integer(text));
}

Integer floor(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  Integer n = num(q), d = den(q);
  Integer sn = boost::multiprecision::sqrt(n);
  Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace exactmath
}  // namespace halphen
