#include "halphen/factorials.hpp"

#include <string>

namespace halphen {
namespace exactmath {

Rational factorial(int n) {
  if (n < 0) throw domain_error("factorial: negative argument " + std::to_string(n));
  Integer acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational falling_factorial(int k, int m) {
  if (m == 0) return Rational(1);
  if (m > 0) {
    Integer acc = 1;
    for (int i = 0; i < m; ++i) acc *= Integer(k - i);
    return Rational(acc);
  }
  // m < 0: Gamma(k+1)/Gamma(k-m+1); finite only when k-m+1 > 0 and no factor
  // (k+1)..(k-m) hits zero or a negative integer pole of the ratio.
  if (k - m + 1 <= 0 || k + 1 <= 0)
    throw domain_error("falling_factorial: Gamma pole at (k=" + std::to_string(k) +
                       ", m=" + std::to_string(m) + ")");
  Integer acc = 1;
  for (int i = k + 1; i <= k - m; ++i) acc *= Integer(i);
  if (acc == 0)
    throw domain_error("falling_factorial: Gamma pole at (k=" + std::to_string(k) +
                       ", m=" + std::to_string(m) + ")");
  return Rational(Integer(1), acc);
}

Rational generalized_binomial(const Rational& x, int p) {
  if (p < 0) throw domain_error("generalized_binomial: negative p");
  Rational acc(1);
  for (int i = 0; i < p; ++i) acc *= (x - Rational(i));
  return acc / factorial(p);
}

}  // namespace exactmath
}  // namespace halphen
