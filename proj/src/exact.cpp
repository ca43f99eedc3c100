#include "vcfam/exact.hpp"

#include <limits>

#include "vcfam/errors.hpp"

namespace vcfam {

BigInt binomial(int n, int r) {
  if (n < 0) throw DomainError("binomial of negative n");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  // acc = C(n-r+i, i) after step i; each division is exact.
  for (int i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

std::uint64_t binomial_u64(int n, int r) {
  const BigInt b = binomial(n, r);
  if (b > std::numeric_limits<std::uint64_t>::max()) throw DomainError("binomial overflows 64 bits");
  return b.convert_to<std::uint64_t>();
}

BigInt sauer_shelah_sum(int n, int k) {
  if (n < 0 || k < 0 || k > n + 1)
    throw DomainError("sauer_shelah_sum requires 0 <= k <= n + 1");
  BigInt sum = 0;
  for (int i = 0; i < k; ++i) sum += binomial(n, i);
  return sum;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw DomainError("ceil_div requires a positive divisor");
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace vcfam
