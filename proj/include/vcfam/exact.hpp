#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vcfam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, r); zero when r < 0 or r > n.
BigInt binomial(int n, int r);

// Same, for counts known to fit; throws DomainError on overflow.
std::uint64_t binomial_u64(int n, int r);

// sum_{i=0}^{k-1} C(n, i). Requires 0 <= k <= n + 1.
BigInt sauer_shelah_sum(int n, int k);

BigInt ceil_div(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);  // "p/q", or "p" when integral

}  // namespace vcfam
