#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mbar {

// Exact rational scalar. mpq_class keeps every arithmetic result in lowest
// terms with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

// Inverse of to_string; also accepts surrounding whitespace and a leading '+'.
// Throws DomainError on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

BigInt factorial(unsigned n);
// (2m-1)!! with the convention (-1)!! = 1.
BigInt double_factorial_odd(int two_m_minus_one);
// Generalized binomial C(top, k) for integer top (negative allowed), k >= 0.
Rat binomial(long top, long k);

// B_m with B_1 = -1/2, from sum_{j=0}^{m} C(m+1,j) B_j = 0.
Rat bernoulli(unsigned m);

bool is_integer(const Rat& r);

}  // namespace mbar
