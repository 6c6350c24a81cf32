#pragma once

#include <gmpxx.h>

namespace spinwit {

// binomial(n, k); zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

mpz_class pow_ui(unsigned long base, unsigned long exp);

// Nearest double to num/den (ties to even), den > 0. Exact rationals that
// straddle representable doubles round the same way hardware division
// would if it could see the full integers.
double rational_to_double(const mpz_class& num, const mpz_class& den);

}  // namespace spinwit
