#include "spinwit/bignum.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace spinwit {

mpz_class binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

double rational_to_double(const mpz_class& num, const mpz_class& den) {
    if (den <= 0) throw std::invalid_argument("rational_to_double: denominator must be positive");
    mpq_class q(num, den);
    q.canonicalize();
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

}  // namespace spinwit
