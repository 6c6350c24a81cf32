#include "spinwit/closed_forms.hpp"

#include <stdexcept>
#include <vector>

#include "spinwit/bignum.hpp"

namespace spinwit {

mpz_class catalan_triangle(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("catalan_triangle: indices must be non-negative");
    if (k > n) return 0;
    mpz_class r = binomial(n + k, k) * (n - k + 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

mpz_class d_half_closed(long n, TwiceSpin j) {
    if (n < 0) throw std::invalid_argument("d_half_closed: N must be non-negative");
    if (n % 2 != 0 || !j.is_integer())
        throw std::invalid_argument("d_half_closed: defined for even N and integer j");
    long jj = j.twice() / 2;
    if (jj > n / 2) return 0;
    mpz_class r = binomial(n, n / 2 + jj) * (2 * jj + 1) * (2 * jj + 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(),
                    static_cast<unsigned long>(n / 2 + jj + 1));
    return r;
}

mpz_class riordan_d1(long n) {
    if (n < 2) throw std::invalid_argument("riordan_d1: defined for N >= 2");
    mpz_class acc = 0;
    for (long k = 1; k <= n - 1; ++k)
        acc += binomial(n + 1, k) * binomial(n - k - 1, k - 1);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return acc;
}

mpz_class mult_via_magnetization(TwiceSpin s, long n, TwiceSpin j) {
    if (n < 0) throw std::invalid_argument("mult_via_magnetization: N must be non-negative");
    int sigma = s.twice();
    long top = n * sigma;  // twice the maximal projection
    if (j.twice() % 2 != top % 2 || j.twice() > top) return 0;

    // K[i] counts z-basis product states with twice-projection top - 2i;
    // iterated convolution with the (2s+1)-point uniform window.
    std::vector<mpz_class> counts{mpz_class(1)};
    for (long site = 1; site <= n; ++site) {
        std::vector<mpz_class> next(counts.size() + sigma, 0);
        for (std::size_t i = 0; i < counts.size(); ++i)
            for (int d = 0; d <= sigma; ++d) next[i + d] += counts[i];
        counts.swap(next);
    }

    auto level = [&](long twice_m) -> mpz_class {
        if (twice_m > top || (top - twice_m) % 2 != 0) return 0;
        long idx = (top - twice_m) / 2;
        if (idx < 0 || idx >= static_cast<long>(counts.size())) return 0;
        return counts[idx];
    };
    return level(j.twice()) - level(j.twice() + 2);
}

}  // namespace spinwit
