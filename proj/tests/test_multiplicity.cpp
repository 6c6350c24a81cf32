#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinwit/bignum.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/multiplicity.hpp"

using namespace spinwit;

TEST_CASE("base row and first couplings") {
    ExactRow row0 = mult_row_exact(TwiceSpin(1), 0);
    CHECK(row0.n == 0);
    CHECK(row0.twice_j_min == 0);
    REQUIRE(row0.values.size() == 1);
    CHECK(row0.values[0] == 1);

    // one site carries exactly its own spin
    for (int sigma : {1, 2, 3, 4, 10}) {
        ExactRow row1 = mult_row_exact(TwiceSpin(sigma), 1);
        CHECK(row1.at_twice(sigma) == 1);
        for (int t = row1.twice_j_min; t < sigma; t += 2) CHECK(row1.at_twice(t) == 0);
    }

    // 1/2 x 1/2: singlet + triplet
    ExactRow row2 = mult_row_exact(TwiceSpin(1), 2);
    CHECK(row2.at_twice(0) == 1);
    CHECK(row2.at_twice(2) == 1);

    // 1 x 1 = 0 + 1 + 2
    ExactRow row2b = mult_row_exact(TwiceSpin(2), 2);
    for (int t : {0, 2, 4}) CHECK(row2b.at_twice(t) == 1);
}

TEST_CASE("six spin-1/2 sites, full row") {
    ExactRow row = mult_row_exact(TwiceSpin(1), 6);
    CHECK(row.twice_j_min == 0);
    CHECK(row.twice_j_max() == 6);
    CHECK(row.at_twice(0) == 5);
    CHECK(row.at_twice(2) == 9);
    CHECK(row.at_twice(4) == 5);
    CHECK(row.at_twice(6) == 1);
    CHECK(row.at_twice(8) == 0);   // beyond the top
    CHECK(row.at_twice(1) == 0);   // wrong parity
}

TEST_CASE("row parity alternates for half-integer spin") {
    for (long n = 0; n <= 9; ++n) {
        ExactRow row = mult_row_exact(TwiceSpin(3), n);
        CHECK(row.twice_j_min == (n * 3) % 2);
        CHECK(row.twice_j_max() == n * 3);
    }
}

TEST_CASE("multiplicities exhaust the product space") {
    // sum over j of (2j+1) m(N, j) = (2s+1)^N
    for (int sigma : {1, 2, 3, 4, 5}) {
        for (long n : {0L, 1L, 3L, 7L, 20L, 41L}) {
            ExactRow row = mult_row_exact(TwiceSpin(sigma), n);
            mpz_class acc = 0;
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                int t = row.twice_j_min + 2 * static_cast<int>(i);
                acc += (t + 1) * row.values[i];
            }
            CHECK(acc == pow_ui(sigma + 1, n));
        }
    }
}

TEST_CASE("recursion matches direct tensor-product accumulation") {
    // independently couple one site at a time using the coefficient rule
    for (int sigma : {1, 2, 3}) {
        std::map<int, mpz_class> dist{{0, 1}};
        for (long n = 1; n <= 8; ++n) {
            std::map<int, mpz_class> next;
            for (const auto& [t, count] : dist)
                for (int t2 = 0; t2 <= t + sigma; ++t2)
                    if (tp_coeff(TwiceSpin(t), TwiceSpin(sigma), TwiceSpin(t2)) == 1)
                        next[t2] += count;
            dist = std::move(next);
            ExactRow row = mult_row_exact(TwiceSpin(sigma), n);
            for (const auto& [t, count] : dist) CHECK(row.at_twice(t) == count);
            mpz_class total_dist = 0, total_row = 0;
            for (const auto& [t, count] : dist) total_dist += count;
            for (const mpz_class& v : row.values) total_row += v;
            CHECK(total_dist == total_row);
        }
    }
}

TEST_CASE("degeneracy ties multiplicity to irrep dimension") {
    for (int sigma : {1, 2, 3}) {
        ExactRow row = mult_row_exact(TwiceSpin(sigma), 7);
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            int t = row.twice_j_min + 2 * static_cast<int>(i);
            CHECK(degeneracy(TwiceSpin(sigma), 7, TwiceSpin(t)) == (t + 1) * row.values[i]);
        }
    }
    CHECK(degeneracy(TwiceSpin(1), 6, TwiceSpin(2)) == 27);  // 3 * 9
    CHECK(multiplicity(TwiceSpin(1), 6, TwiceSpin(4)) == 5);
}

TEST_CASE("normalized backend tracks the exact one") {
    // values scaled by (2s+1)^N agree to 1e-10 relative out to N = 200
    for (int sigma : {1, 2, 3, 4, 10}) {
        NormalizedRowStream norm_stream{TwiceSpin(sigma)};
        ExactRowStream exact_stream{TwiceSpin(sigma)};
        for (long n = 1; n <= 200; ++n) {
            norm_stream.advance();
            exact_stream.advance();
            if (n % 40 != 0 && n > 12) continue;
            const NormalizedRow& nr = norm_stream.row();
            const ExactRow& er = exact_stream.row();
            REQUIRE(nr.values.size() == er.values.size());
            mpz_class den = pow_ui(sigma + 1, n);
            for (std::size_t i = 0; i < nr.values.size(); ++i) {
                double reference = rational_to_double(er.values[i], den);
                double got = nr.values[i];
                if (reference == 0.0) {
                    CHECK(got == 0.0);
                } else {
                    CHECK(std::abs(got - reference) <= 1e-10 * std::abs(reference));
                }
            }
        }
    }
}

TEST_CASE("normalized degeneracies stay finite at large N") {
    double d = degeneracy_normalized(TwiceSpin(1), 4000, TwiceSpin(60));
    CHECK(d > 0.0);
    CHECK(d < 1.0);
}

TEST_CASE("exact backend cap") {
    EngineLimits limits;
    limits.exact_cap = 50;
    CHECK_THROWS_AS(mult_row_exact(TwiceSpin(1), 51, limits), CapExceededError);
    CHECK(mult_row_exact(TwiceSpin(1), 50, limits).n == 50);

    ExactRowStream stream{TwiceSpin(2), limits};
    for (int i = 0; i < 50; ++i) stream.advance();
    CHECK_THROWS_AS(stream.advance(), CapExceededError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(mult_row_exact(TwiceSpin(1), -1), std::invalid_argument);
    CHECK_THROWS_AS(mult_row_normalized(TwiceSpin(1), -3), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy_table(TwiceSpin(1), -1), std::invalid_argument);
}

TEST_CASE("degeneracy table carries provenance and skips zeros") {
    DegeneracyTable table = degeneracy_table(TwiceSpin(1), 6);
    CHECK(table.provenance == Provenance::DP);
    REQUIRE(table.find(6, 2) != nullptr);
    CHECK(*table.find(6, 2) == 27);
    CHECK(table.find(6, 1) == nullptr);   // wrong parity
    CHECK(table.find(1, 0) == nullptr);   // unreachable at N = 1
    REQUIRE(table.find(0, 0) != nullptr);
    CHECK(*table.find(0, 0) == 1);
}
