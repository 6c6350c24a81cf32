#include <doctest.h>

#include <stdexcept>

#include "spinwit/errors.hpp"
#include "spinwit/lattice_paths.hpp"
#include "spinwit/multiplicity.hpp"

using namespace spinwit;

TEST_CASE("exhaustive search equals the recursion") {
    for (int sigma : {1, 2, 3, 4}) {
        for (long n = 0; n <= 8; ++n) {
            ExactRow row = mult_row_exact(TwiceSpin(sigma), n);
            for (int t = row.twice_j_min; t <= row.twice_j_max(); t += 2)
                CHECK(count_paths(TwiceSpin(sigma), n, TwiceSpin(t)) == row.at_twice(t));
        }
    }
}

TEST_CASE("the four spin-1/2 walks of length four") {
    // j = 0: heights must return to zero
    std::vector<LatticePath> paths = list_paths(TwiceSpin(1), 4, TwiceSpin(0), 100);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].twice_heights == std::vector<int>{0, 1, 2, 1, 0});
    CHECK(paths[1].twice_heights == std::vector<int>{0, 1, 0, 1, 0});

    // j = 1
    paths = list_paths(TwiceSpin(1), 4, TwiceSpin(2), 100);
    REQUIRE(paths.size() == 3);
    CHECK(paths[0].twice_heights == std::vector<int>{0, 1, 2, 3, 2});
    CHECK(paths[1].twice_heights == std::vector<int>{0, 1, 2, 1, 2});
    CHECK(paths[2].twice_heights == std::vector<int>{0, 1, 0, 1, 2});
}

TEST_CASE("enumeration order is lexicographically decreasing") {
    std::vector<LatticePath> paths = list_paths(TwiceSpin(2), 6, TwiceSpin(2), 100000);
    CHECK(paths.size() == count_paths(TwiceSpin(2), 6, TwiceSpin(2)));
    for (std::size_t i = 0; i + 1 < paths.size(); ++i)
        CHECK(paths[i].twice_heights > paths[i + 1].twice_heights);
}

TEST_CASE("every listed walk is admissible") {
    for (int sigma : {1, 3}) {
        std::vector<LatticePath> paths = list_paths(TwiceSpin(sigma), 7, TwiceSpin(sigma), 100000);
        CHECK(!paths.empty());
        for (const LatticePath& p : paths) {
            CHECK(p.valid());
            REQUIRE(p.twice_heights.size() == 8);
            CHECK(p.twice_heights.back() == sigma);
        }
    }
}

TEST_CASE("validity rejects broken walks") {
    CHECK(LatticePath{TwiceSpin(1), {0, 1, 0}}.valid());
    CHECK(!LatticePath{TwiceSpin(1), {1, 0}}.valid());        // starts off the origin
    CHECK(!LatticePath{TwiceSpin(1), {0, 3}}.valid());        // step too large
    CHECK(!LatticePath{TwiceSpin(1), {0, 1, 1}}.valid());     // no self-step for s = 1/2
    CHECK(!LatticePath{TwiceSpin(2), {0, 2, -2}}.valid());    // below the floor
    CHECK(!LatticePath{TwiceSpin(1), {}}.valid());
    CHECK(LatticePath{TwiceSpin(2), {0, 2, 2, 0}}.valid());   // spin 1 may step level
}

TEST_CASE("zero-length walks") {
    CHECK(count_paths(TwiceSpin(2), 0, TwiceSpin(0)) == 1);
    CHECK(count_paths(TwiceSpin(2), 0, TwiceSpin(2)) == 0);
    std::vector<LatticePath> paths = list_paths(TwiceSpin(2), 0, TwiceSpin(0), 10);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].twice_heights == std::vector<int>{0});
}

TEST_CASE("parity exclusion gives empty counts") {
    CHECK(count_paths(TwiceSpin(1), 4, TwiceSpin(1)) == 0);
    CHECK(count_paths(TwiceSpin(1), 3, TwiceSpin(0)) == 0);
    CHECK(list_paths(TwiceSpin(1), 3, TwiceSpin(0), 10).empty());
}

TEST_CASE("node budget stops runaway searches") {
    PathLimits limits;
    limits.node_budget = 100;
    CHECK_THROWS_AS(count_paths(TwiceSpin(2), 12, TwiceSpin(0), limits), CapExceededError);
}

TEST_CASE("enumeration limit is enforced") {
    CHECK_THROWS_AS(list_paths(TwiceSpin(1), 8, TwiceSpin(0), 3), CapExceededError);
    CHECK(list_paths(TwiceSpin(1), 8, TwiceSpin(0), 14).size() == 14);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(count_paths(TwiceSpin(1), -1, TwiceSpin(1)), std::invalid_argument);
    CHECK_THROWS_AS(list_paths(TwiceSpin(1), -1, TwiceSpin(1), 5), std::invalid_argument);
    CHECK_THROWS_AS(list_paths(TwiceSpin(1), 4, TwiceSpin(0), -2), std::invalid_argument);
}
