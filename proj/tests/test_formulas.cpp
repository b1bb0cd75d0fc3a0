#include <catch2/catch_amalgamated.hpp>

#include "latpath/formulas.hpp"
#include "latpath/nm_word.hpp"
#include "oracles.hpp"

using namespace latpath;

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == BigCount(1));
    CHECK(binomial(5, 2) == BigCount(10));
    CHECK(binomial(5, -1) == BigCount(0));
    CHECK(binomial(5, 6) == BigCount(0));
    for (int n = 0; n <= 20; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(binomial(n, r) == oracle::pascal_binomial(n, r));
}

TEST_CASE("exact division guard") {
    CHECK(exact_div(BigCount(84), BigCount(7)) == BigCount(12));
    CHECK_THROWS_AS(exact_div(BigCount(5), BigCount(2)), std::logic_error);
    CHECK_THROWS_AS(exact_div(BigCount(5), BigCount(0)), std::invalid_argument);
}

TEST_CASE("catalan") {
    std::vector<long long> ref{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n < static_cast<int>(ref.size()); ++n)
        CHECK(catalan(n) == BigCount(ref[n]));
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("narayana") {
    CHECK(narayana(4, 2) == BigCount(6));
    CHECK(narayana(1, 1) == BigCount(1));
    for (int n = 1; n <= 10; ++n) {
        BigCount row{0};
        for (int j = 1; j <= n; ++j) row += narayana(n, j);
        CHECK(row == catalan(n));
    }
    CHECK_THROWS_AS(narayana(0, 1), std::invalid_argument);
}

TEST_CASE("rational dyck counts") {
    CHECK(d_nm(1, 1) == BigCount(1));
    CHECK(d_nm(2, 3) == BigCount(2));
    CHECK(d_nm(3, 5) == BigCount(7));
    CHECK(d_nm(5, 7) == BigCount(66));
    CHECK_THROWS_AS(d_nm(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(d_nm(0, 3), std::invalid_argument);
}

TEST_CASE("peak refinements of rational counts") {
    CHECK(f_nm_j(2, 3, 0) == BigCount(1));
    CHECK(f_nm_j(2, 3, 1) == BigCount(6));
    CHECK(f_nm_j(2, 3, 2) == BigCount(3));
    CHECK(f_ud_nm_j(2, 3, 1) == BigCount(1));
    CHECK(f_ud_nm_j(2, 3, 2) == BigCount(2));
    CHECK(d_nm_j(2, 3, 1) == BigCount(1));
    CHECK(d_nm_j(2, 3, 2) == BigCount(1));

    // the j slices tile their ambient families
    for (int n = 1; n <= 7; ++n) {
        for (int m = 1; n + m <= 14; ++m) {
            BigCount all{0};
            for (int j = 0; j <= std::min(n, m); ++j) all += f_nm_j(n, m, j);
            CHECK(all == binomial(n + m, n));

            if (coprime(n, m)) {
                BigCount dy{0};
                for (int j = 1; j <= std::min(n, m); ++j) dy += d_nm_j(n, m, j);
                CHECK(dy == d_nm(n, m));
            }
        }
    }
    CHECK_THROWS_AS(d_nm_j(2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(d_nm_j(2, 3, 0), std::invalid_argument);
}

TEST_CASE("k-ary words counted by peaks") {
    CHECK(kary_count(2, 2) == BigCount(3));
    CHECK(kary_peaks_count(2, 2, 1) == BigCount(1));
    CHECK(kary_peaks_count(2, 2, 2) == BigCount(2));
    CHECK(kary_count(1, 3) == BigCount(5));

    for (int n = 1; n <= 8; ++n) CHECK(kary_count(1, n) == catalan(n));

    for (int n = 1; n <= 10; ++n)
        for (int j = 1; j <= n; ++j)
            CHECK(kary_peaks_count(1, n, j) == narayana(n, j));

    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 6; ++n) {
            BigCount row{0};
            for (int j = 1; j <= n; ++j) row += kary_peaks_count(k, n, j);
            CHECK(row == kary_count(k, n));
        }
    }
    CHECK_THROWS_AS(kary_count(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(kary_count(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(kary_peaks_count(2, 3, 0), std::invalid_argument);
    CHECK(kary_peaks_count(2, 3, 4) == BigCount(0));  // no word has more peaks than ups
}
