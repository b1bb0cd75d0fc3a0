#pragma once

#include <numeric>

#include "bigcount.hpp"
#include "path_word.hpp"

namespace latpath {

inline BigCount binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount result{1};
    for (long long i = 1; i <= r; ++i) {
        result *= (n - r + i);
        result = exact_div(result, i);
    }
    return result;
}

inline BigCount catalan(long long n) {
    detail::require(n >= 0, "catalan: n must be >= 0");
    return exact_div(binomial(2 * n, n), n + 1);
}

inline BigCount narayana(long long n, long long j) {
    detail::require(n >= 1 && j >= 1, "narayana: n and j must be >= 1");
    return exact_div(binomial(n - 1, j - 1) * binomial(n, j - 1), j);
}

// Count of grid paths weakly below the (0,0)-(n,m) diagonal, for coprime n, m.
inline BigCount d_nm(long long n, long long m) {
    detail::require(n >= 1 && m >= 1, "d_nm: n and m must be >= 1");
    detail::require(std::gcd(n, m) == 1, "d_nm: n and m must be coprime");
    return exact_div(binomial(n + m, n), n + m);
}

// Free words with n downs, m ups and exactly j peaks.
inline BigCount f_nm_j(long long n, long long m, long long j) {
    detail::require(n >= 0 && m >= 0 && j >= 0, "f_nm_j: arguments must be >= 0");
    return binomial(n, j) * binomial(m, j);
}

// Free words starting U, ending D, with exactly j peaks.
inline BigCount f_ud_nm_j(long long n, long long m, long long j) {
    detail::require(n >= 1 && m >= 1 && j >= 1, "f_ud_nm_j: arguments must be >= 1");
    return binomial(n - 1, j - 1) * binomial(m - 1, j - 1);
}

// Dyck words with exactly j peaks, for coprime n, m (rational Narayana).
inline BigCount d_nm_j(long long n, long long m, long long j) {
    detail::require(n >= 1 && m >= 1 && j >= 1, "d_nm_j: arguments must be >= 1");
    detail::require(std::gcd(n, m) == 1, "d_nm_j: n and m must be coprime");
    return exact_div(binomial(n - 1, j - 1) * binomial(m - 1, j - 1), j);
}

// Strict paths of order (k+1)n over rise k with no horizontals.
inline BigCount kary_count(long long k, long long n) {
    detail::require(k >= 1 && n >= 1, "kary_count: k and n must be >= 1");
    return exact_div(binomial((k + 1) * n, n), k * n + 1);
}

inline BigCount kary_peaks_count(long long k, long long n, long long j) {
    detail::require(k >= 1 && n >= 1 && j >= 1, "kary_peaks_count: arguments must be >= 1");
    return exact_div(binomial(n - 1, j - 1) * binomial(k * n, j - 1), j);
}

}  // namespace latpath
