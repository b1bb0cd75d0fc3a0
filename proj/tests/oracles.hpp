#pragma once

// Reference implementations for cross-checking, deliberately kept away from
// the library's types: everything here works on plain letter strings.

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

// Every letter sequence of total width n; U and D have width 1, H has width
// a (a = 0 meaning horizontals are unavailable). No pruning of any kind.
inline void collect_ka_texts(int a, int n, std::string& cur, std::vector<std::string>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    cur.push_back('U');
    collect_ka_texts(a, n - 1, cur, out);
    cur.back() = 'D';
    collect_ka_texts(a, n - 1, cur, out);
    cur.pop_back();
    if (a > 0 && n >= a) {
        cur.push_back('H');
        collect_ka_texts(a, n - a, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::string> all_ka_texts(int a, int n) {
    std::vector<std::string> out;
    std::string cur;
    collect_ka_texts(a, n, cur, out);
    return out;
}

// 'S' strict, 'P' super-but-not-strict, 'I' does not end at height zero.
inline char classify_text(const std::string& w, int k) {
    long long h = 0, low = 0;
    for (char c : w) {
        if (c == 'U') h += k;
        else if (c == 'D') h -= 1;
        low = std::min(low, h);
    }
    if (h != 0) return 'I';
    return low >= 0 ? 'S' : 'P';
}

inline bool first_non_h_is_up(const std::string& w) {
    for (char c : w)
        if (c != 'H') return c == 'U';
    return false;
}

inline int humps_in_text(const std::string& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 'U') continue;
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == 'H') ++j;
        if (j < w.size() && w[j] == 'D') ++count;
    }
    return count;
}

inline int peaks_in_text(const std::string& w) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'U' && w[i + 1] == 'D') ++count;
    return count;
}

inline Big factorial(int n) {
    Big f{1};
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Super paths of order n have u up steps, k*u down steps, and h horizontal
// steps with u*(k+1) + a*h = n, in any arrangement.
inline Big super_count_multinomial(int k, int a, int n) {
    Big total{0};
    for (int u = 0; u * (k + 1) <= n; ++u) {
        int rem = n - u * (k + 1);
        if (a == 0) {
            if (rem != 0) continue;
            total += factorial(u + k * u) / (factorial(u) * factorial(k * u));
        } else {
            if (rem % a != 0) continue;
            int h = rem / a;
            total += factorial(u + k * u + h) /
                     (factorial(u) * factorial(k * u) * factorial(h));
        }
    }
    return total;
}

inline Big pascal_binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    std::vector<Big> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Big> next(i + 1, Big{0});
        for (int t = 0; t <= i; ++t) {
            if (t < i) next[t] += row[t];
            if (t > 0) next[t] += row[t - 1];
        }
        row = std::move(next);
    }
    return row[r];
}

inline std::vector<std::string> all_nm_texts(int n, int m) {
    std::string s = std::string(n, 'D') + std::string(m, 'U');
    std::sort(s.begin(), s.end());
    std::vector<std::string> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// Rational-slope check in floating point: weakly above the line to (n,m).
inline bool nm_is_dyck_float(const std::string& w, int n, int m) {
    if (n == 0) return true;
    double x = 0, y = 0;
    for (char c : w) {
        if (c == 'D') x += 1;
        else y += 1;
        if (y < static_cast<double>(m) * x / static_cast<double>(n)) return false;
    }
    return true;
}

}  // namespace oracle
