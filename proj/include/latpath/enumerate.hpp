#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigcount.hpp"
#include "nm_word.hpp"
#include "path_word.hpp"

namespace latpath {

enum class Family : std::uint8_t {
    KaStrict,            // never below the axis, ends at 0
    KaSuper,             // ends at 0, may dip below
    KaSuperPositiveUp,   // super whose first non-horizontal step is up
    KaSuperWithUp,       // super with at least one up step
    NmDyck,              // excess <= 0 everywhere
    NmFree,              // all words with n downs, m ups
    NmFreeUD             // free words starting with U and ending with D
};

inline bool is_ka_family(Family f) {
    return f == Family::KaStrict || f == Family::KaSuper || f == Family::KaSuperPositiveUp ||
           f == Family::KaSuperWithUp;
}

struct FamilySpec {
    Family family = Family::KaStrict;
    std::optional<PathProfile> profile;  // ka families
    long long order = 0;                 // ka families
    int n = 0, m = 0;                    // nm families
    std::optional<int> peak_filter;      // restrict to words with exactly j peaks

    static FamilySpec ka(Family f, PathProfile p, long long order,
                         std::optional<int> peaks = std::nullopt) {
        detail::require(is_ka_family(f), "family spec: not a stepped-path family");
        detail::require(order >= 0, "family spec: order must be >= 0");
        FamilySpec s;
        s.family = f;
        s.profile = std::move(p);
        s.order = order;
        s.peak_filter = peaks;
        return s;
    }

    static FamilySpec nm(Family f, int n, int m, std::optional<int> peaks = std::nullopt) {
        detail::require(!is_ka_family(f), "family spec: not a grid-path family");
        detail::require(n >= 0 && m >= 0, "family spec: n and m must be >= 0");
        FamilySpec s;
        s.family = f;
        s.n = n;
        s.m = m;
        s.peak_filter = peaks;
        return s;
    }
};

namespace detail {

inline std::size_t word_peaks(const std::vector<Step>& steps) {
    std::size_t c = 0;
    for (auto [start, t] : scan_humps(steps))
        if (t == 0) ++c;
    return c;
}

// Depth-first generation over candidate steps in collation order (ups by
// ascending rise, then down, then horizontal); emission order is therefore
// lexicographic under that collation.
inline void generate_ka_impl(const FamilySpec& spec,
                             const std::function<void(const PathWord&)>& emit) {
    const PathProfile& prof = *spec.profile;
    const long long target = spec.order;
    const int max_rise = prof.max_rise();
    const bool strict = spec.family == Family::KaStrict;
    const bool positive_up = spec.family == Family::KaSuperPositiveUp;

    std::vector<Step> candidates;
    for (int r : prof.rises) candidates.push_back(Step::up(r));
    candidates.push_back(Step::down());
    if (prof.allows_horizontal()) candidates.push_back(Step::horizontal());

    std::vector<Step> word;
    auto accept = [&](long long height) {
        if (height != 0) return false;
        switch (spec.family) {
            case Family::KaSuperPositiveUp:
            case Family::KaSuperWithUp: {
                bool has_up = false;
                for (const Step& s : word)
                    if (s.kind == StepKind::Up) { has_up = true; break; }
                if (!has_up) return false;
                break;
            }
            default: break;
        }
        if (spec.peak_filter &&
            word_peaks(word) != static_cast<std::size_t>(*spec.peak_filter))
            return false;
        return true;
    };

    std::function<void(long long, long long, bool)> dfs =
        [&](long long width, long long height, bool seen_non_horizontal) {
        if (width == target) {
            if (accept(height)) emit(PathWord(prof, word));
            return;
        }
        for (const Step& cand : candidates) {
            const long long w =
                cand.kind == StepKind::Horizontal ? *prof.horizontal_width : 1;
            if (width + w > target) continue;
            long long h = height;
            if (cand.kind == StepKind::Up) h += cand.rise;
            else if (cand.kind == StepKind::Down) h -= 1;

            const long long rem = target - width - w;
            if (strict && h < 0) continue;
            if (h > rem) continue;                   // cannot descend back to 0
            if (h < 0 && -h > rem * max_rise) continue;  // cannot climb back to 0
            if (positive_up && !seen_non_horizontal && cand.kind == StepKind::Down)
                continue;  // first non-horizontal step must be up

            word.push_back(cand);
            dfs(width + w, h, seen_non_horizontal || cand.kind != StepKind::Horizontal);
            word.pop_back();
        }
    };
    dfs(0, 0, false);
}

inline void generate_nm_impl(const FamilySpec& spec,
                             const std::function<void(const NMWord&)>& emit) {
    const int n = spec.n, m = spec.m;
    const bool dyck = spec.family == Family::NmDyck;
    const bool ud = spec.family == Family::NmFreeUD;

    std::vector<NmStep> word;
    auto accept = [&]() {
        if (ud) {
            if (word.empty() || word.front() != NmStep::Up || word.back() != NmStep::Down)
                return false;
        }
        if (spec.peak_filter) {
            std::size_t peaks = 0;
            for (std::size_t i = 0; i + 1 < word.size(); ++i)
                if (word[i] == NmStep::Up && word[i + 1] == NmStep::Down) ++peaks;
            if (peaks != static_cast<std::size_t>(*spec.peak_filter)) return false;
        }
        return true;
    };

    // Collation U < D.
    std::function<void(int, int, long long)> dfs = [&](int ups, int downs, long long exc) {
        if (ups == m && downs == n) {
            if (accept()) emit(NMWord(word));
            return;
        }
        if (ups < m) {
            long long e = exc - n;
            if (!dyck || e <= 0) {
                word.push_back(NmStep::Up);
                dfs(ups + 1, downs, e);
                word.pop_back();
            }
        }
        if (downs < n) {
            long long e = exc + m;
            if (!dyck || e <= 0) {
                word.push_back(NmStep::Down);
                dfs(ups, downs + 1, e);
                word.pop_back();
            }
        }
    };
    dfs(0, 0, 0);
}

// walks[w][h + offset]: number of unconstrained step sequences of width w and
// net height h over the profile's alphabet.
struct WalkTable {
    long long offset = 0;  // = width bound (most negative reachable height)
    std::vector<std::vector<BigCount>> at;

    const BigCount& count(long long width, long long height) const {
        static const BigCount zero{0};
        if (width < 0 || width >= static_cast<long long>(at.size())) return zero;
        long long idx = height + offset;
        if (idx < 0 || idx >= static_cast<long long>(at[width].size())) return zero;
        return at[width][idx];
    }
};

inline WalkTable free_walk_table(const PathProfile& prof, long long max_width) {
    WalkTable t;
    t.offset = max_width;
    const long long span = max_width * (prof.max_rise() + 1) + 1;
    t.at.assign(max_width + 1, std::vector<BigCount>(span, BigCount(0)));
    t.at[0][t.offset] = 1;
    for (long long w = 1; w <= max_width; ++w) {
        for (long long idx = 0; idx < span; ++idx) {
            BigCount total{0};
            // last step up
            for (int r : prof.rises)
                if (idx - r >= 0) total += t.at[w - 1][idx - r];
            // last step down
            if (idx + 1 < span) total += t.at[w - 1][idx + 1];
            // last step horizontal
            if (prof.allows_horizontal() && w >= *prof.horizontal_width)
                total += t.at[w - *prof.horizontal_width][idx];
            t.at[w][idx] = total;
        }
    }
    return t;
}

// Same recurrence restricted to heights >= 0.
inline std::vector<std::vector<BigCount>> strict_walk_table(const PathProfile& prof,
                                                            long long max_width) {
    const long long span = max_width * prof.max_rise() + 1;
    std::vector<std::vector<BigCount>> at(max_width + 1,
                                          std::vector<BigCount>(span, BigCount(0)));
    at[0][0] = 1;
    for (long long w = 1; w <= max_width; ++w)
        for (long long h = 0; h < span; ++h) {
            BigCount total{0};
            for (int r : prof.rises)
                if (h - r >= 0) total += at[w - 1][h - r];
            if (h + 1 < span) total += at[w - 1][h + 1];
            if (prof.allows_horizontal() && w >= *prof.horizontal_width)
                total += at[w - *prof.horizontal_width][h];
            at[w][h] = total;
        }
    return at;
}

// Grid walks from (0,0) to (n,m); dyck restricts to excess <= 0.
inline BigCount grid_count(int n, int m, bool dyck) {
    std::vector<std::vector<BigCount>> at(n + 1, std::vector<BigCount>(m + 1, BigCount(0)));
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= m; ++y) {
            if (dyck && static_cast<long long>(m) * x - static_cast<long long>(n) * y > 0) continue;
            if (x == 0 && y == 0) { at[x][y] = 1; continue; }
            BigCount total{0};
            if (x > 0) total += at[x - 1][y];
            if (y > 0) total += at[x][y - 1];
            at[x][y] = total;
        }
    return at[n][m];
}

}  // namespace detail

inline std::vector<PathWord> generate_ka(const FamilySpec& spec) {
    detail::require(is_ka_family(spec.family), "generate_ka: grid-path family");
    detail::require(spec.profile.has_value(), "generate_ka: profile required");
    std::vector<PathWord> out;
    detail::generate_ka_impl(spec, [&](const PathWord& w) { out.push_back(w); });
    return out;
}

inline std::vector<NMWord> generate_nm(const FamilySpec& spec) {
    detail::require(!is_ka_family(spec.family), "generate_nm: stepped-path family");
    std::vector<NMWord> out;
    detail::generate_nm_impl(spec, [&](const NMWord& w) { out.push_back(w); });
    return out;
}

// 1 if n is a multiple of the horizontal width, else 0; with horizontals
// disallowed only the empty order qualifies.
inline int delta_divides(const std::optional<int>& a, long long n) {
    if (!a) return n == 0 ? 1 : 0;
    return n % *a == 0 ? 1 : 0;
}

inline BigCount count_family(const FamilySpec& spec) {
    if (spec.peak_filter) {  // no closed recurrence kept for filtered families
        BigCount total{0};
        if (is_ka_family(spec.family))
            detail::generate_ka_impl(spec, [&](const PathWord&) { ++total; });
        else
            detail::generate_nm_impl(spec, [&](const NMWord&) { ++total; });
        return total;
    }
    switch (spec.family) {
        case Family::KaStrict: {
            auto t = detail::strict_walk_table(*spec.profile, spec.order);
            return t[spec.order][0];
        }
        case Family::KaSuper: {
            auto t = detail::free_walk_table(*spec.profile, spec.order);
            return t.count(spec.order, 0);
        }
        case Family::KaSuperWithUp: {
            auto t = detail::free_walk_table(*spec.profile, spec.order);
            return t.count(spec.order, 0) -
                   delta_divides(spec.profile->horizontal_width, spec.order);
        }
        case Family::KaSuperPositiveUp: {
            // Split on the leading H^l U prefix; the remainder is a free walk
            // of width order - l*a - 1 with net height -r.
            const PathProfile& prof = *spec.profile;
            auto t = detail::free_walk_table(prof, spec.order);
            BigCount total{0};
            if (prof.allows_horizontal()) {
                for (long long lead = 0; lead + 1 <= spec.order;
                     lead += *prof.horizontal_width)
                    for (int r : prof.rises) total += t.count(spec.order - lead - 1, -r);
            } else if (spec.order >= 1) {
                for (int r : prof.rises) total += t.count(spec.order - 1, -r);
            }
            return total;
        }
        case Family::NmDyck: return detail::grid_count(spec.n, spec.m, true);
        case Family::NmFree: return detail::grid_count(spec.n, spec.m, false);
        case Family::NmFreeUD:
            if (spec.n < 1 || spec.m < 1) return 0;
            return detail::grid_count(spec.n - 1, spec.m - 1, false);
    }
    detail::check(false, "count_family: unreachable");
    return 0;
}

inline BigCount total_humps(const PathProfile& prof, long long order) {
    detail::require(order >= 0, "total_humps: order must be >= 0");
    BigCount total{0};
    detail::generate_ka_impl(FamilySpec::ka(Family::KaStrict, prof, order),
                             [&](const PathWord& w) {
                                 total += detail::scan_humps(w.steps()).size();
                             });
    return total;
}

inline BigCount total_peaks(const PathProfile& prof, long long order) {
    detail::require(order >= 0, "total_peaks: order must be >= 0");
    BigCount total{0};
    detail::generate_ka_impl(FamilySpec::ka(Family::KaStrict, prof, order),
                             [&](const PathWord& w) {
                                 total += detail::word_peaks(w.steps());
                             });
    return total;
}

}  // namespace latpath
