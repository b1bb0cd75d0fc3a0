#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latpath {

namespace detail {

// Internal consistency assertion; survives NDEBUG.
inline void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

enum class StepKind : std::uint8_t { Up, Down, Horizontal };

// One lattice step. `rise` is meaningful for Up steps only and is kept 0
// otherwise so that defaulted equality works.
struct Step {
    StepKind kind = StepKind::Down;
    int rise = 0;

    static Step up(int rise) { return {StepKind::Up, rise}; }
    static Step down() { return {StepKind::Down, 0}; }
    static Step horizontal() { return {StepKind::Horizontal, 0}; }

    friend bool operator==(const Step&, const Step&) = default;
};

// Collation: up steps by ascending rise, then down, then horizontal.
inline int collation_rank(const Step& s) {
    switch (s.kind) {
        case StepKind::Up: return s.rise;
        case StepKind::Down: return 1 << 24;
        default: return (1 << 24) + 1;
    }
}

inline bool collation_less(const Step& lhs, const Step& rhs) {
    return collation_rank(lhs) < collation_rank(rhs);
}

// Step alphabet of a path family: the set of allowed up-step rises plus the
// width of a horizontal step. An absent horizontal_width means horizontal
// steps are disallowed entirely.
struct PathProfile {
    std::vector<int> rises;
    std::optional<int> horizontal_width;

    PathProfile(std::vector<int> rise_set, std::optional<int> width)
        : rises(std::move(rise_set)), horizontal_width(width) {
        std::sort(rises.begin(), rises.end());
        rises.erase(std::unique(rises.begin(), rises.end()), rises.end());
        detail::require(!rises.empty(), "profile: rise set must be nonempty");
        detail::require(rises.front() >= 1, "profile: every rise must be >= 1");
        detail::require(!horizontal_width || *horizontal_width >= 1,
                        "profile: horizontal width must be >= 1");
    }

    static PathProfile ka(int k, std::optional<int> a) { return PathProfile({k}, a); }

    bool single_rise() const { return rises.size() == 1; }
    int max_rise() const { return rises.back(); }
    bool allows_rise(int r) const { return std::binary_search(rises.begin(), rises.end(), r); }
    bool allows_horizontal() const { return horizontal_width.has_value(); }

    friend bool operator==(const PathProfile&, const PathProfile&) = default;
};

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Immutable step sequence over a profile's alphabet. Construction validates
// that every step is available in the profile.
class PathWord {
  public:
    PathWord(PathProfile profile, std::vector<Step> steps)
        : profile_(std::move(profile)), steps_(std::move(steps)) {
        for (const Step& s : steps_) {
            switch (s.kind) {
                case StepKind::Up:
                    detail::require(profile_.allows_rise(s.rise),
                                    "word: up rise " + std::to_string(s.rise) +
                                        " not in profile");
                    break;
                case StepKind::Horizontal:
                    detail::require(profile_.allows_horizontal(),
                                    "word: horizontal step not allowed by profile");
                    break;
                case StepKind::Down: break;
            }
        }
    }

    const PathProfile& profile() const { return profile_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    int step_width(const Step& s) const {
        return s.kind == StepKind::Horizontal ? *profile_.horizontal_width : 1;
    }

    // Total x-extent.
    long long order() const {
        long long w = 0;
        for (const Step& s : steps_) w += step_width(s);
        return w;
    }

    long long end_height() const {
        long long h = 0;
        for (const Step& s : steps_) {
            if (s.kind == StepKind::Up) h += s.rise;
            else if (s.kind == StepKind::Down) h -= 1;
        }
        return h;
    }

    // Step boundaries from (0,0); size() + 1 points.
    std::vector<LatticePoint> points() const {
        std::vector<LatticePoint> pts;
        pts.reserve(steps_.size() + 1);
        LatticePoint p{0, 0};
        pts.push_back(p);
        for (const Step& s : steps_) {
            p.x += step_width(s);
            if (s.kind == StepKind::Up) p.y += s.rise;
            else if (s.kind == StepKind::Down) p.y -= 1;
            pts.push_back(p);
        }
        return pts;
    }

    friend bool operator==(const PathWord&, const PathWord&) = default;

  private:
    PathProfile profile_;
    std::vector<Step> steps_;
};

enum class PathClass : std::uint8_t {
    Strict,     // ends at height 0, never below the axis
    SuperOnly,  // ends at height 0, dips below the axis somewhere
    Invalid     // does not end at height 0
};

inline PathClass classify(const PathWord& word) {
    long long h = 0;
    long long min_h = 0;
    for (const Step& s : word.steps()) {
        if (s.kind == StepKind::Up) h += s.rise;
        else if (s.kind == StepKind::Down) h -= 1;
        min_h = std::min(min_h, h);
    }
    if (h != 0) return PathClass::Invalid;
    return min_h >= 0 ? PathClass::Strict : PathClass::SuperOnly;
}

inline bool is_super(const PathWord& word) { return classify(word) != PathClass::Invalid; }

// A hump is a maximal factor U H^t D (t >= 0); a peak is a hump with t = 0.
// The hump point is the lattice point immediately after the opening up step.
struct Hump {
    std::size_t start_index = 0;       // index of the opening up step
    std::size_t horizontal_count = 0;  // t
    LatticePoint hump_point;

    bool is_peak() const { return horizontal_count == 0; }
    friend bool operator==(const Hump&, const Hump&) = default;
};

namespace detail {

// Scan for U H^t D factors; no classification requirement. Hump points are
// filled in by the caller when coordinates are available.
inline std::vector<std::pair<std::size_t, std::size_t>> scan_humps(const std::vector<Step>& steps) {
    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].kind != StepKind::Up) continue;
        std::size_t j = i + 1;
        while (j < steps.size() && steps[j].kind == StepKind::Horizontal) ++j;
        if (j < steps.size() && steps[j].kind == StepKind::Down)
            found.emplace_back(i, j - i - 1);
    }
    return found;
}

}  // namespace detail

inline std::vector<Hump> humps(const PathWord& word) {
    detail::require(classify(word) != PathClass::Invalid, "humps: word must end at height 0");
    auto pts = word.points();
    std::vector<Hump> out;
    for (auto [start, t] : detail::scan_humps(word.steps()))
        out.push_back(Hump{start, t, pts[start + 1]});
    return out;
}

inline std::size_t peak_count(const PathWord& word) {
    std::size_t c = 0;
    for (const Hump& h : humps(word))
        if (h.is_peak()) ++c;
    return c;
}

inline PathWord reverse_word(const PathWord& word) {
    std::vector<Step> steps(word.steps().rbegin(), word.steps().rend());
    return PathWord(word.profile(), std::move(steps));
}

// Text form. Single-rise profiles write a bare "U"; otherwise the rise is
// explicit as "U(r)". "D" and "H" are always single letters.
inline std::string to_string(const PathWord& word) {
    std::string out;
    const bool bare_up = word.profile().single_rise();
    for (const Step& s : word.steps()) {
        switch (s.kind) {
            case StepKind::Up:
                if (bare_up) out += 'U';
                else out += "U(" + std::to_string(s.rise) + ")";
                break;
            case StepKind::Down: out += 'D'; break;
            case StepKind::Horizontal: out += 'H'; break;
        }
    }
    return out;
}

inline PathWord parse_word(std::string_view text, const PathProfile& profile) {
    std::vector<Step> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'D') {
            steps.push_back(Step::down());
            ++i;
        } else if (c == 'H') {
            detail::require(profile.allows_horizontal(),
                            "parse: horizontal step not allowed by profile");
            steps.push_back(Step::horizontal());
            ++i;
        } else if (c == 'U') {
            ++i;
            if (i < text.size() && text[i] == '(') {
                std::size_t close = text.find(')', i);
                detail::require(close != std::string_view::npos, "parse: unterminated rise");
                std::string digits(text.substr(i + 1, close - i - 1));
                detail::require(!digits.empty() &&
                                    digits.find_first_not_of("0123456789") == std::string::npos,
                                "parse: malformed rise '" + digits + "'");
                int rise = std::stoi(digits);
                detail::require(profile.allows_rise(rise),
                                "parse: rise " + std::to_string(rise) + " not in profile");
                steps.push_back(Step::up(rise));
                i = close + 1;
            } else {
                detail::require(profile.single_rise(),
                                "parse: bare U is ambiguous for a multi-rise profile");
                steps.push_back(Step::up(profile.rises.front()));
            }
        } else {
            detail::require(false, std::string("parse: unexpected character '") + c + "'");
        }
    }
    return PathWord(profile, std::move(steps));
}

}  // namespace latpath
