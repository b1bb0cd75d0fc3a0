#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "path_word.hpp"

namespace latpath {

enum class NmStep : std::uint8_t { Up, Down };  // Up = (0,1), Down = (1,0)

// Word over the two-letter alphabet with n = #Down, m = #Up. The geometry is
// measured against the line from (0,0) to (n,m) via the excess m*x - n*y.
class NMWord {
  public:
    NMWord() = default;
    explicit NMWord(std::vector<NmStep> steps) : steps_(std::move(steps)) {
        for (NmStep s : steps_) {
            if (s == NmStep::Down) ++n_;
            else ++m_;
        }
    }

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<NmStep>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    std::vector<LatticePoint> points() const {
        std::vector<LatticePoint> pts;
        pts.reserve(steps_.size() + 1);
        LatticePoint p{0, 0};
        pts.push_back(p);
        for (NmStep s : steps_) {
            if (s == NmStep::Down) p.x += 1;
            else p.y += 1;
            pts.push_back(p);
        }
        return pts;
    }

    friend bool operator==(const NMWord&, const NMWord&) = default;

  private:
    std::vector<NmStep> steps_;
    int n_ = 0;
    int m_ = 0;
};

// Signed distance proxy for the line through (0,0) and (n,m): zero on the
// line, positive strictly below it.
inline long long excess(const NMWord& word, const LatticePoint& p) {
    return static_cast<long long>(word.m()) * p.x - static_cast<long long>(word.n()) * p.y;
}

enum class NmClass : std::uint8_t { Dyck, FreeOnly };

inline NmClass nm_classify(const NMWord& word) {
    long long x = 0, y = 0;
    for (NmStep s : word.steps()) {
        if (s == NmStep::Down) ++x;
        else ++y;
        if (static_cast<long long>(word.m()) * x - static_cast<long long>(word.n()) * y > 0)
            return NmClass::FreeOnly;
    }
    return NmClass::Dyck;
}

// Peak points: the corner of each UD factor, listed left to right.
using PeakList = std::vector<LatticePoint>;

inline PeakList nm_peaks(const NMWord& word) {
    PeakList out;
    auto pts = word.points();
    const auto& st = word.steps();
    for (std::size_t i = 0; i + 1 < st.size(); ++i)
        if (st[i] == NmStep::Up && st[i + 1] == NmStep::Down) out.push_back(pts[i + 1]);
    return out;
}

inline std::size_t nm_peak_count(const NMWord& word) { return nm_peaks(word).size(); }

inline std::string to_string(const NMWord& word) {
    std::string out;
    out.reserve(word.size());
    for (NmStep s : word.steps()) out += (s == NmStep::Up ? 'U' : 'D');
    return out;
}

inline NMWord parse_nm_word(std::string_view text) {
    std::vector<NmStep> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U') steps.push_back(NmStep::Up);
        else if (c == 'D') steps.push_back(NmStep::Down);
        else detail::require(false, std::string("parse: unexpected character '") + c + "'");
    }
    return NMWord(std::move(steps));
}

inline bool coprime(int n, int m) { return std::gcd(n, m) == 1; }

}  // namespace latpath
