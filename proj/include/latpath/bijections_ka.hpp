#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "path_word.hpp"

namespace latpath {

// Step-index range [begin, end) in the source word.
struct SegmentRef {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const SegmentRef&, const SegmentRef&) = default;
};

// Anchor points of a cut-and-reverse rearrangement plus the four source
// ranges in output assembly order.
struct BijectionTrace {
    LatticePoint o, a, b, c, n;
    std::array<SegmentRef, 4> segments{};
};

namespace detail {

inline void append_range(std::vector<Step>& out, const std::vector<Step>& src, std::size_t begin,
                         std::size_t end) {
    out.insert(out.end(), src.begin() + begin, src.begin() + end);
}

inline void append_reversed(std::vector<Step>& out, const std::vector<Step>& src,
                            std::size_t begin, std::size_t end) {
    out.insert(out.end(), src.rbegin() + (src.size() - end), src.rbegin() + (src.size() - begin));
}

inline bool first_non_horizontal_is_up(const PathWord& word) {
    for (const Step& s : word.steps()) {
        if (s.kind == StepKind::Horizontal) continue;
        return s.kind == StepKind::Up;
    }
    return false;
}

inline void require_super_up(const PathWord& word, const char* op) {
    require(classify(word) != PathClass::Invalid,
            std::string(op) + ": word must end at height 0");
    require(first_non_horizontal_is_up(word),
            std::string(op) + ": first non-horizontal step must be up");
}

// A and B anchors shared by the inverse rearrangement and the hump
// designation. A launches the distinguished ascent from the axis; B closes
// the segment carrying the designated hump.
struct SuperAnchors {
    std::size_t a_idx = 0;
    std::size_t b_idx = 0;
};

inline SuperAnchors super_anchors(const PathWord& word) {
    const auto& steps = word.steps();
    const auto pts = word.points();
    const std::size_t N = steps.size();

    // First down step ending below the axis, if any.
    std::size_t dip = N;
    long long h = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (steps[i].kind == StepKind::Up) h += steps[i].rise;
        else if (steps[i].kind == StepKind::Down) h -= 1;
        if (h < 0) { dip = i; break; }
    }

    std::size_t b_idx = N;
    if (dip < N) {
        bool found = false;
        for (std::size_t q = 1; q <= dip; ++q)
            if (pts[q].y == 0 && steps[q - 1].kind == StepKind::Down) {
                b_idx = q;
                found = true;
            }
        check(found, "anchors: no descent to the axis before the first dip");
    }

    std::size_t a_idx = N;
    for (std::size_t q = 0; q < N; ++q)
        if (pts[q].x < pts[b_idx].x && pts[q].y == 0 && steps[q].kind == StepKind::Up) a_idx = q;
    check(a_idx < N, "anchors: no axis point launching upward");
    return {a_idx, b_idx};
}

struct DesignatedHump {
    std::size_t start = 0;             // index of the hump's up step
    std::size_t horizontal_count = 0;
};

// Leftmost hump of the segment between the A and B anchors.
inline DesignatedHump designated_hump_of(const PathWord& word) {
    auto [a_idx, b_idx] = super_anchors(word);
    std::vector<Step> segment(word.steps().begin() + a_idx, word.steps().begin() + b_idx);
    auto found = scan_humps(segment);
    check(!found.empty(), "anchors: ascent segment carries no hump");
    return {a_idx + found.front().first, found.front().second};
}

}  // namespace detail

// Maps a strict word with a designated hump to the word that trades the hump
// for a dip below the axis: cut at the anchors, swap the two middle pieces,
// reversing them.
inline std::pair<PathWord, BijectionTrace> phi(const PathWord& word, std::size_t hump_index) {
    detail::require(classify(word) == PathClass::Strict, "phi: word must be strict");
    auto hs = humps(word);
    detail::require(hump_index < hs.size(),
                    "phi: hump index " + std::to_string(hump_index) + " out of range");
    const auto& steps = word.steps();
    const auto pts = word.points();
    const std::size_t N = steps.size();

    const std::size_t start = hs[hump_index].start_index;
    const std::size_t p = start + 1;  // hump point

    // A: left end of the earliest up step in the maximal {up, horizontal} run
    // ending at the hump's up step.
    std::size_t a_idx = start;
    for (std::size_t t = start;; --t) {
        if (steps[t].kind == StepKind::Up) a_idx = t;
        else if (steps[t].kind == StepKind::Down) break;
        if (t == 0) break;
    }
    // B: leftmost point strictly right of the hump point at A's level.
    std::size_t b_idx = N + 1;
    for (std::size_t q = 0; q <= N; ++q)
        if (pts[q].x > pts[p].x && pts[q].y == pts[a_idx].y) {
            b_idx = q;
            break;
        }
    detail::check(b_idx <= N, "phi: no reattachment point right of the hump");
    // C: rightmost axis point at or before A.
    std::size_t c_idx = 0;
    for (std::size_t q = 0; q <= a_idx; ++q)
        if (pts[q].y == 0) c_idx = q;

    std::vector<Step> out;
    out.reserve(N);
    detail::append_range(out, steps, 0, c_idx);
    detail::append_range(out, steps, a_idx, b_idx);
    detail::append_reversed(out, steps, c_idx, a_idx);
    detail::append_reversed(out, steps, b_idx, N);

    PathWord image(word.profile(), std::move(out));
    detail::check(classify(image) != PathClass::Invalid, "phi: image must end on the axis");
    detail::check(detail::first_non_horizontal_is_up(image), "phi: image must start upward");

    BijectionTrace trace;
    trace.o = pts.front();
    trace.n = pts.back();
    trace.a = pts[a_idx];
    trace.b = pts[b_idx];
    trace.c = pts[c_idx];
    trace.segments = {SegmentRef{0, c_idx}, SegmentRef{a_idx, b_idx}, SegmentRef{c_idx, a_idx},
                      SegmentRef{b_idx, N}};
    return {std::move(image), trace};
}

struct PhiInverseResult {
    PathWord word;
    std::size_t hump_index = 0;
    BijectionTrace trace;
};

inline PhiInverseResult phi_inverse(const PathWord& word) {
    detail::require_super_up(word, "phi_inverse");
    const auto& steps = word.steps();
    const auto pts = word.points();
    const std::size_t N = steps.size();

    const auto [a_idx, b_idx] = detail::super_anchors(word);
    // C: leftmost point at or right of B attaining the maximum height there.
    std::size_t c_idx = b_idx;
    for (std::size_t q = b_idx; q <= N; ++q)
        if (pts[q].y > pts[c_idx].y) c_idx = q;

    std::vector<Step> out;
    out.reserve(N);
    detail::append_range(out, steps, 0, a_idx);
    detail::append_reversed(out, steps, b_idx, c_idx);
    detail::append_range(out, steps, a_idx, b_idx);
    detail::append_reversed(out, steps, c_idx, N);

    PathWord image(word.profile(), std::move(out));
    detail::check(classify(image) == PathClass::Strict, "phi_inverse: reassembly must be strict");

    // The designated hump is the leftmost hump of the transplanted segment.
    std::vector<Step> segment(steps.begin() + a_idx, steps.begin() + b_idx);
    auto seg_humps = detail::scan_humps(segment);
    detail::check(!seg_humps.empty(), "phi_inverse: ascent segment carries no hump");
    const std::size_t hump_start = a_idx + (c_idx - b_idx) + seg_humps.front().first;

    auto hs = humps(image);
    std::size_t hump_index = hs.size();
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (hs[i].start_index == hump_start) {
            hump_index = i;
            break;
        }
    detail::check(hump_index < hs.size(), "phi_inverse: designated hump not found in image");

    BijectionTrace trace;
    trace.o = pts.front();
    trace.n = pts.back();
    trace.a = pts[a_idx];
    trace.b = pts[b_idx];
    trace.c = pts[c_idx];
    trace.segments = {SegmentRef{0, a_idx}, SegmentRef{b_idx, c_idx}, SegmentRef{a_idx, b_idx},
                      SegmentRef{c_idx, N}};
    return {std::move(image), hump_index, trace};
}

// Deletes one horizontal step from the designated hump; inverse of hump_grow.
inline PathWord hump_shrink(const PathWord& word) {
    detail::require(word.profile().allows_horizontal(),
                    "hump_shrink: profile has no horizontal step");
    detail::require_super_up(word, "hump_shrink");
    auto dh = detail::designated_hump_of(word);
    detail::require(dh.horizontal_count >= 1, "hump_shrink: designated hump is a peak");
    std::vector<Step> out = word.steps();
    detail::check(out[dh.start + 1].kind == StepKind::Horizontal,
                  "hump_shrink: hump interior is not horizontal");
    out.erase(out.begin() + dh.start + 1);
    PathWord image(word.profile(), std::move(out));
    detail::check(detail::first_non_horizontal_is_up(image) &&
                      classify(image) != PathClass::Invalid,
                  "hump_shrink: image left the family");
    return image;
}

inline PathWord hump_grow(const PathWord& word) {
    detail::require(word.profile().allows_horizontal(),
                    "hump_grow: profile has no horizontal step");
    detail::require_super_up(word, "hump_grow");
    auto dh = detail::designated_hump_of(word);
    std::vector<Step> out = word.steps();
    out.insert(out.begin() + dh.start + 1, Step::horizontal());
    PathWord image(word.profile(), std::move(out));
    detail::check(detail::first_non_horizontal_is_up(image) &&
                      classify(image) != PathClass::Invalid,
                  "hump_grow: image left the family");
    return image;
}

// Decomposition of a word whose first non-horizontal step is up:
//   H^l U C_1 D C_2 D ... C_k D C_{k+1}
// where C_1..C_k never dip below their entry level and C_{k+1} is the tail.
struct PsiDecomposition {
    std::size_t leading_horizontals = 0;
    std::vector<PathWord> components;  // C_1..C_k
    PathWord tail;
};

namespace detail {

// Splits steps[begin:end) at the first passages one, two, ... `levels` units
// below the entry height; returns the ranges between the closing down steps
// plus the start of the remainder.
struct PassageSplit {
    std::vector<SegmentRef> segments;
    std::size_t tail_begin = 0;
};

inline PassageSplit first_passage_split(const std::vector<Step>& steps, std::size_t begin,
                                        std::size_t end, long long levels) {
    PassageSplit out;
    long long h = 0;
    long long target = -1;
    std::size_t seg_start = begin;
    for (std::size_t i = begin; i < end && target >= -levels; ++i) {
        if (steps[i].kind == StepKind::Up) h += steps[i].rise;
        else if (steps[i].kind == StepKind::Down) h -= 1;
        if (steps[i].kind == StepKind::Down && h == target) {
            out.segments.push_back({seg_start, i});
            seg_start = i + 1;
            --target;
        }
    }
    check(static_cast<long long>(out.segments.size()) == levels,
          "decomposition: missing first passage");
    out.tail_begin = seg_start;
    return out;
}

}  // namespace detail

inline PsiDecomposition psi_decompose(const PathWord& word) {
    detail::require(word.profile().single_rise(),
                    "psi_decompose: profile must have a single rise");
    detail::require_super_up(word, "psi_decompose");
    const auto& steps = word.steps();
    const std::size_t N = steps.size();

    std::size_t lead = 0;
    while (lead < N && steps[lead].kind == StepKind::Horizontal) ++lead;
    detail::check(lead < N && steps[lead].kind == StepKind::Up,
                  "psi_decompose: no opening up step");
    const int k = steps[lead].rise;

    auto split = detail::first_passage_split(steps, lead + 1, N, k);
    PsiDecomposition out{lead, {},
                         PathWord(word.profile(),
                                  std::vector<Step>(steps.begin() + split.tail_begin,
                                                    steps.begin() + N))};
    for (const SegmentRef& seg : split.segments)
        out.components.emplace_back(
            word.profile(), std::vector<Step>(steps.begin() + seg.begin, steps.begin() + seg.end));
    return out;
}

// The k+1 words obtained by moving the opening up step past each component in
// turn, reversing every component it passes. The input is element 1.
inline std::vector<PathWord> psi_expand(const PathWord& word) {
    auto deco = psi_decompose(word);
    const int k = word.profile().rises.front();
    detail::check(static_cast<int>(deco.components.size()) == k, "psi_expand: component count");

    std::vector<const PathWord*> parts;  // C_1..C_k, C_{k+1}
    for (const PathWord& c : deco.components) parts.push_back(&c);
    parts.push_back(&deco.tail);

    std::vector<PathWord> out;
    out.reserve(k + 1);
    for (int i = 1; i <= k + 1; ++i) {
        std::vector<Step> steps(deco.leading_horizontals, Step::horizontal());
        for (int t = 1; t < i; ++t) {
            steps.push_back(Step::down());
            detail::append_reversed(steps, parts[t - 1]->steps(), 0, parts[t - 1]->size());
        }
        steps.push_back(Step::up(k));
        detail::append_range(steps, parts[i - 1]->steps(), 0, parts[i - 1]->size());
        for (int t = i + 1; t <= k + 1; ++t) {
            steps.push_back(Step::down());
            detail::append_range(steps, parts[t - 1]->steps(), 0, parts[t - 1]->size());
        }
        out.emplace_back(word.profile(), std::move(steps));
        detail::check(classify(out.back()) != PathClass::Invalid,
                      "psi_expand: element must end on the axis");
    }
    detail::check(out.front() == word, "psi_expand: input must be element 1");
    return out;
}

// Recovers element 1 of the class containing the given word.
inline PathWord psi_contract(const PathWord& word) {
    detail::require(word.profile().single_rise(),
                    "psi_contract: profile must have a single rise");
    detail::require(classify(word) != PathClass::Invalid,
                    "psi_contract: word must end at height 0");
    const auto& steps = word.steps();
    const std::size_t N = steps.size();

    std::size_t lead = 0;
    while (lead < N && steps[lead].kind == StepKind::Horizontal) ++lead;
    detail::require(lead < N && steps[lead].kind != StepKind::Horizontal,
                    "psi_contract: word has no up step");
    if (steps[lead].kind == StepKind::Up) {
        psi_decompose(word);  // shape check only
        return word;
    }

    // Leftmost up step ending at or above the axis separates the reversed
    // prefix components from the intact suffix components.
    const int k = word.profile().rises.front();
    long long h = 0;
    std::size_t u_idx = N;
    long long h_before_u = 0;
    for (std::size_t i = lead; i < N; ++i) {
        long long next = h;
        if (steps[i].kind == StepKind::Up) next += steps[i].rise;
        else if (steps[i].kind == StepKind::Down) next -= 1;
        if (steps[i].kind == StepKind::Up && next >= 0) {
            u_idx = i;
            h_before_u = h;
            break;
        }
        h = next;
    }
    detail::require(u_idx < N, "psi_contract: no up step returns to the axis");
    const long long passed = -h_before_u;  // components already jumped over
    detail::check(passed >= 1 && passed <= k, "psi_contract: separator depth out of range");

    // Reversing the prefix after the leading horizontals turns it into
    // C_{passed} D ... C_1 D; a first-passage split recovers the components.
    std::vector<Step> prefix(steps.begin() + lead, steps.begin() + u_idx);
    std::reverse(prefix.begin(), prefix.end());
    auto pre = detail::first_passage_split(prefix, 0, prefix.size(), passed);
    detail::check(pre.tail_begin == prefix.size(), "psi_contract: prefix has trailing steps");

    auto post = detail::first_passage_split(steps, u_idx + 1, N, k - passed);

    std::vector<Step> out(steps.begin(), steps.begin() + lead);
    out.push_back(Step::up(k));
    for (auto it = pre.segments.rbegin(); it != pre.segments.rend(); ++it) {
        detail::append_range(out, prefix, it->begin, it->end);
        out.push_back(Step::down());
    }
    bool first_suffix = true;
    for (const SegmentRef& seg : post.segments) {
        if (!first_suffix) out.push_back(Step::down());
        detail::append_range(out, steps, seg.begin, seg.end);
        first_suffix = false;
    }
    if (!first_suffix) out.push_back(Step::down());
    detail::append_range(out, steps, post.tail_begin, N);

    PathWord image(word.profile(), std::move(out));
    detail::check(detail::first_non_horizontal_is_up(image) &&
                      classify(image) != PathClass::Invalid,
                  "psi_contract: image left the family");
    return image;
}

}  // namespace latpath
