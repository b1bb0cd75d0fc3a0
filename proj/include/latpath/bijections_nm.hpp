#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "nm_word.hpp"
#include "path_word.hpp"

namespace latpath {

namespace detail {

inline NMWord rotate_nm(const NMWord& word, std::size_t split) {
    const auto& st = word.steps();
    std::vector<NmStep> out(st.begin() + split, st.end());
    out.insert(out.end(), st.begin(), st.begin() + split);
    return NMWord(std::move(out));
}

// Index in [0, size) of the unique point of maximum excess; a tie is a
// consistency violation because callers guarantee coprime n, m.
inline std::size_t excess_argmax(const NMWord& word) {
    const auto pts = word.points();
    std::size_t best = 0;
    long long best_val = 0;  // excess at the origin
    bool tie = false;
    for (std::size_t q = 1; q < word.size(); ++q) {
        long long e = excess(word, pts[q]);
        if (e > best_val) {
            best = q;
            best_val = e;
            tie = false;
        } else if (e == best_val) {
            tie = true;
        }
    }
    check(!tie, "excess maximum is not unique");
    return best;
}

}  // namespace detail

// Maximal factors U^a D^b of a word that starts with U and ends with D.
struct Block {
    int up_run = 0;
    int down_run = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

inline std::vector<Block> nm_blocks(const NMWord& word) {
    detail::require(!word.empty() && word.steps().front() == NmStep::Up &&
                        word.steps().back() == NmStep::Down,
                    "blocks: word must start with U and end with D");
    std::vector<Block> out;
    std::size_t i = 0;
    const auto& st = word.steps();
    while (i < st.size()) {
        Block b;
        while (i < st.size() && st[i] == NmStep::Up) { ++b.up_run; ++i; }
        while (i < st.size() && st[i] == NmStep::Down) { ++b.down_run; ++i; }
        detail::check(b.up_run > 0 && b.down_run > 0, "blocks: malformed block");
        out.push_back(b);
    }
    return out;
}

// All n+m rotations of a word, first rotation first, duplicates removed; the
// input itself is the representative slot (it reappears as the last rotation).
struct CyclicClass {
    NMWord representative;
    std::vector<NMWord> members;
};

inline CyclicClass cyclic_class(const NMWord& word) {
    detail::require(!word.empty(), "cyclic_class: word must be nonempty");
    CyclicClass out{word, {}};
    const std::size_t len = word.size();
    for (std::size_t i = 1; i <= len; ++i) {
        NMWord rotated = detail::rotate_nm(word, i);
        bool seen = false;
        for (const NMWord& w : out.members)
            if (w == rotated) { seen = true; break; }
        if (!seen) out.members.push_back(std::move(rotated));
    }
    detail::check(len % out.members.size() == 0, "cyclic_class: size must divide the length");
    return out;
}

// The unique rotation with excess <= 0 everywhere, together with the split
// position producing it. Requires coprime n, m.
inline std::pair<NMWord, std::size_t> dyck_representative(const NMWord& word) {
    detail::require(word.n() >= 1 && word.m() >= 1, "dyck_representative: need n, m >= 1");
    detail::require(coprime(word.n(), word.m()), "dyck_representative: n and m must be coprime");
    std::size_t split = detail::excess_argmax(word);
    NMWord rep = detail::rotate_nm(word, split);
    detail::check(nm_classify(rep) == NmClass::Dyck, "dyck_representative: rotation not Dyck");
    return {std::move(rep), split};
}

// Rotates a Dyck word's blocks so that the chosen peak's block comes first.
// peak_index is 1-based among the j peaks.
inline NMWord phi_hat(const NMWord& word, std::size_t peak_index) {
    detail::require(word.n() >= 1 && word.m() >= 1, "phi_hat: need n, m >= 1");
    detail::require(coprime(word.n(), word.m()), "phi_hat: n and m must be coprime");
    detail::require(nm_classify(word) == NmClass::Dyck, "phi_hat: word must be Dyck");
    auto blocks = nm_blocks(word);
    detail::require(peak_index >= 1 && peak_index <= blocks.size(),
                    "phi_hat: peak index out of range");

    // Split after block peak_index; choosing the last peak is the identity.
    std::size_t offset = 0;
    for (std::size_t t = 0; t < peak_index; ++t)
        offset += blocks[t].up_run + blocks[t].down_run;
    NMWord image = offset == word.size() ? word : detail::rotate_nm(word, offset);
    detail::check(!image.empty() && image.steps().front() == NmStep::Up &&
                      image.steps().back() == NmStep::Down,
                  "phi_hat: image must start with U and end with D");
    return image;
}

struct PhiHatInverseResult {
    NMWord word;
    std::size_t peak_index = 0;
};

// Recovers the Dyck word and the 1-based peak index whose rotation produced
// the given word (which must start with U and end with D).
inline PhiHatInverseResult phi_hat_inverse(const NMWord& word) {
    detail::require(word.n() >= 1 && word.m() >= 1, "phi_hat_inverse: need n, m >= 1");
    detail::require(coprime(word.n(), word.m()),
                    "phi_hat_inverse: n and m must be coprime");
    auto blocks = nm_blocks(word);
    const std::size_t j = blocks.size();

    const std::size_t v = detail::excess_argmax(word);
    if (v == 0) {
        detail::check(nm_classify(word) == NmClass::Dyck,
                      "phi_hat_inverse: max at origin must mean Dyck");
        return {word, j};
    }
    // The maximum sits on a block boundary: count blocks left of it.
    std::size_t pos = 0;
    std::size_t crossed = 0;
    for (const Block& b : blocks) {
        pos += b.up_run + b.down_run;
        ++crossed;
        if (pos == v) break;
    }
    detail::check(pos == v, "phi_hat_inverse: excess maximum not on a block boundary");
    NMWord dyck = detail::rotate_nm(word, v);
    detail::check(nm_classify(dyck) == NmClass::Dyck, "phi_hat_inverse: rotation not Dyck");
    return {std::move(dyck), j - crossed};
}

// Removes the opening up step of an (n, kn+1) Dyck word, yielding an (n, kn)
// Dyck word with the same peak count.
inline NMWord strip_first_up(const NMWord& word) {
    const int n = word.n(), m = word.m();
    detail::require(n >= 1, "strip_first_up: need n >= 1");
    detail::require(m >= n + 1 && (m - 1) % n == 0, "strip_first_up: need m = k*n + 1");
    detail::require(nm_classify(word) == NmClass::Dyck, "strip_first_up: word must be Dyck");
    detail::check(word.steps().front() == NmStep::Up, "strip_first_up: Dyck word must start up");
    NMWord image(std::vector<NmStep>(word.steps().begin() + 1, word.steps().end()));
    detail::check(nm_classify(image) == NmClass::Dyck, "strip_first_up: image must stay Dyck");
    return image;
}

inline NMWord prepend_up(const NMWord& word) {
    const int n = word.n(), m = word.m();
    detail::require(n >= 1, "prepend_up: need n >= 1");
    detail::require(m >= n && m % n == 0, "prepend_up: need m = k*n");
    detail::require(nm_classify(word) == NmClass::Dyck, "prepend_up: word must be Dyck");
    std::vector<NmStep> steps;
    steps.reserve(word.size() + 1);
    steps.push_back(NmStep::Up);
    steps.insert(steps.end(), word.steps().begin(), word.steps().end());
    NMWord image(std::move(steps));
    detail::check(nm_classify(image) == NmClass::Dyck, "prepend_up: image must stay Dyck");
    return image;
}

// Reverse the word and swap the letters: an (n, kn) Dyck word becomes a
// strict path of order (k+1)n with rise k and no horizontals, peaks aligned.
inline PathWord dyck_to_kary(const NMWord& word) {
    const int n = word.n(), m = word.m();
    detail::require(n >= 1, "dyck_to_kary: need n >= 1");
    detail::require(m >= n && m % n == 0, "dyck_to_kary: need m = k*n");
    detail::require(nm_classify(word) == NmClass::Dyck, "dyck_to_kary: word must be Dyck");
    const int k = m / n;
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (auto it = word.steps().rbegin(); it != word.steps().rend(); ++it)
        steps.push_back(*it == NmStep::Up ? Step::down() : Step::up(k));
    PathWord image(PathProfile::ka(k, std::nullopt), std::move(steps));
    detail::check(classify(image) == PathClass::Strict, "dyck_to_kary: image must be strict");
    return image;
}

inline NMWord kary_to_dyck(const PathWord& word) {
    detail::require(word.profile().single_rise() && !word.profile().allows_horizontal(),
                    "kary_to_dyck: profile must be a bare single rise");
    detail::require(classify(word) == PathClass::Strict, "kary_to_dyck: word must be strict");
    detail::require(!word.empty(), "kary_to_dyck: word must be nonempty");
    std::vector<NmStep> steps;
    steps.reserve(word.size());
    for (auto it = word.steps().rbegin(); it != word.steps().rend(); ++it)
        steps.push_back(it->kind == StepKind::Up ? NmStep::Down : NmStep::Up);
    NMWord image(std::move(steps));
    detail::check(image.m() == word.profile().rises.front() * image.n(),
                  "kary_to_dyck: image shape");
    detail::check(nm_classify(image) == NmClass::Dyck, "kary_to_dyck: image must be Dyck");
    return image;
}

}  // namespace latpath
