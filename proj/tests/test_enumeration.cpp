#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "latpath/enumerate.hpp"
#include "oracles.hpp"

using namespace latpath;

namespace {

std::vector<std::string> texts(const std::vector<PathWord>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(to_string(w));
    return out;
}

std::vector<std::string> texts(const std::vector<NMWord>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(to_string(w));
    return out;
}

bool collation_sorted(const std::vector<PathWord>& words) {
    for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& a = words[i - 1].steps();
        const auto& b = words[i].steps();
        bool less = std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(),
            [](const Step& s, const Step& t) { return collation_less(s, t); });
        if (!less) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("strict words in collation order") {
    auto got = texts(generate_ka(FamilySpec::ka(Family::KaStrict, PathProfile::ka(1, 1), 3)));
    CHECK(got == std::vector<std::string>{"UDH", "UHD", "HUD", "HHH"});

    auto strict214 = texts(generate_ka(FamilySpec::ka(Family::KaStrict, PathProfile::ka(2, 1), 4)));
    CHECK(strict214 == std::vector<std::string>{"UDDH", "UDHD", "UHDD", "HUDD", "HHHH"});

    auto empty = generate_ka(FamilySpec::ka(Family::KaStrict, PathProfile::ka(1, std::nullopt), 0));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
}

TEST_CASE("generated families match a filtered raw enumeration") {
    for (auto [k, a] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
        auto profile = PathProfile::ka(k, a);
        for (int n = 0; n <= 6; ++n) {
            std::set<std::string> strict, super, super_up, with_up;
            for (const auto& text : oracle::all_ka_texts(a, n)) {
                char c = oracle::classify_text(text, k);
                if (c == 'I') continue;
                super.insert(text);
                if (c == 'S') strict.insert(text);
                if (oracle::first_non_h_is_up(text)) super_up.insert(text);
                if (text.find('U') != std::string::npos) with_up.insert(text);
            }
            auto check_family = [&](Family f, const std::set<std::string>& want) {
                auto spec = FamilySpec::ka(f, profile, n);
                auto got = texts(generate_ka(spec));
                CHECK(std::set<std::string>(got.begin(), got.end()) == want);
                CHECK(count_family(spec) == BigCount(want.size()));
            };
            check_family(Family::KaStrict, strict);
            check_family(Family::KaSuper, super);
            check_family(Family::KaSuperPositiveUp, super_up);
            check_family(Family::KaSuperWithUp, with_up);
        }
    }
}

TEST_CASE("counting without horizontals and with unbounded width") {
    // Motzkin numbers
    std::vector<long long> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
    for (int n = 0; n < static_cast<int>(motzkin.size()); ++n)
        CHECK(count_family(FamilySpec::ka(Family::KaStrict, PathProfile::ka(1, 1), n)) ==
              BigCount(motzkin[n]));

    // central trinomial coefficients
    std::vector<long long> trinomial{1, 1, 3, 7, 19, 51, 141, 393, 1107};
    for (int n = 0; n < static_cast<int>(trinomial.size()); ++n)
        CHECK(count_family(FamilySpec::ka(Family::KaSuper, PathProfile::ka(1, 1), n)) ==
              BigCount(trinomial[n]));

    CHECK(count_family(FamilySpec::ka(Family::KaSuper, PathProfile::ka(2, 1), 4)) == BigCount(13));
    CHECK(count_family(FamilySpec::ka(Family::KaSuperPositiveUp, PathProfile::ka(1, 1), 4)) ==
          BigCount(9));

    // without horizontals only widths divisible by k+1 are inhabited
    auto bare = PathProfile::ka(2, std::nullopt);
    CHECK(count_family(FamilySpec::ka(Family::KaSuper, bare, 4)) == BigCount(0));
    CHECK(count_family(FamilySpec::ka(Family::KaSuper, bare, 6)) ==
          oracle::super_count_multinomial(2, 0, 6));
}

TEST_CASE("super counts match the multinomial sum") {
    for (int k = 1; k <= 3; ++k) {
        for (int a : {1, 2}) {
            for (int n = 0; n <= 10; ++n) {
                CHECK(count_family(FamilySpec::ka(Family::KaSuper, PathProfile::ka(k, a), n)) ==
                      oracle::super_count_multinomial(k, a, n));
            }
        }
        for (int n = 0; n <= 10; ++n)
            CHECK(count_family(FamilySpec::ka(Family::KaSuper, PathProfile::ka(k, std::nullopt), n)) ==
                  oracle::super_count_multinomial(k, 0, n));
    }
}

TEST_CASE("rational families") {
    auto dyck23 = texts(generate_nm(FamilySpec::nm(Family::NmDyck, 2, 3)));
    CHECK(dyck23 == std::vector<std::string>{"UUUDD", "UUDUD"});

    CHECK(count_family(FamilySpec::nm(Family::NmFree, 2, 3)) == oracle::pascal_binomial(5, 2));

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; n + m <= 9; ++m) {
            std::set<std::string> dyck, free_ud;
            for (const auto& text : oracle::all_nm_texts(n, m)) {
                if (oracle::nm_is_dyck_float(text, n, m)) dyck.insert(text);
                if (text.front() == 'U' && text.back() == 'D') free_ud.insert(text);
            }
            auto check_family = [&](Family f, const std::set<std::string>& want) {
                auto spec = FamilySpec::nm(f, n, m);
                auto got = texts(generate_nm(spec));
                CHECK(std::set<std::string>(got.begin(), got.end()) == want);
                CHECK(count_family(spec) == BigCount(want.size()));
            };
            check_family(Family::NmDyck, dyck);
            check_family(Family::NmFreeUD, free_ud);
            CHECK(count_family(FamilySpec::nm(Family::NmFree, n, m)) ==
                  oracle::pascal_binomial(n + m, n));
        }
    }
}

TEST_CASE("peak filters") {
    auto spec = FamilySpec::nm(Family::NmDyck, 3, 5);
    auto all = generate_nm(spec);
    for (int j = 0; j <= 3; ++j) {
        auto filtered = spec;
        filtered.peak_filter = j;
        auto got = generate_nm(filtered);
        std::size_t manual = 0;
        for (const auto& w : all)
            if (nm_peak_count(w) == j) ++manual;
        CHECK(got.size() == manual);
        CHECK(count_family(filtered) == BigCount(manual));
        for (const auto& w : got) CHECK(nm_peak_count(w) == j);
    }

    auto ka = FamilySpec::ka(Family::KaStrict, PathProfile::ka(2, 1), 6);
    ka.peak_filter = 1;
    for (const auto& w : generate_ka(ka)) CHECK(peak_count(w) == 1);
}

TEST_CASE("emission is sorted and duplicate free") {
    auto words = generate_ka(FamilySpec::ka(Family::KaSuper, PathProfile::ka(2, 2), 7));
    CHECK(collation_sorted(words));

    auto t = texts(generate_nm(FamilySpec::nm(Family::NmFree, 3, 4)));
    CHECK(std::set<std::string>(t.begin(), t.end()).size() == t.size());
    CHECK(t.front() == "UUUUDDD");  // U precedes D in the collation
    CHECK(t.back() == "DDDUUUU");
}

TEST_CASE("hump and peak totals over the strict family") {
    CHECK(total_humps(PathProfile::ka(2, 1), 4) == BigCount(4));
    CHECK(total_peaks(PathProfile::ka(2, 1), 4) == BigCount(3));
    CHECK(total_humps(PathProfile::ka(1, 1), 0) == BigCount(0));

    BigCount by_hand{0};
    for (const auto& text : oracle::all_ka_texts(1, 5))
        if (oracle::classify_text(text, 1) == 'S') by_hand += oracle::humps_in_text(text);
    CHECK(total_humps(PathProfile::ka(1, 1), 5) == by_hand);
}

TEST_CASE("delta divides") {
    CHECK(delta_divides(1, 7) == 1);
    CHECK(delta_divides(2, 3) == 0);
    CHECK(delta_divides(2, 4) == 1);
    CHECK(delta_divides(std::nullopt, 0) == 1);
    CHECK(delta_divides(std::nullopt, 5) == 0);
}

TEST_CASE("family spec rejects mismatched shapes") {
    CHECK_THROWS_AS(FamilySpec::ka(Family::NmDyck, PathProfile::ka(1, 1), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::nm(Family::KaStrict, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::ka(Family::KaStrict, PathProfile::ka(1, 1), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::nm(Family::NmDyck, -1, 2), std::invalid_argument);
}
