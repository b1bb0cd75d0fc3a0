#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigcount.hpp"
#include "bijections_ka.hpp"
#include "bijections_nm.hpp"
#include "enumerate.hpp"
#include "formulas.hpp"

namespace latpath {

// One verified equality: lhs counted one way, rhs another.
struct CountReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    BigCount lhs{0};
    BigCount rhs{0};
    bool pass = false;
    double elapsed_ms = 0.0;
};

using ReportSink = std::function<void(const CountReport&)>;

// Optional overrides for an identity's default parameter ranges.
struct VerifyRanges {
    std::optional<std::vector<int>> k, n, m, j;
    std::optional<std::vector<std::optional<int>>> a;  // nullopt entry = no horizontals
    std::optional<int> max_sum;
};

inline std::string format_report_json(const CountReport& r, bool with_timing) {
    nlohmann::ordered_json out;
    out["id"] = r.id;
    nlohmann::ordered_json params(nlohmann::ordered_json::value_t::object);
    for (const auto& [key, val] : r.params) {
        const bool numeric = !val.empty() &&
                             val.find_first_not_of("0123456789-") == std::string::npos;
        if (numeric) params[key] = std::stoll(val);
        else params[key] = val;
    }
    out["params"] = std::move(params);
    out["lhs"] = to_decimal(r.lhs);
    out["rhs"] = to_decimal(r.rhs);
    out["pass"] = r.pass;
    if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
    return out.dump();
}

inline std::string format_summary_json(long long total, long long passed, bool with_timing,
                                       double total_ms) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json s;
    s["total"] = total;
    s["passed"] = passed;
    s["failed"] = total - passed;
    if (with_timing) s["elapsed_ms"] = total_ms;
    out["summary"] = std::move(s);
    return out.dump();
}

inline std::string csv_header(bool with_timing) {
    return with_timing ? "id,params,lhs,rhs,pass,elapsed_ms" : "id,params,lhs,rhs,pass";
}

inline std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

inline std::string format_report_csv(const CountReport& r, bool with_timing) {
    std::string params;
    for (const auto& [key, val] : r.params) {
        if (!params.empty()) params += ' ';
        params += key + "=" + val;
    }
    std::string line = r.id + "," + csv_field(params) + "," + to_decimal(r.lhs) + "," +
                       to_decimal(r.rhs) + "," + (r.pass ? "true" : "false");
    if (with_timing) line += "," + std::to_string(r.elapsed_ms);
    return line;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline std::string opt_str(const std::optional<int>& a) {
    return a ? std::to_string(*a) : "inf";
}

inline std::vector<int> seq(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

struct KaBatch {
    std::vector<int> ks;
    std::vector<std::optional<int>> as;
    std::vector<int> ns;
};

// Default coverage pairs a finite sweep with a no-horizontal sweep; explicit
// range flags collapse it to a single batch.
inline std::vector<KaBatch> ka_batches(const VerifyRanges& r, int default_n_lo,
                                       int default_n_hi) {
    if (!r.k && !r.a && !r.n)
        return {{seq(1, 3), {1, 2}, seq(default_n_lo, default_n_hi)},
                {seq(1, 2), {std::nullopt}, seq(default_n_lo, default_n_hi + 2)}};
    return {{r.k.value_or(seq(1, 3)),
             r.a.value_or(std::vector<std::optional<int>>{1, 2}),
             r.n.value_or(seq(default_n_lo, default_n_hi))}};
}

inline void for_each_coprime_pair(int max_sum, const std::function<void(int, int)>& f) {
    for (int s = 2; s <= max_sum; ++s)
        for (int n = 1; n < s; ++n)
            if (std::gcd(n, s - n) == 1) f(n, s - n);
}

inline bool emit(const ReportSink& sink, std::string id,
                 std::vector<std::pair<std::string, std::string>> params, BigCount lhs,
                 BigCount rhs, bool extra_ok, Clock::time_point t0) {
    CountReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.pass = extra_ok && lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.elapsed_ms = ms_since(t0);
    bool pass = r.pass;
    sink(r);
    return pass;
}

// eq2 and eq5 relate peak totals to super-path counts; eq3 and eq4 do the
// same for hump totals.
inline bool run_hump_peak_identity(const std::string& id, const VerifyRanges& r,
                                   const ReportSink& sink) {
    const bool peaks = (id == "eq2" || id == "eq5");
    std::vector<KaBatch> batches;
    if (id == "eq2") batches = {{{1}, {std::nullopt}, r.n.value_or(seq(1, 12))}};
    else if (id == "eq3") batches = {{{1}, {1}, r.n.value_or(seq(0, 12))}};
    else batches = ka_batches(r, peaks ? 1 : 0, 10);

    bool all = true;
    for (const KaBatch& batch : batches)
        for (int k : batch.ks)
            for (const auto& a : batch.as)
                for (int n : batch.ns) {
                    auto t0 = Clock::now();
                    PathProfile prof = PathProfile::ka(k, a);
                    BigCount lhs =
                        BigCount(k + 1) * (peaks ? total_peaks(prof, n) : total_humps(prof, n));
                    BigCount rhs = count_family(FamilySpec::ka(Family::KaSuper, prof, n));
                    if (peaks) {
                        if (a && n - *a >= 0)
                            rhs -= count_family(FamilySpec::ka(Family::KaSuper, prof, n - *a));
                    } else {
                        rhs -= delta_divides(a, n);
                    }
                    all &= emit(sink, id,
                                {{"k", std::to_string(k)}, {"a", opt_str(a)},
                                 {"n", std::to_string(n)}},
                                std::move(lhs), std::move(rhs), true, t0);
                }
    return all;
}

inline bool run_eq7(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for (const KaBatch& batch : ka_batches(r, 0, 10))
        for (int k : batch.ks)
            for (const auto& a : batch.as)
                for (int n : batch.ns) {
                    auto t0 = Clock::now();
                    PathProfile prof = PathProfile::ka(k, a);
                    BigCount lhs =
                        BigCount(k + 1) *
                        count_family(FamilySpec::ka(Family::KaSuperPositiveUp, prof, n));
                    BigCount rhs = count_family(FamilySpec::ka(Family::KaSuper, prof, n)) -
                                   delta_divides(a, n);
                    all &= emit(sink, "eq7",
                                {{"k", std::to_string(k)}, {"a", opt_str(a)},
                                 {"n", std::to_string(n)}},
                                std::move(lhs), std::move(rhs), true, t0);
                }
    return all;
}

inline bool run_eq8(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for_each_coprime_pair(r.max_sum.value_or(14), [&](int n, int m) {
        auto t0 = Clock::now();
        BigCount lhs(generate_nm(FamilySpec::nm(Family::NmDyck, n, m)).size());
        all &= emit(sink, "eq8", {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                    std::move(lhs), d_nm(n, m), true, t0);
    });
    return all;
}

// Peak-count distributions of grid families against the closed forms.
inline bool run_nm_peak_distribution(const std::string& id, const VerifyRanges& r,
                                     const ReportSink& sink) {
    bool all = true;
    for_each_coprime_pair(r.max_sum.value_or(12), [&](int n, int m) {
        Family fam = id == "eq9" ? Family::NmFree
                     : id == "eq10" ? Family::NmFreeUD
                                    : Family::NmDyck;
        std::map<std::size_t, BigCount> hist;
        for (const NMWord& w : generate_nm(FamilySpec::nm(fam, n, m)))
            hist[nm_peak_count(w)] += 1;
        const int j_lo = id == "eq9" ? 0 : 1;
        for (int j = j_lo; j <= std::min(n, m); ++j) {
            auto t0 = Clock::now();
            BigCount brute = hist.count(j) ? hist[j] : BigCount(0);
            BigCount lhs, rhs;
            if (id == "eq9") {
                lhs = brute;
                rhs = f_nm_j(n, m, j);
            } else if (id == "eq10") {
                lhs = brute;
                rhs = f_ud_nm_j(n, m, j);
            } else {  // eq11: labeled count = j * rational Narayana
                lhs = BigCount(j) * brute;
                rhs = BigCount(j) * d_nm_j(n, m, j);
            }
            all &= emit(sink, id,
                        {{"n", std::to_string(n)}, {"m", std::to_string(m)},
                         {"j", std::to_string(j)}},
                        std::move(lhs), std::move(rhs), true, t0);
        }
    });
    return all;
}

inline bool run_kary_counts(const std::string& id, const VerifyRanges& r,
                            const ReportSink& sink) {
    bool all = true;
    for (int k : r.k.value_or(seq(1, 3)))
        for (int n : r.n.value_or(seq(1, 4))) {
            PathProfile prof = PathProfile::ka(k, std::nullopt);
            auto words = generate_ka(FamilySpec::ka(Family::KaStrict, prof, (k + 1) * n));
            if (id == "eq12") {
                auto t0 = Clock::now();
                all &= emit(sink, "eq12",
                            {{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                            BigCount(words.size()), kary_count(k, n), true, t0);
                continue;
            }
            std::map<std::size_t, BigCount> hist;
            for (const PathWord& w : words) hist[peak_count(w)] += 1;
            for (int j = 1; j <= n; ++j) {
                auto t0 = Clock::now();
                BigCount brute = hist.count(j) ? hist[j] : BigCount(0);
                all &= emit(sink, "eq13",
                            {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                             {"j", std::to_string(j)}},
                            std::move(brute), kary_peaks_count(k, n, j), true, t0);
            }
        }
    return all;
}

inline bool run_lemma2_class(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for_each_coprime_pair(r.max_sum.value_or(12), [&](int n, int m) {
        auto t0 = Clock::now();
        BigCount good{0};
        for (const NMWord& w : generate_nm(FamilySpec::nm(Family::NmFree, n, m))) {
            CyclicClass cls = cyclic_class(w);
            if (cls.members.size() != static_cast<std::size_t>(n + m)) continue;
            int dyck_members = 0;
            NMWord dyck_member;
            for (const NMWord& member : cls.members)
                if (nm_classify(member) == NmClass::Dyck) {
                    ++dyck_members;
                    dyck_member = member;
                }
            if (dyck_members != 1) continue;
            if (dyck_representative(w).first != dyck_member) continue;
            good += 1;
        }
        BigCount rhs = count_family(FamilySpec::nm(Family::NmFree, n, m));
        all &= emit(sink, "lemma2-class", {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                    std::move(good), std::move(rhs), true, t0);
    });
    return all;
}

// Every (strict word, hump) pair maps to a distinct super word starting
// upward, exhausting that family; the inverse restores both coordinates.
inline bool run_phi_roundtrip(const std::string& id, const PathProfile& prof,
                              std::vector<std::pair<std::string, std::string>> params, int n,
                              const ReportSink& sink) {
    auto t0 = Clock::now();
    bool ok = true;
    std::set<std::string> expected;
    for (const PathWord& w : generate_ka(FamilySpec::ka(Family::KaSuperPositiveUp, prof, n)))
        expected.insert(to_string(w));
    std::set<std::string> images;
    BigCount pairs{0};
    for (const PathWord& w : generate_ka(FamilySpec::ka(Family::KaStrict, prof, n))) {
        const std::size_t hump_total = humps(w).size();
        for (std::size_t idx = 0; idx < hump_total; ++idx) {
            auto [image, trace] = phi(w, idx);
            pairs += 1;
            std::string key = to_string(image);
            ok &= expected.count(key) > 0;
            ok &= images.insert(std::move(key)).second;
            PhiInverseResult inv = phi_inverse(image);
            ok &= inv.word == w && inv.hump_index == idx;
        }
    }
    ok &= images.size() == expected.size();
    BigCount rhs = count_family(FamilySpec::ka(Family::KaSuperPositiveUp, prof, n));
    params.emplace_back("n", std::to_string(n));
    return emit(sink, id, std::move(params), std::move(pairs), std::move(rhs), ok, t0);
}

inline bool run_phi_roundtrips(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    KaBatch batch{r.k.value_or(seq(1, 3)),
                  r.a.value_or(std::vector<std::optional<int>>{1, 2}),
                  r.n.value_or(seq(0, 8))};
    for (int k : batch.ks)
        for (const auto& a : batch.as)
            for (int n : batch.ns)
                all &= run_phi_roundtrip("phi-roundtrip", PathProfile::ka(k, a),
                                         {{"k", std::to_string(k)}, {"a", opt_str(a)}}, n, sink);
    return all;
}

// Same bijection over the two-rise alphabet {1,2}; pairs count equals the
// hump total, which is the corollary being exercised.
inline bool run_sa_corollary(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for (const auto& a : r.a.value_or(std::vector<std::optional<int>>{1}))
        for (int n : r.n.value_or(seq(0, 7)))
            all &= run_phi_roundtrip("sa-corollary", PathProfile({1, 2}, a),
                                     {{"rises", "1,2"}, {"a", opt_str(a)}}, n, sink);
    return all;
}

inline bool run_psi_partition(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    KaBatch batch{r.k.value_or(seq(1, 3)),
                  r.a.value_or(std::vector<std::optional<int>>{1, 2}),
                  r.n.value_or(seq(0, 8))};
    for (int k : batch.ks)
        for (const auto& a : batch.as)
            for (int n : batch.ns) {
                auto t0 = Clock::now();
                PathProfile prof = PathProfile::ka(k, a);
                bool ok = true;
                std::set<std::string> expected;
                for (const PathWord& w :
                     generate_ka(FamilySpec::ka(Family::KaSuperWithUp, prof, n)))
                    expected.insert(to_string(w));
                std::set<std::string> seen;
                for (const PathWord& p :
                     generate_ka(FamilySpec::ka(Family::KaSuperPositiveUp, prof, n))) {
                    std::vector<PathWord> cls = psi_expand(p);
                    ok &= cls.size() == static_cast<std::size_t>(k) + 1;
                    ok &= cls.front() == p;
                    for (const PathWord& q : cls) {
                        std::string key = to_string(q);
                        ok &= expected.count(key) > 0;
                        ok &= seen.insert(std::move(key)).second;
                        ok &= psi_contract(q) == p;
                    }
                }
                BigCount rhs = count_family(FamilySpec::ka(Family::KaSuperWithUp, prof, n));
                all &= emit(sink, "psi-partition",
                            {{"k", std::to_string(k)}, {"a", opt_str(a)},
                             {"n", std::to_string(n)}},
                            BigCount(seen.size()), std::move(rhs), ok, t0);
            }
    return all;
}

inline bool run_shrink_bijection(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    KaBatch batch{r.k.value_or(seq(1, 3)),
                  r.a.value_or(std::vector<std::optional<int>>{1, 2}),
                  r.n.value_or(seq(0, 8))};
    for (int k : batch.ks)
        for (const auto& a : batch.as) {
            if (!a) continue;  // shrinking needs a horizontal step to remove
            for (int n : batch.ns) {
                auto t0 = Clock::now();
                PathProfile prof = PathProfile::ka(k, a);
                bool ok = true;
                std::set<std::string> expected;
                if (n - *a >= 0)
                    for (const PathWord& w : generate_ka(
                             FamilySpec::ka(Family::KaSuperPositiveUp, prof, n - *a)))
                        expected.insert(to_string(w));
                std::set<std::string> images;
                for (const PathWord& w :
                     generate_ka(FamilySpec::ka(Family::KaSuperPositiveUp, prof, n))) {
                    if (detail::designated_hump_of(w).horizontal_count == 0) continue;
                    PathWord image = hump_shrink(w);
                    std::string key = to_string(image);
                    ok &= expected.count(key) > 0;
                    ok &= images.insert(std::move(key)).second;
                    ok &= hump_grow(image) == w;
                }
                ok &= images.size() == expected.size();
                BigCount rhs = n - *a >= 0
                                   ? count_family(FamilySpec::ka(Family::KaSuperPositiveUp,
                                                                 prof, n - *a))
                                   : BigCount(0);
                all &= emit(sink, "shrink-bijection",
                            {{"k", std::to_string(k)}, {"a", opt_str(a)},
                             {"n", std::to_string(n)}},
                            BigCount(images.size()), std::move(rhs), ok, t0);
            }
        }
    return all;
}

inline bool run_phihat_roundtrip(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for_each_coprime_pair(r.max_sum.value_or(12), [&](int n, int m) {
        auto t0 = Clock::now();
        bool ok = true;
        std::set<std::string> expected;
        for (const NMWord& w : generate_nm(FamilySpec::nm(Family::NmFreeUD, n, m)))
            expected.insert(to_string(w));
        std::set<std::string> images;
        for (const NMWord& d : generate_nm(FamilySpec::nm(Family::NmDyck, n, m))) {
            const std::size_t j = nm_peak_count(d);
            if (j == 0) continue;  // no peaks means no image slots
            ok &= nm_blocks(d).size() == j;
            for (std::size_t i = 1; i <= j; ++i) {
                NMWord image = phi_hat(d, i);
                ok &= nm_peak_count(image) == j;
                std::string key = to_string(image);
                ok &= expected.count(key) > 0;
                ok &= images.insert(std::move(key)).second;
                PhiHatInverseResult inv = phi_hat_inverse(image);
                ok &= inv.word == d && inv.peak_index == i;
            }
        }
        ok &= images.size() == expected.size();
        BigCount rhs = count_family(FamilySpec::nm(Family::NmFreeUD, n, m));
        all &= emit(sink, "phihat-roundtrip",
                    {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                    BigCount(images.size()), std::move(rhs), ok, t0);
    });
    return all;
}

inline bool run_lemma4_chain(const VerifyRanges& r, const ReportSink& sink) {
    bool all = true;
    for (int k : r.k.value_or(seq(1, 3)))
        for (int n : r.n.value_or(seq(1, 4))) {
            auto t0 = Clock::now();
            bool ok = true;
            std::set<std::string> narrow_expected;
            for (const NMWord& w : generate_nm(FamilySpec::nm(Family::NmDyck, n, k * n)))
                narrow_expected.insert(to_string(w));
            std::set<std::string> stripped;
            for (const NMWord& w : generate_nm(FamilySpec::nm(Family::NmDyck, n, k * n + 1))) {
                NMWord image = strip_first_up(w);
                ok &= nm_peak_count(image) == nm_peak_count(w);
                std::string key = to_string(image);
                ok &= narrow_expected.count(key) > 0;
                ok &= stripped.insert(std::move(key)).second;
                ok &= prepend_up(image) == w;
            }
            ok &= stripped.size() == narrow_expected.size();

            PathProfile prof = PathProfile::ka(k, std::nullopt);
            std::set<std::string> kary_expected;
            for (const PathWord& w :
                 generate_ka(FamilySpec::ka(Family::KaStrict, prof, (k + 1) * n)))
                kary_expected.insert(to_string(w));
            std::set<std::string> kary_images;
            for (const NMWord& w : generate_nm(FamilySpec::nm(Family::NmDyck, n, k * n))) {
                PathWord image = dyck_to_kary(w);
                ok &= peak_count(image) == nm_peak_count(w);
                std::string key = to_string(image);
                ok &= kary_expected.count(key) > 0;
                ok &= kary_images.insert(std::move(key)).second;
                ok &= kary_to_dyck(image) == w;
            }
            ok &= kary_images.size() == kary_expected.size();

            BigCount rhs =
                count_family(FamilySpec::ka(Family::KaStrict, prof, (k + 1) * n));
            all &= emit(sink, "lemma4-chain",
                        {{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                        BigCount(kary_images.size()), std::move(rhs), ok, t0);
        }
    return all;
}

}  // namespace detail

inline const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "eq2",          "eq3",         "eq4",
        "eq5",          "eq7",         "eq8",
        "eq9",          "eq10",        "eq11",
        "eq12",         "eq13",        "lemma2-class",
        "phi-roundtrip", "phihat-roundtrip", "psi-partition",
        "shrink-bijection", "lemma4-chain", "sa-corollary"};
    return ids;
}

inline bool known_identity(const std::string& id) {
    for (const std::string& s : identity_ids())
        if (s == id) return true;
    return false;
}

inline bool run_identity(const std::string& id, const VerifyRanges& ranges,
                         const ReportSink& sink) {
    detail::require(known_identity(id), "verify: unknown identity '" + id + "'");
    if (id == "eq2" || id == "eq3" || id == "eq4" || id == "eq5")
        return detail::run_hump_peak_identity(id, ranges, sink);
    if (id == "eq7") return detail::run_eq7(ranges, sink);
    if (id == "eq8") return detail::run_eq8(ranges, sink);
    if (id == "eq9" || id == "eq10" || id == "eq11")
        return detail::run_nm_peak_distribution(id, ranges, sink);
    if (id == "eq12" || id == "eq13") return detail::run_kary_counts(id, ranges, sink);
    if (id == "lemma2-class") return detail::run_lemma2_class(ranges, sink);
    if (id == "phi-roundtrip") return detail::run_phi_roundtrips(ranges, sink);
    if (id == "phihat-roundtrip") return detail::run_phihat_roundtrip(ranges, sink);
    if (id == "psi-partition") return detail::run_psi_partition(ranges, sink);
    if (id == "shrink-bijection") return detail::run_shrink_bijection(ranges, sink);
    if (id == "lemma4-chain") return detail::run_lemma4_chain(ranges, sink);
    return detail::run_sa_corollary(ranges, sink);
}

}  // namespace latpath
