#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpath/bijections_ka.hpp"
#include "latpath/bijections_nm.hpp"
#include "latpath/enumerate.hpp"
#include "latpath/formulas.hpp"
#include "latpath/verify.hpp"

namespace {

using latpath::BigCount;
using latpath::Family;
using latpath::FamilySpec;
using latpath::NMWord;
using latpath::PathProfile;
using latpath::PathWord;

constexpr long long kDefaultCap = 1'000'000;

// Selector or flag misuse; exits 2 rather than 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed " + what + " '" + text + "'");
    }
}

// "3", "0..10", or a comma list of those.
std::vector<int> parse_int_ranges(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (tok.empty()) throw UsageError("malformed " + what + " '" + text + "'");
        std::size_t dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(static_cast<int>(parse_ll(tok, what)));
        } else {
            long long lo = parse_ll(tok.substr(0, dots), what);
            long long hi = parse_ll(tok.substr(dots + 2), what);
            if (lo > hi) throw UsageError(what + " range '" + tok + "' is empty");
            for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
        }
    }
    if (out.empty()) throw UsageError("empty " + what);
    return out;
}

// As above, plus the token "inf" meaning horizontals disallowed.
std::vector<std::optional<int>> parse_a_ranges(const std::string& text) {
    std::vector<std::optional<int>> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (tok == "inf") {
            out.push_back(std::nullopt);
        } else {
            for (int v : parse_int_ranges(tok, "--a")) out.push_back(v);
        }
    }
    if (out.empty()) throw UsageError("empty --a");
    return out;
}

std::optional<int> parse_a_value(const std::string& text) {
    if (text == "inf") return std::nullopt;
    return static_cast<int>(parse_ll(text, "--a"));
}

long long enumeration_cap(const std::optional<long long>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("LATPATH_CAP")) return parse_ll(env, "LATPATH_CAP");
    return kDefaultCap;
}

void guard_cap(const FamilySpec& spec, long long cap) {
    FamilySpec unfiltered = spec;
    unfiltered.peak_filter.reset();
    BigCount size = latpath::count_family(unfiltered);
    if (size > BigCount(cap))
        throw UsageError("family holds " + latpath::to_decimal(size) +
                         " words, over the cap of " + std::to_string(cap) +
                         " (raise --cap or LATPATH_CAP)");
}

template <typename T>
T need(const std::optional<T>& v, const std::string& flag) {
    if (!v) throw UsageError("missing required flag " + flag);
    return *v;
}

struct ScalarArgs {
    std::optional<int> k, n, m, j;
    std::optional<std::string> a;
    std::optional<long long> cap;
    std::string word;
    std::optional<long long> hump, peak;
    bool trace = false;
    std::string format;
};

PathProfile profile_from(const ScalarArgs& args) {
    return PathProfile::ka(need(args.k, "--k"), parse_a_value(need(args.a, "--a")));
}

void check_nm_shape(const NMWord& word, const ScalarArgs& args) {
    if (args.n && word.n() != *args.n)
        throw std::invalid_argument("word has " + std::to_string(word.n()) +
                                    " down steps, --n says " + std::to_string(*args.n));
    if (args.m && word.m() != *args.m)
        throw std::invalid_argument("word has " + std::to_string(word.m()) +
                                    " up steps, --m says " + std::to_string(*args.m));
}

int run_count(const std::string& sel, const ScalarArgs& args) {
    BigCount result;
    if (sel == "dyck") {
        result = latpath::d_nm(need(args.n, "--n"), need(args.m, "--m"));
    } else if (sel == "dyck-peaks") {
        result = latpath::d_nm_j(need(args.n, "--n"), need(args.m, "--m"), need(args.j, "--j"));
    } else if (sel == "free-peaks") {
        result = latpath::f_nm_j(need(args.n, "--n"), need(args.m, "--m"), need(args.j, "--j"));
    } else if (sel == "free-ud-peaks") {
        result =
            latpath::f_ud_nm_j(need(args.n, "--n"), need(args.m, "--m"), need(args.j, "--j"));
    } else if (sel == "kary") {
        result = latpath::kary_count(need(args.k, "--k"), need(args.n, "--n"));
    } else if (sel == "kary-peaks") {
        result = latpath::kary_peaks_count(need(args.k, "--k"), need(args.n, "--n"),
                                           need(args.j, "--j"));
    } else if (sel == "narayana") {
        result = latpath::narayana(need(args.n, "--n"), need(args.j, "--j"));
    } else if (sel == "catalan") {
        result = latpath::catalan(need(args.n, "--n"));
    } else if (sel == "strict" || sel == "super" || sel == "super-up" ||
               sel == "super-with-up") {
        Family fam = sel == "strict"       ? Family::KaStrict
                     : sel == "super"      ? Family::KaSuper
                     : sel == "super-up"   ? Family::KaSuperPositiveUp
                                           : Family::KaSuperWithUp;
        FamilySpec spec =
            FamilySpec::ka(fam, profile_from(args), need(args.n, "--n"), args.j);
        if (spec.peak_filter) guard_cap(spec, enumeration_cap(args.cap));
        result = latpath::count_family(spec);
    } else if (sel == "dyck-words" || sel == "free" || sel == "free-ud") {
        Family fam = sel == "dyck-words" ? Family::NmDyck
                     : sel == "free"     ? Family::NmFree
                                         : Family::NmFreeUD;
        FamilySpec spec =
            FamilySpec::nm(fam, need(args.n, "--n"), need(args.m, "--m"), args.j);
        if (spec.peak_filter) guard_cap(spec, enumeration_cap(args.cap));
        result = latpath::count_family(spec);
    } else {
        throw UsageError("unknown count selector '" + sel + "'");
    }
    std::cout << latpath::to_decimal(result) << "\n";
    return 0;
}

int run_enumerate(const std::string& sel, const ScalarArgs& args) {
    const long long cap = enumeration_cap(args.cap);
    const bool as_json = args.format == "json";
    if (!args.format.empty() && args.format != "lines" && !as_json)
        throw UsageError("unknown enumerate format '" + args.format + "'");

    std::vector<std::string> words;
    if (sel == "ka" || sel == "ka-super" || sel == "ka-super-up" ||
        sel == "ka-super-with-up") {
        Family fam = sel == "ka"             ? Family::KaStrict
                     : sel == "ka-super"     ? Family::KaSuper
                     : sel == "ka-super-up"  ? Family::KaSuperPositiveUp
                                             : Family::KaSuperWithUp;
        FamilySpec spec =
            FamilySpec::ka(fam, profile_from(args), need(args.n, "--n"), args.j);
        guard_cap(spec, cap);
        for (const PathWord& w : latpath::generate_ka(spec)) words.push_back(to_string(w));
    } else if (sel == "dyck" || sel == "free" || sel == "free-ud") {
        Family fam = sel == "dyck"   ? Family::NmDyck
                     : sel == "free" ? Family::NmFree
                                     : Family::NmFreeUD;
        FamilySpec spec =
            FamilySpec::nm(fam, need(args.n, "--n"), need(args.m, "--m"), args.j);
        guard_cap(spec, cap);
        for (const NMWord& w : latpath::generate_nm(spec)) words.push_back(to_string(w));
    } else {
        throw UsageError("unknown enumerate selector '" + sel + "'");
    }
    if (as_json) {
        nlohmann::json out = words;
        std::cout << out.dump() << "\n";
    } else {
        for (const std::string& w : words) std::cout << w << "\n";
    }
    return 0;
}

nlohmann::ordered_json trace_json(const latpath::BijectionTrace& t) {
    nlohmann::ordered_json anchors;
    anchors["A"] = {t.a.x, t.a.y};
    anchors["B"] = {t.b.x, t.b.y};
    anchors["C"] = {t.c.x, t.c.y};
    nlohmann::ordered_json out;
    out["anchors"] = std::move(anchors);
    nlohmann::ordered_json segs = nlohmann::ordered_json::array();
    for (const latpath::SegmentRef& s : t.segments) segs.push_back({s.begin, s.end});
    out["segments"] = std::move(segs);
    return out;
}

int run_biject(const std::string& op, const ScalarArgs& args) {
    if (op == "phi" || op == "phi-inverse" || op == "psi-expand" || op == "psi-contract") {
        PathWord word = latpath::parse_word(args.word, profile_from(args));
        if (op == "phi") {
            auto [image, trace] = latpath::phi(
                word, static_cast<std::size_t>(need(args.hump, "--hump")));
            std::cout << to_string(image) << "\n";
            if (args.trace) std::cout << trace_json(trace).dump() << "\n";
        } else if (op == "phi-inverse") {
            latpath::PhiInverseResult res = latpath::phi_inverse(word);
            std::cout << to_string(res.word) << "\n";
            if (args.trace) {
                nlohmann::ordered_json j = trace_json(res.trace);
                j["hump_index"] = res.hump_index;
                std::cout << j.dump() << "\n";
            }
        } else if (op == "psi-expand") {
            for (const PathWord& w : latpath::psi_expand(word))
                std::cout << to_string(w) << "\n";
        } else {
            std::cout << to_string(latpath::psi_contract(word)) << "\n";
        }
        return 0;
    }
    if (op == "phi-hat" || op == "phi-hat-inverse" || op == "dyck-rep" || op == "strip-up" ||
        op == "to-kary") {
        NMWord word = latpath::parse_nm_word(args.word);
        check_nm_shape(word, args);
        if (op == "phi-hat") {
            NMWord image = latpath::phi_hat(
                word, static_cast<std::size_t>(need(args.peak, "--peak")));
            std::cout << to_string(image) << "\n";
        } else if (op == "phi-hat-inverse") {
            latpath::PhiHatInverseResult res = latpath::phi_hat_inverse(word);
            std::cout << to_string(res.word) << "\n";
            if (args.trace) {
                nlohmann::ordered_json j;
                j["peak_index"] = res.peak_index;
                std::cout << j.dump() << "\n";
            }
        } else if (op == "dyck-rep") {
            auto [rep, offset] = latpath::dyck_representative(word);
            std::cout << to_string(rep) << "\n";
            if (args.trace) {
                nlohmann::ordered_json j;
                j["offset"] = offset;
                std::cout << j.dump() << "\n";
            }
        } else if (op == "strip-up") {
            std::cout << to_string(latpath::strip_first_up(word)) << "\n";
        } else {
            if (args.k && static_cast<long long>(*args.k) * word.n() != word.m())
                throw std::invalid_argument("word is (" + std::to_string(word.n()) + "," +
                                            std::to_string(word.m()) + "), not k = " +
                                            std::to_string(*args.k));
            std::cout << to_string(latpath::dyck_to_kary(word)) << "\n";
        }
        return 0;
    }
    throw UsageError("unknown biject selector '" + op + "'");
}

struct VerifyArgs {
    std::string id;
    std::optional<std::string> k, a, n, m, j;
    std::optional<int> max_sum;
    std::string format = "jsonl";
    bool no_timing = false;
};

int run_verify(const VerifyArgs& args) {
    if (!latpath::known_identity(args.id))
        throw UsageError("unknown identity '" + args.id + "'");
    if (args.format != "jsonl" && args.format != "csv")
        throw UsageError("unknown verify format '" + args.format + "'");

    latpath::VerifyRanges ranges;
    if (args.k) ranges.k = parse_int_ranges(*args.k, "--k");
    if (args.a) ranges.a = parse_a_ranges(*args.a);
    if (args.n) ranges.n = parse_int_ranges(*args.n, "--n");
    if (args.m) ranges.m = parse_int_ranges(*args.m, "--m");
    if (args.j) ranges.j = parse_int_ranges(*args.j, "--j");
    ranges.max_sum = args.max_sum;

    const bool csv = args.format == "csv";
    const bool with_timing = !args.no_timing;
    if (csv) std::cout << latpath::csv_header(with_timing) << "\n";

    long long total = 0, passed = 0;
    double total_ms = 0.0;
    latpath::ReportSink sink = [&](const latpath::CountReport& r) {
        ++total;
        if (r.pass) ++passed;
        total_ms += r.elapsed_ms;
        std::cout << (csv ? latpath::format_report_csv(r, with_timing)
                          : latpath::format_report_json(r, with_timing))
                  << "\n";
    };
    bool ok = latpath::run_identity(args.id, ranges, sink);
    if (!csv)
        std::cout << latpath::format_summary_json(total, passed, with_timing, total_ms) << "\n";
    return ok ? 0 : 1;
}

struct TableArgs {
    std::string kind;
    std::optional<std::string> k, a, n, m;
    std::string format = "csv";
};

int run_table(const TableArgs& args) {
    if (args.format != "csv" && args.format != "json")
        throw UsageError("unknown table format '" + args.format + "'");
    const bool csv = args.format == "csv";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();

    auto join = [](const std::vector<BigCount>& vals) {
        std::string out;
        for (const BigCount& v : vals) {
            if (!out.empty()) out += ';';
            out += latpath::to_decimal(v);
        }
        return out;
    };

    if (args.kind == "rational-narayana") {
        std::vector<int> ns = args.n ? parse_int_ranges(*args.n, "--n")
                                     : latpath::detail::seq(1, 6);
        std::vector<int> ms = args.m ? parse_int_ranges(*args.m, "--m")
                                     : latpath::detail::seq(1, 6);
        if (csv) std::cout << "n,m,values,sum\n";
        for (int n : ns)
            for (int m : ms) {
                if (n < 1 || m < 1 || std::gcd(n, m) != 1) continue;
                std::vector<BigCount> vals;
                BigCount sum{0};
                for (int j = 1; j <= std::min(n, m); ++j) {
                    vals.push_back(latpath::d_nm_j(n, m, j));
                    sum += vals.back();
                }
                latpath::detail::check(sum == latpath::d_nm(n, m),
                                       "table: row sum must match the total");
                if (csv) {
                    std::cout << n << "," << m << "," << join(vals) << ","
                              << latpath::to_decimal(sum) << "\n";
                } else {
                    nlohmann::ordered_json row;
                    row["n"] = n;
                    row["m"] = m;
                    nlohmann::ordered_json jvals = nlohmann::ordered_json::array();
                    for (const BigCount& v : vals) jvals.push_back(latpath::to_decimal(v));
                    row["values"] = std::move(jvals);
                    row["sum"] = latpath::to_decimal(sum);
                    rows.push_back(std::move(row));
                }
            }
    } else if (args.kind == "hump-totals") {
        std::vector<int> ks = args.k ? parse_int_ranges(*args.k, "--k")
                                     : latpath::detail::seq(1, 2);
        std::vector<std::optional<int>> as =
            args.a ? parse_a_ranges(*args.a) : std::vector<std::optional<int>>{1};
        std::vector<int> ns = args.n ? parse_int_ranges(*args.n, "--n")
                                     : latpath::detail::seq(0, 8);
        if (csv) std::cout << "k,a,n,humps,peaks\n";
        for (int k : ks)
            for (const auto& a : as)
                for (int n : ns) {
                    PathProfile prof = PathProfile::ka(k, a);
                    BigCount humps = latpath::total_humps(prof, n);
                    BigCount peaks = latpath::total_peaks(prof, n);
                    if (csv) {
                        std::cout << k << "," << latpath::detail::opt_str(a) << "," << n << ","
                                  << latpath::to_decimal(humps) << ","
                                  << latpath::to_decimal(peaks) << "\n";
                    } else {
                        nlohmann::ordered_json row;
                        row["k"] = k;
                        row["a"] = a ? nlohmann::ordered_json(*a)
                                     : nlohmann::ordered_json("inf");
                        row["n"] = n;
                        row["humps"] = latpath::to_decimal(humps);
                        row["peaks"] = latpath::to_decimal(peaks);
                        rows.push_back(std::move(row));
                    }
                }
    } else if (args.kind == "kary-peaks") {
        std::vector<int> ks = args.k ? parse_int_ranges(*args.k, "--k")
                                     : latpath::detail::seq(1, 3);
        std::vector<int> ns = args.n ? parse_int_ranges(*args.n, "--n")
                                     : latpath::detail::seq(1, 5);
        if (csv) std::cout << "k,n,values,total\n";
        for (int k : ks)
            for (int n : ns) {
                if (k < 1 || n < 1) continue;
                std::vector<BigCount> vals;
                BigCount total{0};
                for (int j = 1; j <= n; ++j) {
                    vals.push_back(latpath::kary_peaks_count(k, n, j));
                    total += vals.back();
                }
                latpath::detail::check(total == latpath::kary_count(k, n),
                                       "table: row sum must match the total");
                if (csv) {
                    std::cout << k << "," << n << "," << join(vals) << ","
                              << latpath::to_decimal(total) << "\n";
                } else {
                    nlohmann::ordered_json row;
                    row["k"] = k;
                    row["n"] = n;
                    nlohmann::ordered_json jvals = nlohmann::ordered_json::array();
                    for (const BigCount& v : vals) jvals.push_back(latpath::to_decimal(v));
                    row["values"] = std::move(jvals);
                    row["total"] = latpath::to_decimal(total);
                    rows.push_back(std::move(row));
                }
            }
    } else {
        throw UsageError("unknown table kind '" + args.kind + "'");
    }
    if (!csv) std::cout << rows.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice path counting, enumeration, and bijection tool"};
    app.require_subcommand(1);

    ScalarArgs cargs, eargs, bargs;
    std::string count_sel, enum_sel, biject_op;

    CLI::App* count = app.add_subcommand("count", "print one exact count");
    count->add_option("selector", count_sel, "what to count")->required();
    count->add_option("--k", cargs.k, "rise");
    count->add_option("--a", cargs.a, "horizontal width or inf");
    count->add_option("--n", cargs.n, "order / down steps");
    count->add_option("--m", cargs.m, "up steps");
    count->add_option("--j", cargs.j, "peak count filter");
    count->add_option("--cap", cargs.cap, "word cap for filtered counts");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a family's words");
    enumerate->add_option("selector", enum_sel, "family to list")->required();
    enumerate->add_option("--k", eargs.k, "rise");
    enumerate->add_option("--a", eargs.a, "horizontal width or inf");
    enumerate->add_option("--n", eargs.n, "order / down steps");
    enumerate->add_option("--m", eargs.m, "up steps");
    enumerate->add_option("--j", eargs.j, "peak count filter");
    enumerate->add_option("--cap", eargs.cap, "word cap");
    enumerate->add_option("--format", eargs.format, "lines (default) or json");

    CLI::App* biject = app.add_subcommand("biject", "apply one bijection to a word");
    biject->add_option("selector", biject_op, "map to apply")->required();
    biject->add_option("--word", bargs.word, "input word")->required();
    biject->add_option("--k", bargs.k, "rise");
    biject->add_option("--a", bargs.a, "horizontal width or inf");
    biject->add_option("--n", bargs.n, "expected down steps");
    biject->add_option("--m", bargs.m, "expected up steps");
    biject->add_option("--hump", bargs.hump, "0-based hump index");
    biject->add_option("--peak", bargs.peak, "1-based peak index");
    biject->add_flag("--trace", bargs.trace, "print anchor/segment JSON");

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "check an identity over ranges");
    verify->add_option("id", vargs.id, "identity to check")->required();
    verify->add_option("--k", vargs.k, "k range, e.g. 1..3");
    verify->add_option("--a", vargs.a, "a range, e.g. 1..2 or inf");
    verify->add_option("--n", vargs.n, "n range");
    verify->add_option("--m", vargs.m, "m range");
    verify->add_option("--j", vargs.j, "j range");
    verify->add_option("--max-sum", vargs.max_sum, "bound on n+m for grid identities");
    verify->add_option("--format", vargs.format, "jsonl (default) or csv");
    verify->add_flag("--no-timing", vargs.no_timing, "omit elapsed_ms fields");

    TableArgs targs;
    CLI::App* table = app.add_subcommand("table", "print a count table");
    table->add_option("kind", targs.kind, "table kind")->required();
    table->add_option("--k", targs.k, "k range");
    table->add_option("--a", targs.a, "a range");
    table->add_option("--n", targs.n, "n range");
    table->add_option("--m", targs.m, "m range");
    table->add_option("--format", targs.format, "csv (default) or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(count_sel, cargs);
        if (enumerate->parsed()) return run_enumerate(enum_sel, eargs);
        if (biject->parsed()) return run_biject(biject_op, bargs);
        if (verify->parsed()) return run_verify(vargs);
        return run_table(targs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
