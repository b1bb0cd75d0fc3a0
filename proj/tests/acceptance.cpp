// Acceptance harness: one line per criterion, exit 0 only if all pass.
// argv[1] is the path to the command line binary (used by the determinism
// criterion).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <sys/wait.h>

#include "latpath/bijections_nm.hpp"
#include "latpath/enumerate.hpp"
#include "latpath/formulas.hpp"
#include "latpath/verify.hpp"

using namespace latpath;

namespace {

const ReportSink quiet = [](const CountReport&) {};

bool run_all(const std::string& id, const VerifyRanges& ranges = {}) {
    return run_identity(id, ranges, quiet);
}

bool capture(const std::string& command, std::string& out, int& exit_code) {
    out.clear();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return false;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (!WIFEXITED(status)) return false;
    exit_code = WEXITSTATUS(status);
    return true;
}

BigCount super_count(int k, std::optional<int> a, long long n) {
    return count_family(FamilySpec::ka(Family::KaSuper, PathProfile::ka(k, a), n));
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    int failures = 0;

    auto criterion = [&](int num, const char* label,
                         const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    };

    criterion(1, "hump identity over the default grid, under 60 s", [&](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = run_all("eq4");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && total_humps(PathProfile::ka(2, 1), 4) == BigCount(4) &&
             super_count(2, 1, 4) == BigCount(13) && delta_divides(1, 4) == 1;
        if (secs >= 60.0) {
            ok = false;
            detail = "took " + std::to_string(secs) + " s";
        }
        return ok;
    });

    criterion(2, "peak identity over the default grid", [&](std::string&) {
        return run_all("eq5") && total_peaks(PathProfile::ka(2, 1), 4) == BigCount(3) &&
               super_count(2, 1, 3) == BigCount(4);
    });

    criterion(3, "k = 1 specializations up to n = 12", [&](std::string&) {
        return run_all("eq2") && run_all("eq3") &&
               BigCount(2) * total_humps(PathProfile::ka(1, 1), 3) == super_count(1, 1, 3) - 1;
    });

    criterion(4, "psi classes partition into blocks of size k + 1", [&](std::string&) {
        return run_all("psi-partition") && run_all("eq7");
    });

    criterion(5, "phi round trips, including a two-rise step set", [&](std::string&) {
        return run_all("phi-roundtrip") && run_all("sa-corollary");
    });

    criterion(6, "hump shrink is a bijection", [&](std::string&) {
        return run_all("shrink-bijection");
    });

    criterion(7, "cyclic classes and the rational count", [&](std::string& detail) {
        bool ok = run_all("lemma2-class") && run_all("eq8");
        ok = ok && d_nm(2, 3) == BigCount(2) &&
             generate_nm(FamilySpec::nm(Family::NmDyck, 2, 3)).size() == 2;
        auto [rep, offset] = dyck_representative(parse_nm_word("DUUDU"));
        if (to_string(rep) != "UUDUD") {
            ok = false;
            detail = "representative of DUUDU came out as " + to_string(rep);
        }
        return ok;
    });

    criterion(8, "peak refinements and marked rotation round trips", [&](std::string&) {
        return run_all("eq9") && run_all("eq10") && run_all("eq11") &&
               run_all("phihat-roundtrip");
    });

    criterion(9, "dyck to k-ary chain and its counts", [&](std::string&) {
        bool ok = run_all("lemma4-chain") && run_all("eq12") && run_all("eq13");
        ok = ok && kary_count(2, 2) == BigCount(3) && kary_peaks_count(2, 2, 1) == BigCount(1) &&
             kary_peaks_count(2, 2, 2) == BigCount(2) && kary_count(1, 3) == BigCount(5) &&
             kary_count(1, 3) == catalan(3);
        for (int n = 1; ok && n <= 10; ++n)
            for (int j = 1; ok && j <= n; ++j)
                ok = kary_peaks_count(1, n, j) == narayana(n, j);
        return ok;
    });

    criterion(10, "verify output is byte for byte deterministic", [&](std::string& detail) {
        if (cli.empty()) {
            detail = "no binary path given";
            return false;
        }
        std::string command = "\"" + cli + "\" verify eq4 --no-timing";
        std::string first, second;
        int code1 = -1, code2 = -1;
        if (!capture(command, first, code1) || !capture(command, second, code2)) {
            detail = "could not run " + command;
            return false;
        }
        if (code1 != 0 || code2 != 0) {
            detail = "exit codes " + std::to_string(code1) + ", " + std::to_string(code2);
            return false;
        }
        if (first.empty() || first != second) {
            detail = "outputs differ";
            return false;
        }
        return true;
    });

    return failures == 0 ? 0 : 1;
}
