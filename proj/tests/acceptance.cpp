// Acceptance suite: one pass/fail line per criterion. Expects the CLI path
// and the shipped default sweep config as arguments (used by criterion 10).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "polya/interlace.hpp"
#include "polya/operators.hpp"
#include "polya/ordering.hpp"
#include "polya/pmf.hpp"
#include "polya/rational.hpp"
#include "polya/sweep.hpp"

using namespace polya;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
}

template <typename Fn>
void criterion(int idx, const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(idx, name, pass, detail, secs);
}

std::vector<double> criterion_c_values(int n, double x) {
    std::vector<double> cs;
    const double boundary = min_replacement(n, x);
    if (std::isfinite(boundary)) cs.push_back(boundary);
    for (double c : {0.0, 0.25, 1.0, 5.0}) cs.push_back(c);
    return cs;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string config = argc > 2 ? argv[2] : "";

    criterion(1, "pmf vs brute-force enumeration oracle", [](std::string& detail) {
        double max_dev = 0.0;
        for (int n = 1; n <= 10; ++n)
            for (int xi = 0; xi <= 10; ++xi) {
                const double x = xi / 10.0;
                for (double c : criterion_c_values(n, x)) {
                    const PolyaParams params = StandardParams{n, x, c}.to_polya();
                    const Pmf fast = pmf(params);
                    const Pmf slow = brute_force_pmf(params);
                    for (int k = 0; k <= n; ++k)
                        max_dev = std::max(max_dev, std::abs(fast.probs[k] - slow.probs[k]));
                }
            }
        detail = "max entrywise deviation " + fmt(max_dev);
        return max_dev <= 1e-13;
    });

    criterion(2, "partial-moment identity residual", [](std::string& detail) {
        double worst = 0.0;
        for (int n = 1; n <= 100; ++n)
            for (int xi = 1; xi <= 19; ++xi) {
                const double x = xi * 0.05;
                const double boundary = min_replacement(n, x);
                const std::vector<double> cs =
                    n == 1 ? std::vector<double>{-1.0, 0.0, 0.5, 2.0, 5.0}
                           : std::vector<double>{boundary, boundary / 2.0, 0.0, 0.5, 2.0};
                for (double c : cs)
                    for (int s = 1; s <= n; ++s)
                        worst = std::max(worst,
                                         check_kozniewska_identity(StandardParams{n, x, c}, s));
            }
        detail = "max residual " + fmt(worst);
        return worst <= 1e-12;
    });

    criterion(3, "interlacing partition, exact", [](std::string& detail) {
        long long cells = 0;
        for (int n = 3; n <= 40; ++n)
            for (long long q = 2; q <= 12; ++q)
                for (long long p = 1; p < q; ++p) {
                    if (std::gcd(p, q) != 1) continue;
                    for (int k = 1; k <= n - 2; ++k) {
                        ++cells;
                        if (!verify_partition(build_partition(n, k, Rational(p, q)))) {
                            detail = "violation at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k) + " x=" + std::to_string(p) +
                                     "/" + std::to_string(q);
                            return false;
                        }
                    }
                }
        detail = std::to_string(cells) + " cells, all exact";
        return true;
    });

    criterion(4, "logarithmic-derivative inequality strictness", [](std::string& detail) {
        double min_gap = std::numeric_limits<double>::infinity();
        long long violations = 0;
        for (int n = 2; n <= 50; ++n)
            for (int xi = 1; xi <= 19; ++xi) {
                const double x = xi * 0.05;
                const double boundary = min_replacement(n, x);
                for (double c : {boundary + 1e-6, 0.0, 0.5, 2.0})
                    for (int k = 0; k <= n - 1; ++k) {
                        const auto [lhs, rhs] = verify_claim1(n, k, x, c);
                        min_gap = std::min(min_gap, lhs - rhs);
                        if (!(lhs - rhs > 0.0)) ++violations;
                    }
            }
        detail = "min lhs-rhs " + fmt(min_gap) + ", violations " + std::to_string(violations);
        return violations == 0;
    });

    criterion(5, "stop-loss dominance in c", [](std::string& detail) {
        double worst = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= 60; ++n)
            for (int xi = 0; xi <= 10; ++xi) {
                const double x = xi / 10.0;
                const auto cs = criterion_c_values(n, x);
                for (std::size_t i = 0; i < cs.size(); ++i)
                    for (std::size_t j = i + 1; j < cs.size(); ++j)
                        worst = std::min(worst, check_convex_order(n, x, cs[i], cs[j]));
            }
        detail = "worst margin " + fmt(worst);
        return worst >= -1e-12;
    });

    criterion(6, "partial-sum monotonicity and strictness", [](std::string& detail) {
        double worst = std::numeric_limits<double>::infinity();
        long long strict_fail = 0, indeterminate = 0;
        for (int n = 1; n <= 60; ++n)
            for (int xi = 0; xi <= 10; ++xi) {
                const double x = xi / 10.0;
                std::vector<double> grid{0.0, 0.1, 0.5, 1.0, 5.0};
                const double boundary = min_replacement(n, x);
                if (std::isfinite(boundary)) {
                    grid.push_back(boundary);
                    grid.push_back(boundary / 2.0);
                }
                std::sort(grid.begin(), grid.end());
                grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
                for (int k = 0; k <= n; ++k) {
                    const bool interior = x > 0.0 && x < 1.0 && k <= n - 1 && n >= 2;
                    double prev = 0.0;
                    for (std::size_t j = 0; j < grid.size(); ++j) {
                        const double s = partial_sum(StandardParams{n, x, grid[j]}, k);
                        if (j > 0) {
                            const double d = s - prev;
                            worst = std::min(worst, d);
                            if (interior && !(d > 1e-14)) {
                                if (std::max(std::abs(s), std::abs(prev)) <
                                    kStrictResolvableScale)
                                    ++indeterminate;
                                else
                                    ++strict_fail;
                            }
                        }
                        prev = s;
                    }
                }
            }
        detail = "worst margin " + fmt(worst) + ", strict failures " +
                 std::to_string(strict_fail) + ", indeterminate (underflow) " +
                 std::to_string(indeterminate);
        return worst >= -1e-12 && strict_fail == 0;
    });

    criterion(7, "error monotonicity in c for convex functions", [](std::string& detail) {
        double worst = std::numeric_limits<double>::infinity();
        long long strict_fail = 0, dead_zone = 0;
        CSpec spec;
        spec.automatic = true;
        spec.count = 10;
        spec.max_c = 5.0;
        for (const auto& id : convex_function_ids()) {
            const TestFunction& f = require_function(id);
            for (int n = 2; n <= 30; ++n)
                for (int xi = 1; xi <= 19; ++xi) {
                    const double x = xi * 0.05;
                    const auto grid = make_c_grid(spec, n, x);
                    const auto res = check_error_monotone(f, n, x, grid);
                    worst = std::min(worst, res.margin);
                    if (res.strict_expected && !res.strict_ok) ++strict_fail;
                    if ((res.strict_expected && res.strict_unresolved) ||
                        (!res.strict_expected && res.secant_gap > kStrictGapNoise))
                        ++dead_zone;
                }
        }
        // linear functions have identically zero error
        double linear_err = 0.0;
        const TestFunction& id_fn = require_function("id");
        for (int n = 2; n <= 30; ++n)
            for (int xi = 1; xi <= 19; ++xi) {
                const double x = xi * 0.05;
                for (double c : make_c_grid(spec, n, x))
                    linear_err = std::max(linear_err, std::abs(stancu(id_fn, n, x, c).error));
            }
        detail = "worst margin " + fmt(worst) + ", strict failures " +
                 std::to_string(strict_fail) + ", indeterminate " + std::to_string(dead_zone) +
                 ", max linear error " + fmt(linear_err);
        return worst >= -1e-12 && strict_fail == 0 && linear_err <= 1e-13;
    });

    criterion(8, "R_n optimality corollary", [](std::string& detail) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& id : convex_function_ids()) {
            const TestFunction& f = require_function(id);
            for (int n = 2; n <= 30; ++n)
                for (int xi = 1; xi <= 19; ++xi) {
                    const double x = xi * 0.05;
                    worst = std::max(worst, std::abs(r_n(f, n, x).error) -
                                                std::abs(bernstein(f, n, x).error));
                }
        }
        const double spot = r_n(require_function("sq"), 2, 0.5).error;
        detail = "max |R_n err| - |B_n err| " + fmt(worst) + ", spot error " + fmt(spot);
        return worst <= 1e-12 && spot == 0.0;
    });

    criterion(9, "pmf derivative vs central finite differences", [](std::string& detail) {
        const double h = 1e-6;
        double worst = 0.0;
        for (int n = 2; n <= 30; ++n)
            for (int xi = 1; xi <= 9; ++xi) {
                const double x = xi / 10.0;
                const double boundary = min_replacement(n, x);
                for (double c : {boundary / 2.0, 0.0, 0.3, 1.0}) {
                    const auto analytic = pmf_dc(StandardParams{n, x, c});
                    const Pmf up = pmf(StandardParams{n, x, c + h}.to_polya());
                    const Pmf down = pmf(StandardParams{n, x, c - h}.to_polya());
                    for (int k = 0; k <= n; ++k)
                        worst = std::max(
                            worst,
                            std::abs(analytic[k] - (up.probs[k] - down.probs[k]) / (2.0 * h)));
                }
            }
        detail = "max |analytic - fd| " + fmt(worst);
        return worst <= 1e-5;
    });

    criterion(10, "byte-identical verify runs", [&](std::string& detail) {
        if (cli.empty() || config.empty()) {
            detail = "CLI or config path not supplied";
            return false;
        }
        const auto tmp = std::filesystem::temp_directory_path();
        const std::string out1 = (tmp / "polya_accept_1.csv").string();
        const std::string out2 = (tmp / "polya_accept_2.csv").string();
        for (const auto& [out, tag] : {std::pair{out1, "1"}, std::pair{out2, "2"}}) {
            const std::string cmd = cli + " verify " + config + " --out " + out +
                                    " > /dev/null 2>/dev/null";
            const int status = std::system(cmd.c_str());
            if (!(WIFEXITED(status) && WEXITSTATUS(status) == 0)) {
                detail = std::string("verify run ") + tag + " did not exit 0";
                return false;
            }
        }
        std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        const bool same = !s1.str().empty() && s1.str() == s2.str();
        detail = same ? std::to_string(s1.str().size()) + " bytes identical"
                      : "outputs differ";
        return same;
    });

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
