#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polya/functions.hpp"
#include "polya/interlace.hpp"
#include "polya/ordering.hpp"
#include "polya/rational.hpp"

namespace polya {

enum class CheckKind { ConvexOrder, PartialSum, ErrorMonotone, Kozniewska, Claim1, Partition };

inline const char* check_name(CheckKind k) {
    switch (k) {
        case CheckKind::ConvexOrder: return "convex-order";
        case CheckKind::PartialSum: return "partial-sum";
        case CheckKind::ErrorMonotone: return "error-monotone";
        case CheckKind::Kozniewska: return "kozniewska";
        case CheckKind::Claim1: return "claim1";
        case CheckKind::Partition: return "partition";
    }
    return "?";
}

inline CheckKind parse_check(const std::string& name) {
    for (CheckKind k : {CheckKind::ConvexOrder, CheckKind::PartialSum, CheckKind::ErrorMonotone,
                        CheckKind::Kozniewska, CheckKind::Claim1, CheckKind::Partition})
        if (name == check_name(k)) return k;
    throw config_error("unknown check '" + name + "'");
}

/// Grid abscissa: a plain double, optionally backed by an exact rational
/// (required by the partition check, whose tie rules need exact arithmetic).
struct XValue {
    double value = 0.0;
    bool exact = false;
    Rational rat;

    static XValue from_double(double v) { return XValue{v, false, Rational()}; }
    static XValue from_rational(const Rational& r) { return XValue{r.to_double(), true, r}; }
};

/// Replacement-parameter grid: explicit list, or auto:N geometric spacing on
/// (boundary, max] with the boundary and 0 always included.
struct CSpec {
    bool automatic = true;
    int count = 6;
    double max_c = 5.0;
    std::vector<double> values;
};

/// Resolves a CSpec at a given (n, x) cell into an ascending, deduplicated
/// grid of admissible c values. Explicit entries below the boundary are
/// dropped (the caller records the skip).
inline std::vector<double> make_c_grid(const CSpec& spec, int n, double x,
                                       std::vector<double>* dropped = nullptr) {
    const double boundary = min_replacement(n, x);
    std::vector<double> grid;
    if (spec.automatic) {
        if (spec.count < 2) throw config_error("auto c grid needs count >= 2");
        if (std::isfinite(boundary)) grid.push_back(boundary);
        const double base = std::isfinite(boundary) ? boundary : -1.0;
        const double span = spec.max_c - base;
        // offsets halve toward the boundary: base + span/2^j
        for (int j = spec.count - 2; j >= 0; --j) grid.push_back(base + span * std::ldexp(1.0, -j));
        grid.push_back(0.0);
    } else {
        for (double c : spec.values) {
            if (c >= boundary - kCompatSlack) {
                grid.push_back(c);
            } else if (dropped) {
                dropped->push_back(c);
            }
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

struct Tolerances {
    double convex_order = -1e-12;    // pass iff margin >= this
    double partial_sum = -1e-12;     // pass iff margin >= this
    double partial_sum_strict = 1e-14;  // interior cells: consecutive gain must exceed this
    double error_monotone = -1e-12;  // pass iff margin >= this
    double kozniewska = 1e-12;       // pass iff residual <= this
    double claim1 = 0.0;             // pass iff lhs - rhs > this
};

// Strictness of the partial-sum check is only decidable when the quantity
// itself is resolvable in double precision; below this scale the consecutive
// gains underflow and the cell is reported indeterminate, never failed.
inline constexpr double kStrictResolvableScale = 1e-10;

struct SweepConfig {
    int schema_version = 1;
    std::vector<int> n_list;
    std::vector<XValue> x_list;
    CSpec c_spec;
    std::vector<std::string> function_ids;
    std::vector<CheckKind> checks;
    Tolerances tol;
};

struct CellRecord {
    std::string check;
    int n = 0;
    double x = 0.0;
    long long k_or_t = -1;  // -1 renders as an empty CSV field
    double c1 = std::numeric_limits<double>::quiet_NaN();
    double c2 = std::numeric_limits<double>::quiet_NaN();
    std::string function;
    double margin = 0.0;
    bool pass = true;
    std::string note;  // not serialized; indeterminate-strictness etc.
};

struct SweepReport {
    std::vector<CellRecord> cells;
    std::vector<std::string> skips;
    long long failures = 0;
    long long indeterminate = 0;
    std::map<std::string, double> worst_margin;  // per check

    void finalize() {
        failures = 0;
        indeterminate = 0;
        worst_margin.clear();
        for (const auto& cell : cells) {
            if (!cell.pass) ++failures;
            if (!cell.note.empty()) ++indeterminate;
            auto [it, inserted] = worst_margin.try_emplace(cell.check, cell.margin);
            if (!inserted) {
                // kozniewska margins are residuals: worst = largest
                if (cell.check == "kozniewska")
                    it->second = std::max(it->second, cell.margin);
                else
                    it->second = std::min(it->second, cell.margin);
            }
        }
    }
};

namespace detail {

struct CellTask {
    CheckKind kind;
    int n = 0;
    XValue x;
    int k = -1;                 // k, s, or unused
    double c1 = 0.0, c2 = 0.0;  // ConvexOrder pair / single-c checks
    const TestFunction* f = nullptr;
    std::vector<double> c_grid;  // grid-based checks
};

inline CellRecord eval_cell(const CellTask& t, const Tolerances& tol) {
    CellRecord rec;
    rec.check = check_name(t.kind);
    rec.n = t.n;
    rec.x = t.x.value;
    switch (t.kind) {
        case CheckKind::ConvexOrder: {
            rec.c1 = t.c1;
            rec.c2 = t.c2;
            rec.margin = check_convex_order(t.n, t.x.value, t.c1, t.c2);
            rec.pass = rec.margin >= tol.convex_order;
            break;
        }
        case CheckKind::PartialSum: {
            rec.k_or_t = t.k;
            rec.c1 = t.c_grid.front();
            rec.c2 = t.c_grid.back();
            rec.margin = std::numeric_limits<double>::infinity();
            const bool interior =
                t.x.value > 0.0 && t.x.value < 1.0 && t.k <= t.n - 1 && t.n >= 2;
            bool strict_fail = false, unresolved = false;
            double prev = 0.0;
            for (std::size_t j = 0; j < t.c_grid.size(); ++j) {
                const double s = partial_sum(StandardParams{t.n, t.x.value, t.c_grid[j]}, t.k);
                if (j > 0) {
                    const double d = s - prev;
                    rec.margin = std::min(rec.margin, d);
                    if (interior && !(d > tol.partial_sum_strict)) {
                        if (std::max(std::abs(s), std::abs(prev)) < kStrictResolvableScale)
                            unresolved = true;
                        else
                            strict_fail = true;
                    }
                }
                prev = s;
            }
            if (t.c_grid.size() < 2) rec.margin = 0.0;
            rec.pass = rec.margin >= tol.partial_sum && !strict_fail;
            if (unresolved && !strict_fail) rec.note = "indeterminate-strictness";
            break;
        }
        case CheckKind::ErrorMonotone: {
            rec.function = t.f->id;
            rec.c1 = t.c_grid.front();
            rec.c2 = t.c_grid.back();
            const ErrorMonotoneResult res =
                check_error_monotone(*t.f, t.n, t.x.value, t.c_grid);
            rec.margin = res.margin;
            rec.pass = res.margin >= tol.error_monotone;
            if (res.strict_expected && !res.strict_ok) rec.pass = false;
            if ((res.strict_expected && res.strict_ok && res.strict_unresolved) ||
                (!res.strict_expected && res.secant_gap > kStrictGapNoise))
                rec.note = "indeterminate-strictness";
            break;
        }
        case CheckKind::Kozniewska: {
            rec.k_or_t = t.k;
            rec.c1 = t.c1;
            rec.margin = check_kozniewska_identity(StandardParams{t.n, t.x.value, t.c1}, t.k);
            rec.pass = rec.margin <= tol.kozniewska;
            break;
        }
        case CheckKind::Claim1: {
            rec.k_or_t = t.k;
            rec.c1 = t.c1;
            const auto [lhs, rhs] = verify_claim1(t.n, t.k, t.x.value, t.c1);
            rec.margin = lhs - rhs;
            rec.pass = rec.margin > tol.claim1;
            break;
        }
        case CheckKind::Partition: {
            rec.k_or_t = t.k;
            const InterlacePartition part = build_partition(t.n, t.k, t.x.rat);
            rec.pass = verify_partition(part);
            // slack of the tightest rational bound, recorded as the margin
            long double slack = std::numeric_limits<long double>::infinity();
            for (std::size_t i = 0; i < part.n_seq.size(); ++i)
                slack = std::min(slack, static_cast<long double>(i + 1) / t.x.rat.to_double() -
                                            part.n_seq[i]);
            for (std::size_t i = 0; i < part.m_seq.size(); ++i)
                slack = std::min(slack,
                                 static_cast<long double>(i + 1) / (1.0 - t.x.rat.to_double()) -
                                     part.m_seq[i]);
            rec.margin = static_cast<double>(slack);
            break;
        }
    }
    return rec;
}

inline int sweep_thread_count() {
    if (const char* env = std::getenv("POLYA_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace detail

/// Evaluates every configured check over the Cartesian grid. Cells are
/// independent and may run on POLYA_THREADS workers (0/unset = all cores);
/// the report is ordered by grid index regardless of completion order.
inline SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.schema_version != 1)
        throw config_error("unsupported schema_version " + std::to_string(cfg.schema_version));
    for (const auto& id : cfg.function_ids) require_function(id);

    SweepReport report;
    std::vector<detail::CellTask> tasks;

    auto skip = [&](const std::string& why) { report.skips.push_back(why); };

    for (CheckKind kind : cfg.checks) {
        for (int n : cfg.n_list) {
            if (n < 1) throw config_error("n_list entries must be >= 1");
            for (const XValue& x : cfg.x_list) {
                if (!(x.value >= 0.0 && x.value <= 1.0))
                    throw config_error("x_list entries must lie in [0,1]");
                std::vector<double> dropped;
                const std::vector<double> grid = make_c_grid(cfg.c_spec, n, x.value, &dropped);
                for (double c : dropped)
                    skip(std::string(check_name(kind)) + " n=" + std::to_string(n) +
                         " x=" + std::to_string(x.value) + " c=" + std::to_string(c) +
                         ": c below compatibility boundary");
                const double boundary = min_replacement(n, x.value);
                switch (kind) {
                    case CheckKind::ConvexOrder:
                        for (std::size_t i = 0; i < grid.size(); ++i)
                            for (std::size_t j = i + 1; j < grid.size(); ++j)
                                tasks.push_back({kind, n, x, -1, grid[i], grid[j], nullptr, {}});
                        break;
                    case CheckKind::PartialSum:
                        if (grid.size() < 2) break;
                        for (int k = 0; k <= n; ++k)
                            tasks.push_back({kind, n, x, k, 0.0, 0.0, nullptr, grid});
                        break;
                    case CheckKind::ErrorMonotone:
                        if (n < 2) {
                            skip("error-monotone n=" + std::to_string(n) + ": requires n >= 2");
                            break;
                        }
                        for (const auto& id : cfg.function_ids) {
                            const TestFunction& f = require_function(id);
                            if (!f.is_convex) {
                                skip("error-monotone n=" + std::to_string(n) +
                                     " x=" + std::to_string(x.value) + " f=" + id +
                                     ": non-convex-function");
                                continue;
                            }
                            tasks.push_back({kind, n, x, -1, 0.0, 0.0, &f, grid});
                        }
                        break;
                    case CheckKind::Kozniewska:
                        for (double c : grid)
                            for (int s = 1; s <= n; ++s)
                                tasks.push_back({kind, n, x, s, c, 0.0, nullptr, {}});
                        break;
                    case CheckKind::Claim1:
                        if (n < 2 || !(x.value > 0.0 && x.value < 1.0)) {
                            skip("claim1 n=" + std::to_string(n) + " x=" +
                                 std::to_string(x.value) + ": requires n >= 2 and x in (0,1)");
                            break;
                        }
                        for (double c : grid) {
                            if (!(c > boundary)) continue;  // interior only
                            for (int k = 0; k <= n - 1; ++k)
                                tasks.push_back({kind, n, x, k, c, 0.0, nullptr, {}});
                        }
                        break;
                    case CheckKind::Partition:
                        if (n < 3) break;
                        if (!x.exact || !(Rational(0) < x.rat && x.rat < Rational(1))) {
                            skip("partition n=" + std::to_string(n) + " x=" +
                                 std::to_string(x.value) +
                                 ": requires exact rational x in (0,1)");
                            break;
                        }
                        for (int k = 1; k <= n - 2; ++k)
                            tasks.push_back({kind, n, x, k, 0.0, 0.0, nullptr, {}});
                        break;
                }
            }
        }
    }

    report.cells.resize(tasks.size());
    const int threads =
        std::min(detail::sweep_thread_count(), static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            report.cells[i] = detail::eval_cell(tasks[i], cfg.tol);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < tasks.size();
                     i += static_cast<std::size_t>(threads))
                    report.cells[i] = detail::eval_cell(tasks[i], cfg.tol);
            });
        for (auto& th : pool) th.join();
    }
    report.finalize();
    return report;
}

// --- CSV serialization -----------------------------------------------------

/// 17 significant digits in scientific notation: bit-faithful round trips.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline void write_report_csv(const SweepReport& report, std::ostream& os) {
    os << "check,n,x,k_or_t,c1,c2,function,margin,pass\n";
    for (const auto& cell : report.cells) {
        os << cell.check << ',' << cell.n << ',' << fmt17(cell.x) << ',';
        if (cell.k_or_t >= 0) os << cell.k_or_t;
        os << ',';
        if (!std::isnan(cell.c1)) os << fmt17(cell.c1);
        os << ',';
        if (!std::isnan(cell.c2)) os << fmt17(cell.c2);
        os << ',' << cell.function << ',' << fmt17(cell.margin) << ',' << (cell.pass ? 1 : 0)
           << '\n';
    }
}

struct CsvSummary {
    long long rows = 0;
    long long failures = 0;
};

inline CsvSummary read_report_csv(std::istream& is) {
    CsvSummary summary;
    std::string line;
    if (!std::getline(is, line) || line != "check,n,x,k_or_t,c1,c2,function,margin,pass")
        throw config_error("malformed report CSV header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos || comma + 1 >= line.size())
            throw config_error("malformed report CSV row: " + line);
        ++summary.rows;
        if (line.substr(comma + 1) == "0") ++summary.failures;
    }
    return summary;
}

}  // namespace polya
