// Command-line front end for the Polya/Bernstein-Stancu library:
//   pmf        print the Polya distribution at given parameters
//   eval       evaluate an approximation operator at a point
//   verify     run a verification sweep from a config file, emit CSV
//   curve      emit (c, P_n^c f(x), error) rows over a c grid
//   partition  print the interlacing partition for (n, k, x=p/q)

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/config.hpp"
#include "polya/interlace.hpp"
#include "polya/operators.hpp"
#include "polya/ordering.hpp"
#include "polya/pmf.hpp"
#include "polya/sweep.hpp"

namespace {

std::vector<double> parse_c_grid(const std::string& spec, int n, double x) {
    if (spec.rfind("auto:", 0) == 0) {
        polya::CSpec cs;
        cs.automatic = true;
        cs.count = std::stoi(spec.substr(5));
        return polya::make_c_grid(cs, n, x);
    }
    std::vector<double> grid;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) grid.push_back(std::stod(item));
    if (grid.empty()) throw polya::config_error("empty c grid '" + spec + "'");
    return grid;
}

int cmd_pmf(int n, double x, double a, double b, bool have_x, double c, bool json_out,
            bool csv_out) {
    polya::PolyaParams params = have_x ? polya::StandardParams{n, x, c}.to_polya()
                                       : polya::PolyaParams{n, a, b, c};
    const polya::Pmf dist = polya::pmf(params);
    long double cum = 0.0L;
    if (json_out) {
        nlohmann::json doc;
        doc["n"] = n;
        doc["a"] = params.a;
        doc["b"] = params.b;
        doc["c"] = params.c;
        doc["probs"] = dist.probs;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (csv_out) {
        std::cout << "k,p,cumulative\n";
        for (std::size_t k = 0; k < dist.probs.size(); ++k) {
            cum += dist.probs[k];
            std::cout << k << ',' << polya::fmt17(dist.probs[k]) << ','
                      << polya::fmt17(static_cast<double>(cum)) << '\n';
        }
        return 0;
    }
    std::printf("%4s  %-22s  %-22s\n", "k", "p_k", "cumulative");
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        cum += dist.probs[k];
        std::printf("%4zu  %-22.15g  %-22.15g\n", k, dist.probs[k], static_cast<double>(cum));
    }
    return 0;
}

int cmd_eval(const std::string& fid, const std::string& op, int n, double x, double c,
             bool have_c, double a, double b, bool have_ab) {
    const polya::TestFunction& f = polya::require_function(fid);
    polya::OperatorEval ev;
    if (op == "bernstein") {
        ev = polya::bernstein(f, n, x);
    } else if (op == "stancu") {
        if (!have_c) throw polya::config_error("operator 'stancu' requires --c");
        ev = polya::stancu(f, n, x, c);
    } else if (op == "rn") {
        ev = polya::r_n(f, n, x);
    } else if (op == "general") {
        if (!have_c) throw polya::config_error("operator 'general' requires --c");
        ev = polya::apply_general(f, n, x, have_ab ? a : x, have_ab ? b : 1.0 - x, c);
    } else {
        throw polya::config_error("unknown operator '" + op +
                                  "' (expected bernstein|stancu|rn|general)");
    }
    std::printf("operator   %s\n", ev.op.c_str());
    std::printf("value      %.17g\n", ev.value);
    std::printf("f(x)       %.17g\n", f.eval(x));
    std::printf("error      %.17g\n", ev.error);
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) throw polya::config_error("cannot open config file '" + config_path + "'");
    const polya::SweepConfig cfg = polya::parse_sweep_config(in);
    const polya::SweepReport report = polya::run_sweep(cfg);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw polya::config_error("cannot open output file '" + out_path + "'");
    polya::write_report_csv(report, out);
    out.close();

    std::printf("%-16s %-22s\n", "check", "worst margin");
    for (const auto& [check, margin] : report.worst_margin)
        std::printf("%-16s %.17g\n", check.c_str(), margin);
    std::printf("cells     %zu\n", report.cells.size());
    std::printf("failures  %lld\n", report.failures);
    std::printf("skipped   %zu\n", report.skips.size());
    if (report.indeterminate > 0)
        std::printf("indeterminate-strictness  %lld\n", report.indeterminate);
    for (const auto& why : report.skips) std::fprintf(stderr, "skip: %s\n", why.c_str());
    return report.failures == 0 ? 0 : 1;
}

int cmd_curve(const std::string& fid, int n, double x, const std::string& grid_spec) {
    const polya::TestFunction& f = polya::require_function(fid);
    const std::vector<double> grid = parse_c_grid(grid_spec, n, x);
    std::cout << "c,value,error\n";
    double prev_abs = 0.0;
    bool monotone = true;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const polya::OperatorEval ev = polya::stancu(f, n, x, grid[j]);
        std::cout << polya::fmt17(grid[j]) << ',' << polya::fmt17(ev.value) << ','
                  << polya::fmt17(ev.error) << '\n';
        const double abs_err = std::abs(ev.error);
        if (j > 0 && f.is_convex && abs_err < prev_abs - 1e-12) monotone = false;
        prev_abs = abs_err;
    }
    if (!monotone) {
        std::fprintf(stderr, "error column is not nondecreasing for convex '%s'\n", fid.c_str());
        return 1;
    }
    return 0;
}

int cmd_partition(int n, int k, const std::string& x_text) {
    const polya::Rational x = polya::parse_rational(x_text);
    const polya::InterlacePartition part = polya::build_partition(n, k, x);
    auto print_seq = [](const char* name, const std::vector<long long>& seq) {
        std::printf("%-6s", name);
        for (long long v : seq) std::printf(" %lld", v);
        std::printf("\n");
    };
    std::printf("n=%d k=%d x=%s\n", n, k, x.str().c_str());
    print_seq("raw_n", part.raw_n);
    print_seq("raw_m", part.raw_m);
    print_seq("n_seq", part.n_seq);
    print_seq("m_seq", part.m_seq);
    std::printf("valid  %s\n", polya::verify_partition(part) ? "yes" : "NO");
    return polya::verify_partition(part) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polya urn distribution and Bernstein-Stancu operator toolkit"};
    app.require_subcommand(1);

    // pmf
    auto* pmf_cmd = app.add_subcommand("pmf", "print the Polya pmf");
    int pn = 1;
    double px = 0.0, pa = 0.0, pb = 0.0, pc = 0.0;
    bool pjson = false, pcsv = false;
    pmf_cmd->add_option("--n", pn, "number of draws")->required();
    auto* opt_x = pmf_cmd->add_option("--x", px, "Stancu point (a=x, b=1-x)");
    auto* opt_a = pmf_cmd->add_option("--a", pa, "white mass");
    auto* opt_b = pmf_cmd->add_option("--b", pb, "black mass");
    pmf_cmd->add_option("--c", pc, "replacement parameter")->required();
    pmf_cmd->add_flag("--json", pjson, "JSON output");
    pmf_cmd->add_flag("--csv", pcsv, "CSV output");
    opt_a->needs(opt_b)->excludes(opt_x);
    opt_b->needs(opt_a);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an operator at a point");
    std::string ef, eop;
    int en = 1;
    double ex = 0.0, ec = 0.0, ea = 0.0, eb = 0.0;
    eval_cmd->add_option("--f", ef, "function id")->required();
    eval_cmd->add_option("--op", eop, "bernstein|stancu|rn|general")->required();
    eval_cmd->add_option("--n", en, "degree")->required();
    eval_cmd->add_option("--x", ex, "evaluation point")->required();
    auto* opt_ec = eval_cmd->add_option("--c", ec, "replacement parameter");
    auto* opt_ea = eval_cmd->add_option("--a", ea, "white mass (general only)");
    auto* opt_eb = eval_cmd->add_option("--b", eb, "black mass (general only)");
    opt_ea->needs(opt_eb);
    opt_eb->needs(opt_ea);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string vconfig, vout = "report.csv";
    verify_cmd->add_option("config", vconfig, "sweep config file (JSON)")->required();
    verify_cmd->add_option("--out", vout, "report CSV path");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "emit error-vs-c rows");
    std::string cf, cgrid;
    int cn = 2;
    double cx = 0.0;
    curve_cmd->add_option("--f", cf, "function id")->required();
    curve_cmd->add_option("--n", cn, "degree")->required();
    curve_cmd->add_option("--x", cx, "evaluation point")->required();
    curve_cmd->add_option("--c-grid", cgrid, "comma list or auto:N")->required();

    // partition
    auto* part_cmd = app.add_subcommand("partition", "print an interlacing partition");
    int gn = 3, gk = 1;
    std::string gx;
    part_cmd->add_option("--n", gn)->required();
    part_cmd->add_option("--k", gk)->required();
    part_cmd->add_option("--x", gx, "exact rational p/q")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pmf_cmd->parsed()) {
            if (!*opt_x && !*opt_a)
                throw polya::config_error("pmf requires either --x or --a/--b");
            return cmd_pmf(pn, px, pa, pb, static_cast<bool>(*opt_x), pc, pjson, pcsv);
        }
        if (eval_cmd->parsed())
            return cmd_eval(ef, eop, en, ex, ec, static_cast<bool>(*opt_ec), ea, eb,
                            static_cast<bool>(*opt_ea));
        if (verify_cmd->parsed()) return cmd_verify(vconfig, vout);
        if (curve_cmd->parsed()) return cmd_curve(cf, cn, cx, cgrid);
        if (part_cmd->parsed()) return cmd_partition(gn, gk, gx);
    } catch (const polya::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
