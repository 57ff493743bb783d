#pragma once

#include <string>

#include "polya/functions.hpp"
#include "polya/pmf.hpp"

namespace polya {

/// Pointwise evaluation of an approximation operator.
struct OperatorEval {
    std::string op;   // general | bernstein | stancu | r_n
    int n = 1;
    double x = 0.0;
    double c = 0.0;   // effective replacement parameter
    double value = 0.0;
    double error = 0.0;  // value - f(x)
};

/// P_n^{a,b,c}(f;x) = sum_k f(k/n) p_{n,k}^{a,b,c}.
inline OperatorEval apply_general(const TestFunction& f, int n, double x, double a, double b,
                                  double c) {
    if (!(x >= 0.0 && x <= 1.0))
        throw invalid_params("operator evaluation point x must lie in [0,1]");
    const Pmf dist = pmf(PolyaParams{n, a, b, c});
    long double acc = 0.0L;
    for (int k = 0; k <= n; ++k)
        acc += static_cast<long double>(f.eval(static_cast<double>(k) / n)) *
               dist.probs[static_cast<std::size_t>(k)];
    const double value = static_cast<double>(acc);
    return OperatorEval{"general", n, x, c, value, value - f.eval(x)};
}

/// Bernstein operator B_n, the c = 0 member of the Stancu family.
inline OperatorEval bernstein(const TestFunction& f, int n, double x) {
    OperatorEval ev = apply_general(f, n, x, x, 1.0 - x, 0.0);
    ev.op = "bernstein";
    return ev;
}

/// Bernstein-Stancu operator P_n^c (a = x, b = 1-x). Requires n >= 2.
inline OperatorEval stancu(const TestFunction& f, int n, double x, double c) {
    if (n < 2) throw invalid_params("stancu requires n >= 2");
    OperatorEval ev = apply_general(f, n, x, x, 1.0 - x, c);
    ev.op = "stancu";
    return ev;
}

/// R_n: the Stancu operator at the minimal admissible c = -min{x,1-x}/(n-1).
inline OperatorEval r_n(const TestFunction& f, int n, double x) {
    OperatorEval ev = stancu(f, n, x, min_replacement(n, x));
    ev.op = "r_n";
    return ev;
}

namespace detail {

/// B_n by the classical formula, independent of the pmf path.
inline double bernstein_direct(const TestFunction& f, int n, double x) {
    const auto binom = binomial_row(n);
    long double acc = 0.0L;
    for (int k = 0; k <= n; ++k) {
        long double w = static_cast<long double>(binom[static_cast<std::size_t>(k)]);
        for (int i = 0; i < k; ++i) w *= x;
        for (int i = 0; i < n - k; ++i) w *= 1.0L - x;
        acc += w * f.eval(static_cast<double>(k) / n);
    }
    return static_cast<double>(acc);
}

}  // namespace detail

/// B_1 f(x) = f(0)(1-x) + f(1)x; together with B_n it decides whether the
/// error of P_n^c is strictly increasing in c.
inline double secant_value(const TestFunction& f, double x) {
    return f.eval(0.0) * (1.0 - x) + f.eval(1.0) * x;
}

}  // namespace polya
