#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "polya/params.hpp"

namespace polya {

/// Generalized rising factorial x(x+h)(x+2h)...(x+(n-1)h); 1 for n = 0.
inline double rising_factorial(double x, int n, double h) {
    long double r = 1.0L;
    for (int i = 0; i < n; ++i) r *= x + static_cast<long double>(i) * h;
    return static_cast<double>(r);
}

/// Distribution of the number of white draws, entries indexed k = 0..n.
struct Pmf {
    PolyaParams params;
    std::vector<double> probs;
    // Largest negative value that was clamped to zero (rounding near the
    // compatibility boundary); stays below 1e-15 for valid parameters.
    double clamp_magnitude = 0.0;

    double sum() const {
        long double s = 0.0L;
        for (double p : probs) s += p;
        return static_cast<double>(s);
    }

    double mean() const {
        long double m = 0.0L;
        for (std::size_t k = 0; k < probs.size(); ++k) m += static_cast<long double>(k) * probs[k];
        return static_cast<double>(m);
    }
};

namespace detail {

// Direct product evaluation is used up to this n; beyond it the rising
// factorials can overflow and evaluation moves to log space.
inline constexpr int kLogSpaceThreshold = 30;

inline std::vector<std::uint64_t> binomial_row(int n) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k <= n / 2; ++k)
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k) - 1] * static_cast<std::uint64_t>(n - k + 1) /
            static_cast<std::uint64_t>(k);
    for (int k = n / 2 + 1; k <= n; ++k)
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(n - k)];
    return row;
}

inline std::vector<double> pmf_direct(const PolyaParams& p) {
    const int n = p.n;
    const auto binom = binomial_row(n);
    long double denom = 1.0L;
    for (int i = 0; i < n; ++i) denom *= p.a + p.b + static_cast<long double>(i) * p.c;

    // prefix products of the numerator factors a+ic and b+ic
    std::vector<long double> fa(static_cast<std::size_t>(n) + 1, 1.0L);
    std::vector<long double> fb(static_cast<std::size_t>(n) + 1, 1.0L);
    for (int i = 0; i < n; ++i) {
        fa[static_cast<std::size_t>(i) + 1] = fa[static_cast<std::size_t>(i)] * (p.a + static_cast<long double>(i) * p.c);
        fb[static_cast<std::size_t>(i) + 1] = fb[static_cast<std::size_t>(i)] * (p.b + static_cast<long double>(i) * p.c);
    }

    std::vector<double> probs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        probs[static_cast<std::size_t>(k)] = static_cast<double>(
            static_cast<long double>(binom[static_cast<std::size_t>(k)]) *
            fa[static_cast<std::size_t>(k)] * fb[static_cast<std::size_t>(n - k)] / denom);
    return probs;
}

inline std::vector<double> pmf_log(const PolyaParams& p) {
    const int n = p.n;
    // log C(n,k) prefix: log(n!/(k!(n-k)!)) built from log-factorials
    std::vector<long double> lfact(static_cast<std::size_t>(n) + 1, 0.0L);
    for (int i = 2; i <= n; ++i)
        lfact[static_cast<std::size_t>(i)] = lfact[static_cast<std::size_t>(i) - 1] + logl(static_cast<long double>(i));

    // Prefix sums of log numerator factors. A factor that is zero (or driven
    // microscopically negative by rounding at the boundary) cuts the chain:
    // every k that includes it has probability exactly 0.
    std::vector<long double> la(static_cast<std::size_t>(n) + 1, 0.0L);
    std::vector<long double> lb(static_cast<std::size_t>(n) + 1, 0.0L);
    int cut_a = n;  // largest k with all a-side factors positive
    int cut_b = n;
    long double lden = 0.0L;
    for (int i = 0; i < n; ++i) {
        const long double faci_a = p.a + static_cast<long double>(i) * p.c;
        const long double faci_b = p.b + static_cast<long double>(i) * p.c;
        if (faci_a <= 0.0L && cut_a == n) cut_a = i;
        if (faci_b <= 0.0L && cut_b == n) cut_b = i;
        la[static_cast<std::size_t>(i) + 1] = la[static_cast<std::size_t>(i)] + (faci_a > 0.0L ? logl(faci_a) : 0.0L);
        lb[static_cast<std::size_t>(i) + 1] = lb[static_cast<std::size_t>(i)] + (faci_b > 0.0L ? logl(faci_b) : 0.0L);
        lden += logl(p.a + p.b + static_cast<long double>(i) * p.c);
    }

    std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        if (k > cut_a || n - k > cut_b) continue;
        const long double lc = lfact[static_cast<std::size_t>(n)] -
                               lfact[static_cast<std::size_t>(k)] -
                               lfact[static_cast<std::size_t>(n - k)];
        probs[static_cast<std::size_t>(k)] = static_cast<double>(
            expl(lc + la[static_cast<std::size_t>(k)] + lb[static_cast<std::size_t>(n - k)] - lden));
    }
    return probs;
}

inline void clamp_negatives(Pmf& out) {
    for (double& v : out.probs) {
        if (v < 0.0) {
            out.clamp_magnitude = std::max(out.clamp_magnitude, -v);
            v = 0.0;
        }
    }
}

}  // namespace detail

/// Pmf of the Polya distribution, p_k = C(n,k) a^{(k,c)} b^{(n-k,c)} / (a+b)^{(n,c)}.
inline Pmf pmf(const PolyaParams& p) {
    p.validate();
    Pmf out{p, {}, 0.0};
    out.probs.assign(static_cast<std::size_t>(p.n) + 1, 0.0);
    if (p.a <= 0.0) {
        out.probs[0] = 1.0;  // no white mass: zero successes a.s.
        return out;
    }
    if (p.b <= 0.0) {
        out.probs[static_cast<std::size_t>(p.n)] = 1.0;
        return out;
    }
    out.probs = p.n <= detail::kLogSpaceThreshold ? detail::pmf_direct(p) : detail::pmf_log(p);
    detail::clamp_negatives(out);
    return out;
}

/// Independent oracle: enumerates all 2^n draw sequences. O(n 2^n), n <= 16.
inline Pmf brute_force_pmf(const PolyaParams& p) {
    p.validate();
    if (p.n > 16)
        throw size_limit("brute_force_pmf limited to n <= 16, got n=" + std::to_string(p.n));
    const int n = p.n;
    std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long double prob = 1.0L;
        int whites = 0;
        for (int t = 0; t < n; ++t) {
            const long double den = p.a + p.b + static_cast<long double>(t) * p.c;
            if (mask >> t & 1u) {
                prob *= (p.a + static_cast<long double>(whites) * p.c) / den;
                ++whites;
            } else {
                prob *= (p.b + static_cast<long double>(t - whites) * p.c) / den;
            }
        }
        acc[static_cast<std::size_t>(whites)] += prob;
    }
    Pmf out{p, std::vector<double>(acc.begin(), acc.end()), 0.0};
    detail::clamp_negatives(out);
    return out;
}

/// Partial first centered moment: sum_{k=0}^{s-1} (n x - k) p_{n,k}^{x,1-x,c}.
inline double partial_centered_moment(const StandardParams& sp, int s) {
    sp.validate();
    if (s < 1 || s > sp.n)
        throw invalid_params("s out of range [1," + std::to_string(sp.n) + "], got " + std::to_string(s));
    const Pmf dist = pmf(sp.to_polya());
    const long double nx = static_cast<long double>(sp.n) * sp.x;
    long double acc = 0.0L;
    for (int k = 0; k < s; ++k) acc += (nx - k) * dist.probs[static_cast<std::size_t>(k)];
    return static_cast<double>(acc);
}

/// Residual of the closed-form identity for the partial centered moment:
/// |sum_{k<s}(nx-k)p_k  -  s p_s (1-x+(n-s)c)|.
inline double check_kozniewska_identity(const StandardParams& sp, int s) {
    const double lhs = partial_centered_moment(sp, s);
    const Pmf dist = pmf(sp.to_polya());
    const long double rhs = static_cast<long double>(s) * dist.probs[static_cast<std::size_t>(s)] *
                            (1.0L - sp.x + static_cast<long double>(sp.n - s) * sp.c);
    return static_cast<double>(fabsl(static_cast<long double>(lhs) - rhs));
}

/// Analytic derivative of each pmf entry with respect to c:
/// dp_k/dc = p_k (sum_{i=1}^{k-1} i/(x+ic) + sum_{i=1}^{n-k-1} i/(1-x+ic)
///                - sum_{i=1}^{n-1} i/(1+ic)).
/// Degenerate x in {0,1} and n = 1 give c-independent pmfs: returns all zeros.
inline std::vector<double> pmf_dc(const StandardParams& sp) {
    sp.validate();
    const int n = sp.n;
    if (sp.x == 0.0 || sp.x == 1.0 || n == 1)
        return std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0);
    if (!(sp.c > sp.boundary() + 1e-9))
        throw boundary_params("pmf_dc requires c at least 1e-9 above the compatibility boundary");

    // prefix sums of the logarithmic-derivative terms
    std::vector<long double> sa(static_cast<std::size_t>(n) + 1, 0.0L);
    std::vector<long double> sb(static_cast<std::size_t>(n) + 1, 0.0L);
    long double sden = 0.0L;
    for (int i = 1; i < n; ++i) {
        sa[static_cast<std::size_t>(i) + 1] =
            sa[static_cast<std::size_t>(i)] + static_cast<long double>(i) / (sp.x + static_cast<long double>(i) * sp.c);
        sb[static_cast<std::size_t>(i) + 1] =
            sb[static_cast<std::size_t>(i)] + static_cast<long double>(i) / (1.0L - sp.x + static_cast<long double>(i) * sp.c);
        sden += static_cast<long double>(i) / (1.0L + static_cast<long double>(i) * sp.c);
    }

    const Pmf dist = pmf(sp.to_polya());
    std::vector<double> deriv(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        deriv[static_cast<std::size_t>(k)] = static_cast<double>(
            dist.probs[static_cast<std::size_t>(k)] *
            (sa[static_cast<std::size_t>(k)] + sb[static_cast<std::size_t>(n - k)] - sden));
    return deriv;
}

}  // namespace polya
