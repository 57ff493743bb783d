#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polya {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters violate the compatibility condition (caller bug).
class invalid_params : public error {
public:
    using error::error;
};

/// Input exceeds a hard cost limit (e.g. brute-force enumeration size).
class size_limit : public error {
public:
    using error::error;
};

/// Operation requires c strictly inside the admissible range.
class boundary_params : public error {
public:
    using error::error;
};

/// Check is only defined for convex test functions.
class non_convex_function : public error {
public:
    using error::error;
};

/// Sweep configuration document is malformed or inconsistent.
class config_error : public error {
public:
    using error::error;
};

// Tolerance used when validating the compatibility condition; the minimal
// admissible c is itself computed in floating point, so a strict >= 0 test
// would reject the boundary by rounding.
inline constexpr double kCompatSlack = 1e-12;

/// Urn parameters: n draws from an urn with white mass a, black mass b,
/// reinforced by c units of the drawn color after each draw.
struct PolyaParams {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    bool valid() const {
        if (n < 1 || !(a >= 0.0) || !(b >= 0.0) || !(a + b > 0.0)) return false;
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) return false;
        if (n == 1) return true;  // (n-1)c vanishes, any real c admissible
        const double slack = kCompatSlack * std::max(1.0, a + b);
        return a + (n - 1) * c >= -slack && b + (n - 1) * c >= -slack;
    }

    void validate() const {
        if (!valid())
            throw invalid_params("invalid Polya parameters (n=" + std::to_string(n) +
                                 ", a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                 ", c=" + std::to_string(c) +
                                 "): need n>=1, a,b>=0, a+b>0 and a+(n-1)c>=0, b+(n-1)c>=0");
    }
};

/// Minimal admissible replacement parameter for the (n, x, 1-x, c) family.
/// Unbounded below for n = 1 (the compatibility condition is vacuous).
inline double min_replacement(int n, double x) {
    if (n <= 1) return -std::numeric_limits<double>::infinity();
    return -std::min(x, 1.0 - x) / (n - 1);
}

/// The Stancu specialization (n, x, 1-x, c).
struct StandardParams {
    int n = 1;
    double x = 0.0;
    double c = 0.0;

    double boundary() const { return min_replacement(n, x); }

    PolyaParams to_polya() const { return PolyaParams{n, x, 1.0 - x, c}; }

    bool valid() const {
        if (!(x >= 0.0 && x <= 1.0)) return false;
        return to_polya().valid();
    }

    void validate() const {
        if (!(x >= 0.0 && x <= 1.0))
            throw invalid_params("x must lie in [0,1], got " + std::to_string(x));
        to_polya().validate();
    }
};

}  // namespace polya
