#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "polya/params.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Partition of {1,...,n-1} into sequences (n_i) and (m_i) with
/// n_i <= i/x and m_i <= i/(1-x), together with the pre-remap raw values.
struct InterlacePartition {
    int n = 0;
    int k = 0;
    Rational x;
    std::vector<long long> n_seq;  // k entries
    std::vector<long long> m_seq;  // n-k-1 entries
    std::vector<long long> raw_n;  // n_i' before the remap bijection
    std::vector<long long> raw_m;  // m_i' before the remap bijection
};

/// Constructive interlacing partition:
///   n_i' = j where i/x in (j, j+1]   (exact integers round down by one),
///   m_i' = j where i/(1-x) in (j, j+1), but exact integers are kept,
/// then the raw values above n-1 are remapped order-preservingly onto the
/// unused slots of {1,...,n-1}.
inline InterlacePartition build_partition(int n, int k, const Rational& x) {
    if (n < 3 || k < 1 || k > n - 2)
        throw invalid_params("build_partition needs n >= 3 and 1 <= k <= n-2, got n=" +
                             std::to_string(n) + ", k=" + std::to_string(k));
    if (!(Rational(0) < x && x < Rational(1)))
        throw invalid_params("build_partition needs x strictly in (0,1), got " + x.str());

    InterlacePartition part;
    part.n = n;
    part.k = k;
    part.x = x;

    const long long p = x.num, q = x.den;
    part.raw_n.reserve(static_cast<std::size_t>(k));
    for (long long i = 1; i <= k; ++i)
        part.raw_n.push_back(detail::ceil_div(i * q, p) - 1);  // i/x = i*q/p
    part.raw_m.reserve(static_cast<std::size_t>(n - k - 1));
    for (long long i = 1; i <= n - k - 1; ++i)
        part.raw_m.push_back(detail::floor_div(i * q, q - p));  // i/(1-x) = i*q/(q-p)

    // The proof's interval argument makes all raw values distinct; a repeat
    // here would mean the construction was transcribed wrong.
    std::set<long long> raw_values(part.raw_n.begin(), part.raw_n.end());
    raw_values.insert(part.raw_m.begin(), part.raw_m.end());
    if (raw_values.size() != static_cast<std::size_t>(n - 1))
        throw error("interlace construction produced a repeated raw value for n=" +
                    std::to_string(n) + ", k=" + std::to_string(k) + ", x=" + x.str());

    // Unused in-range slots, ascending.
    std::vector<long long> slots;
    for (long long v = 1; v <= n - 1; ++v)
        if (!raw_values.count(v)) slots.push_back(v);

    // Out-of-range raw values, ascending; pair positionally with the slots.
    std::vector<long long> overflow;
    for (long long v : raw_values)
        if (v > n - 1) overflow.push_back(v);
    std::vector<std::pair<long long, long long>> remap;  // value -> slot
    for (std::size_t i = 0; i < overflow.size(); ++i) remap.emplace_back(overflow[i], slots[i]);

    auto apply = [&](long long v) {
        if (v <= n - 1) return v;
        for (const auto& [from, to] : remap)
            if (from == v) return to;
        return v;  // unreachable for a valid construction
    };

    part.n_seq.reserve(part.raw_n.size());
    for (long long v : part.raw_n) part.n_seq.push_back(apply(v));
    part.m_seq.reserve(part.raw_m.size());
    for (long long v : part.raw_m) part.m_seq.push_back(apply(v));
    return part;
}

/// Exact check of both partition invariants: the sequences split {1,...,n-1}
/// and obey the rational bounds n_i <= i/x, m_i <= i/(1-x).
inline bool verify_partition(const InterlacePartition& part) {
    std::set<long long> all(part.n_seq.begin(), part.n_seq.end());
    all.insert(part.m_seq.begin(), part.m_seq.end());
    if (all.size() != static_cast<std::size_t>(part.n - 1)) return false;
    if (*all.begin() != 1 || *all.rbegin() != part.n - 1) return false;
    const Rational one_minus_x(part.x.den - part.x.num, part.x.den);
    for (std::size_t i = 0; i < part.n_seq.size(); ++i)
        if (!le_ratio(part.n_seq[i], static_cast<long long>(i) + 1, part.x)) return false;
    for (std::size_t i = 0; i < part.m_seq.size(); ++i)
        if (!le_ratio(part.m_seq[i], static_cast<long long>(i) + 1, one_minus_x)) return false;
    return true;
}

/// Both sides of the logarithmic-derivative inequality
///   sum_{i=0}^{k} i/(x+ic) + sum_{i=0}^{n-k-1} i/(1-x+ic) > sum_{i=0}^{n-1} i/(1+ic),
/// strict for every x in (0,1) and c strictly above the boundary.
inline std::pair<double, double> verify_claim1(int n, int k, double x, double c) {
    if (n < 2 || k < 0 || k > n - 1)
        throw invalid_params("verify_claim1 needs n >= 2 and 0 <= k <= n-1");
    if (!(x > 0.0 && x < 1.0))
        throw invalid_params("verify_claim1 needs x strictly in (0,1)");
    if (!(c > min_replacement(n, x)))
        throw boundary_params("verify_claim1 needs c strictly above the compatibility boundary");
    long double lhs = 0.0L, rhs = 0.0L;
    for (int i = 1; i <= k; ++i) lhs += static_cast<long double>(i) / (x + static_cast<long double>(i) * c);
    for (int i = 1; i <= n - k - 1; ++i)
        lhs += static_cast<long double>(i) / (1.0L - x + static_cast<long double>(i) * c);
    for (int i = 1; i <= n - 1; ++i) rhs += static_cast<long double>(i) / (1.0L + static_cast<long double>(i) * c);
    return {static_cast<double>(lhs), static_cast<double>(rhs)};
}

}  // namespace polya
