#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace ehrlab {

/// Integer coordinate vector (alpha_1, ..., alpha_d). std::vector's
/// lexicographic comparison fixes the enumeration order everywhere.
using LatticePoint = std::vector<Int>;

/// One-sided facet inequality <normal, x> <= bound. The k-th dilate reuses
/// the same normal with bound k * bound, so a polytope is stored once.
struct Inequality {
    std::vector<Int> normal;
    Int bound = 1;

    bool operator==(const Inequality&) const = default;
};

enum class PolytopeLabel { AStar, CStar };

inline const char* to_string(PolytopeLabel label) {
    return label == PolytopeLabel::AStar ? "Astar" : "Cstar";
}

/// Intersection of integer half-spaces {x : <a, x> <= b}.
struct HPolytope {
    int dim = 0;
    PolytopeLabel label = PolytopeLabel::AStar;
    std::vector<Inequality> inequalities;
};

namespace detail {

// Pushes <a, x> <= 1 together with its mirror <-a, x> <= 1.
inline void push_pair(std::vector<Inequality>& out, std::vector<Int> a) {
    out.push_back({a, 1});
    for (Int& c : a) c = -c;
    out.push_back({std::move(a), 1});
}

}  // namespace detail

/// The dual polytope of the root system A_d, cut out by
///   |alpha_i + ... + alpha_j| <= 1   for all 1 <= i <= j <= d,
/// i.e. every contiguous window sum is bounded by 1 (d(d+1) one-sided
/// inequalities). d = 0 is the point polytope with an empty system.
inline HPolytope build_a_star(int d) {
    if (d < 0) throw std::invalid_argument("build_a_star: dimension must be nonnegative");
    HPolytope p{d, PolytopeLabel::AStar, {}};
    for (int i = 1; i <= d; ++i) {
        for (int j = i; j <= d; ++j) {
            std::vector<Int> a(static_cast<std::size_t>(d), 0);
            for (int t = i; t <= j; ++t) a[t - 1] = 1;
            detail::push_pair(p.inequalities, std::move(a));
        }
    }
    return p;
}

/// The dual polytope of the root system C_d, cut out by
///   |alpha_i| <= 1                                for 1 <= i <= d,
///   |alpha_i + ... + alpha_j| <= 1                for 1 <= i < j <= d-1,
///   |2(alpha_i + ... + alpha_{d-1}) + alpha_d| <= 1  for 1 <= i <= d-1,
/// a total of 2(d + (d-1)(d-2)/2 + (d-1)) one-sided inequalities.
inline HPolytope build_c_star(int d) {
    if (d < 1) throw std::invalid_argument("build_c_star: dimension must be positive");
    HPolytope p{d, PolytopeLabel::CStar, {}};
    for (int i = 1; i <= d; ++i) {
        std::vector<Int> a(static_cast<std::size_t>(d), 0);
        a[i - 1] = 1;
        detail::push_pair(p.inequalities, std::move(a));
    }
    for (int i = 1; i + 1 <= d - 1; ++i) {
        for (int j = i + 1; j <= d - 1; ++j) {
            std::vector<Int> a(static_cast<std::size_t>(d), 0);
            for (int t = i; t <= j; ++t) a[t - 1] = 1;
            detail::push_pair(p.inequalities, std::move(a));
        }
    }
    for (int i = 1; i <= d - 1; ++i) {
        std::vector<Int> a(static_cast<std::size_t>(d), 0);
        for (int t = i; t <= d - 1; ++t) a[t - 1] = 2;
        a[static_cast<std::size_t>(d) - 1] = 1;
        detail::push_pair(p.inequalities, std::move(a));
    }
    return p;
}

inline Int dot(const std::vector<Int>& a, const LatticePoint& x) {
    Int s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * x[t];
    return s;
}

/// alpha_i + ... + alpha_j with 1-based inclusive indices; an empty range
/// (i > j) sums to 0.
inline Int interval_sum(const LatticePoint& x, int i, int j) {
    const int n = static_cast<int>(x.size());
    if (i < 1 || j > n) throw std::out_of_range("interval_sum: indices outside 1..d");
    Int s = 0;
    for (int t = i; t <= j; ++t) s += x[t - 1];
    return s;
}

/// Is x a point of the k-th dilate kP?
inline bool contains(const HPolytope& P, Int k, const LatticePoint& x) {
    if (static_cast<int>(x.size()) != P.dim)
        throw std::invalid_argument("contains: point dimension mismatch");
    if (k < 0) throw std::invalid_argument("contains: dilation factor must be nonnegative");
    for (const Inequality& ineq : P.inequalities)
        if (dot(ineq.normal, x) > k * ineq.bound) return false;
    return true;
}

/// Is x a point of kP with at least one inequality tight? Because every
/// bound is 1 and the data is integral, failing all tightness is the same
/// as lying in (k-1)P, so the boundary shell is exactly kP minus (k-1)P.
inline bool on_boundary(const HPolytope& P, Int k, const LatticePoint& x) {
    if (static_cast<int>(x.size()) != P.dim)
        throw std::invalid_argument("on_boundary: point dimension mismatch");
    if (k < 1) throw std::invalid_argument("on_boundary: dilation factor must be positive");
    bool tight = false;
    for (const Inequality& ineq : P.inequalities) {
        const Int v = dot(ineq.normal, x);
        if (v > k * ineq.bound) return false;
        if (v == k * ineq.bound) tight = true;
    }
    return tight;
}

}  // namespace ehrlab
