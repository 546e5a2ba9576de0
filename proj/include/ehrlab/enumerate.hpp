#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytope.hpp"

namespace ehrlab {

/// Default cap on membership tests per enumeration call (one test per cell
/// of the bounding box).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Thrown before any work is done when an enumeration would exceed the
/// membership-test budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(BigInt required, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: " + required.str() +
                             " membership tests required, budget is " + std::to_string(budget)),
          required_(std::move(required)),
          budget_(budget) {}

    const BigInt& required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    BigInt required_;
    std::uint64_t budget_;
};

struct CountResult {
    BigInt total;     // |kP|
    BigInt boundary;  // |k dP|, 0 for k = 0
    int dim = 0;
    Int scale = 0;
    PolytopeLabel label = PolytopeLabel::AStar;
};

namespace detail {

inline BigInt box_cells(const LatticePoint& lo, const LatticePoint& hi) {
    BigInt cells = 1;
    for (std::size_t t = 0; t < lo.size(); ++t) {
        if (hi[t] < lo[t]) return 0;
        cells *= BigInt(hi[t] - lo[t] + 1);
    }
    return cells;
}

}  // namespace detail

/// Visits every lattice point of kP inside the box [lo, hi], in ascending
/// lexicographic order (first coordinate outermost). The box is walked
/// exhaustively, so its cell count is charged against the budget up front.
template <class Fn>
void for_each_point_in_box(const HPolytope& P, Int k, const LatticePoint& lo,
                           const LatticePoint& hi, Fn&& fn,
                           std::uint64_t budget = kDefaultBudget) {
    if (static_cast<int>(lo.size()) != P.dim || static_cast<int>(hi.size()) != P.dim)
        throw std::invalid_argument("for_each_point_in_box: box dimension mismatch");
    if (k < 0) throw std::invalid_argument("for_each_point_in_box: dilation factor must be nonnegative");
    const BigInt cells = detail::box_cells(lo, hi);
    if (cells > budget) throw BudgetError(cells, budget);
    if (cells == 0) return;
    LatticePoint x = lo;
    if (P.dim == 0) {  // the single empty point
        if (contains(P, k, x)) fn(std::as_const(x));
        return;
    }
    for (;;) {
        if (contains(P, k, x)) fn(std::as_const(x));
        int t = P.dim - 1;
        while (t >= 0 && x[t] == hi[t]) {
            x[t] = lo[t];
            --t;
        }
        if (t < 0) break;
        ++x[t];
    }
}

/// Visits the lattice points of kP over the derived bounding box [-k, k]^d.
/// Every facet system here contains |alpha_i| <= 1 directly or as a window
/// difference, so the box is safe.
template <class Fn>
void for_each_point(const HPolytope& P, Int k, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    if (k < 0) throw std::invalid_argument("for_each_point: dilation factor must be nonnegative");
    LatticePoint lo(static_cast<std::size_t>(P.dim), -k);
    LatticePoint hi(static_cast<std::size_t>(P.dim), k);
    for_each_point_in_box(P, k, lo, hi, std::forward<Fn>(fn), budget);
}

inline std::vector<LatticePoint> enumerate_points(const HPolytope& P, Int k,
                                                  std::uint64_t budget = kDefaultBudget) {
    std::vector<LatticePoint> pts;
    for_each_point(P, k, [&](const LatticePoint& x) { pts.push_back(x); }, budget);
    return pts;
}

inline BigInt count_points(const HPolytope& P, Int k, std::uint64_t budget = kDefaultBudget) {
    BigInt n = 0;
    for_each_point(P, k, [&](const LatticePoint&) { ++n; }, budget);
    return n;
}

/// |k dP| by direct tightness testing; k = 0 has an empty boundary by
/// convention (the 0-th dilate is the origin alone).
inline BigInt count_boundary(const HPolytope& P, Int k, std::uint64_t budget = kDefaultBudget) {
    if (k < 0) throw std::invalid_argument("count_boundary: dilation factor must be nonnegative");
    if (k == 0) return 0;
    BigInt n = 0;
    for_each_point(P, k, [&](const LatticePoint& x) {
        if (on_boundary(P, k, x)) ++n;
    }, budget);
    return n;
}

/// Total and boundary counts in one sweep of the box.
inline CountResult count(const HPolytope& P, Int k, std::uint64_t budget = kDefaultBudget) {
    CountResult r{0, 0, P.dim, k, P.label};
    for_each_point(P, k, [&](const LatticePoint& x) {
        ++r.total;
        if (k >= 1 && on_boundary(P, k, x)) ++r.boundary;
    }, budget);
    return r;
}

}  // namespace ehrlab
