#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "polytope.hpp"

namespace ehrlab {

/// Where an element of the target multiset lives: the boundary shell of
/// k A*_{d-1}, or one of the two full copies of (k-1) A*_{d-1}.
enum class BoundaryTag { Shell, Copy1, Copy2 };

inline const char* to_string(BoundaryTag t) {
    switch (t) {
        case BoundaryTag::Shell: return "shell";
        case BoundaryTag::Copy1: return "copy1";
        case BoundaryTag::Copy2: return "copy2";
    }
    return "?";
}

/// A point of the target multiset: a (d-1)-dimensional prefix plus the tag
/// telling which of the three disjoint parts it belongs to.
struct TaggedBoundaryElement {
    LatticePoint point;
    BoundaryTag tag = BoundaryTag::Shell;

    bool operator==(const TaggedBoundaryElement&) const = default;
};

/// Which completion rule produced alpha_d, with the data the rule consumed.
enum class WitnessCase { BoundaryPos, BoundaryNeg, Interior1, Interior2 };

inline const char* to_string(WitnessCase c) {
    switch (c) {
        case WitnessCase::BoundaryPos: return "boundary-pos";
        case WitnessCase::BoundaryNeg: return "boundary-neg";
        case WitnessCase::Interior1: return "interior-1";
        case WitnessCase::Interior2: return "interior-2";
    }
    return "?";
}

struct ReconstructionWitness {
    WitnessCase case_id = WitnessCase::Interior1;
    std::optional<int> i0, j0;  // tight window, boundary cases only
    std::optional<Int> p, q;    // suffix-sum extrema, interior cases only
    Int alpha_d = 0;
};

/// Shell/interior classification of a point of k A*_n. For shell points
/// the lexicographically smallest tight window (i0, j0) is reported along
/// with the sign of its sum; any tight window yields the same completion
/// (see the well-definedness tests), so the tie-break only pins the trace.
struct PrefixClass {
    bool shell = false;
    int i0 = 0, j0 = 0;
    int sign = 0;  // +1 or -1 when shell
};

inline PrefixClass classify_prefix(const LatticePoint& x, Int k) {
    if (k < 1) throw std::invalid_argument("classify_prefix: dilation factor must be positive");
    const int n = static_cast<int>(x.size());
    PrefixClass pc;
    for (int i = 1; i <= n; ++i) {
        Int s = 0;
        for (int j = i; j <= n; ++j) {
            s += x[j - 1];
            if (s > k || -s > k)
                throw std::invalid_argument("classify_prefix: point outside the k-th dilate");
            if (!pc.shell && (s == k || s == -k)) {
                pc.shell = true;
                pc.i0 = i;
                pc.j0 = j;
                pc.sign = s > 0 ? 1 : -1;
            }
        }
    }
    return pc;
}

/// Extrema of the nonempty suffix sums alpha_i + ... + alpha_n over
/// 1 <= i <= n. The empty prefix (n = 0, i.e. d = 1) has no suffixes and
/// takes p = q = 0, which collapses both interior completions to +-k.
struct SuffixExtrema {
    Int p = 0;  // maximum
    Int q = 0;  // minimum
};

inline SuffixExtrema suffix_extrema(const LatticePoint& x) {
    SuffixExtrema e;
    Int s = 0;
    bool first = true;
    for (std::size_t i = x.size(); i-- > 0;) {
        s += x[i];
        if (first || s > e.p) e.p = s;
        if (first || s < e.q) e.q = s;
        first = false;
    }
    return e;
}

namespace detail {

// max |alpha_i + ... + alpha_j| over all windows; 0 for the empty point.
// Membership in the k-th dilate of the ambient A* is exactly <= k.
inline Int max_abs_window_sum(const LatticePoint& x) {
    const int n = static_cast<int>(x.size());
    Int best = 0;
    for (int i = 1; i <= n; ++i) {
        Int s = 0;
        for (int j = i; j <= n; ++j) {
            s += x[j - 1];
            if (s > best) best = s;
            if (-s > best) best = -s;
        }
    }
    return best;
}

inline std::string point_to_string(const LatticePoint& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ',';
        os << x[i];
    }
    os << ')';
    return os.str();
}

}  // namespace detail

/// The two interior completions for a prefix of (k-1) A*_{d-1}:
///   copy 1: alpha_d = k        if p <= 0, else k - 2p
///   copy 2: alpha_d = -k - 2q  if q < 0,  else -k
/// They are always distinct (copy 1 is positive, copy 2 negative).
struct InteriorCandidates {
    Int alpha1 = 0;
    Int alpha2 = 0;
    Int p = 0, q = 0;
};

inline InteriorCandidates interior_candidates(const LatticePoint& prefix, Int k) {
    const SuffixExtrema e = suffix_extrema(prefix);
    InteriorCandidates c;
    c.p = e.p;
    c.q = e.q;
    c.alpha1 = e.p <= 0 ? k : k - 2 * e.p;
    c.alpha2 = e.q < 0 ? -k - 2 * e.q : -k;
    return c;
}

/// Computes the alpha_d completion for a tagged element, returning the full
/// trace. Shell elements use the tight window (i0, j0): with tail the sum
/// alpha_{j0+1} + ... + alpha_{d-1},
///   sum = +k  ->  alpha_d = -k - 2 tail      sum = -k  ->  alpha_d = k - 2 tail.
/// Throws invalid_argument when the tag contradicts the point (shell tag on
/// an interior point, copy tag outside the (k-1)-st dilate).
inline ReconstructionWitness lift_witness(const TaggedBoundaryElement& e, int d, Int k) {
    if (d < 1) throw std::invalid_argument("lift: dimension must be positive");
    if (k < 1) throw std::invalid_argument("lift: dilation factor must be positive");
    if (static_cast<int>(e.point.size()) != d - 1)
        throw std::invalid_argument("lift: prefix must have d-1 coordinates");
    ReconstructionWitness w;
    if (e.tag == BoundaryTag::Shell) {
        const PrefixClass pc = classify_prefix(e.point, k);
        if (!pc.shell)
            throw std::invalid_argument("lift: shell tag on a point with no tight window");
        const Int tail = interval_sum(e.point, pc.j0 + 1, d - 1);
        w.case_id = pc.sign > 0 ? WitnessCase::BoundaryPos : WitnessCase::BoundaryNeg;
        w.i0 = pc.i0;
        w.j0 = pc.j0;
        w.alpha_d = pc.sign > 0 ? -k - 2 * tail : k - 2 * tail;
    } else {
        if (detail::max_abs_window_sum(e.point) > k - 1)
            throw std::invalid_argument("lift: copy tag on a point outside the (k-1)-st dilate");
        const InteriorCandidates c = interior_candidates(e.point, k);
        const bool first = e.tag == BoundaryTag::Copy1;
        w.case_id = first ? WitnessCase::Interior1 : WitnessCase::Interior2;
        w.p = c.p;
        w.q = c.q;
        w.alpha_d = first ? c.alpha1 : c.alpha2;
    }
    return w;
}

/// g: append the completion. The image is guaranteed to land on the shell
/// of k C*_d; that is re-verified here and a miss is a library bug, not a
/// caller error.
inline LatticePoint lift_g(const TaggedBoundaryElement& e, int d, Int k) {
    const ReconstructionWitness w = lift_witness(e, d, k);
    LatticePoint y = e.point;
    y.push_back(w.alpha_d);
    if (!on_boundary(build_c_star(d), k, y))
        throw std::logic_error("lift: completed point " + detail::point_to_string(y) +
                               " missed the boundary shell");
    return y;
}

/// f: drop alpha_d and tag the prefix — shell when the prefix has a tight
/// window, otherwise the interior copy whose completion reproduces alpha_d.
inline TaggedBoundaryElement project_f(const LatticePoint& x, Int k) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("project: point must have at least one coordinate");
    if (!on_boundary(build_c_star(d), k, x))
        throw std::invalid_argument("project: point " + detail::point_to_string(x) +
                                    " is not on the boundary shell");
    LatticePoint prefix(x.begin(), x.end() - 1);
    const PrefixClass pc = classify_prefix(prefix, k);
    if (pc.shell) return {std::move(prefix), BoundaryTag::Shell};
    const InteriorCandidates c = interior_candidates(prefix, k);
    const Int ad = x.back();
    if (ad == c.alpha1) return {std::move(prefix), BoundaryTag::Copy1};
    if (ad == c.alpha2) return {std::move(prefix), BoundaryTag::Copy2};
    throw std::logic_error("project: alpha_d=" + std::to_string(ad) +
                           " matches neither interior completion at " +
                           detail::point_to_string(x));
}

/// Full reconstruction trace for one shell point: project, then recompute
/// the completion data. Used by the command-line trace output.
inline ReconstructionWitness witness_for(const LatticePoint& x, Int k) {
    const TaggedBoundaryElement e = project_f(x, k);
    return lift_witness(e, static_cast<int>(x.size()), k);
}

struct BijectionReport {
    int dim = 0;
    Int scale = 0;
    BigInt a_size;      // |k dC*_d|
    BigInt b_shell;     // |k dA*_{d-1}|
    BigInt b_interior;  // |(k-1) A*_{d-1}|, counted once (two copies in B)
    std::uint64_t failures = 0;
    std::vector<std::string> failure_samples;  // first few, for reporting

    BigInt b_size() const { return b_shell + 2 * b_interior; }
    bool ok() const { return failures == 0 && a_size == b_size(); }
};

/// Enumerates both sides at (d, k) and checks the round trips pointwise:
/// g(f(x)) = x over the shell of k C*_d, and f(g(e)) = e over all three
/// parts of the target multiset.
inline BijectionReport verify_bijection(int d, Int k, std::uint64_t budget = kDefaultBudget) {
    if (d < 1) throw std::invalid_argument("verify_bijection: dimension must be positive");
    if (k < 1) throw std::invalid_argument("verify_bijection: dilation factor must be positive");
    BijectionReport rep;
    rep.dim = d;
    rep.scale = k;
    const HPolytope cstar = build_c_star(d);
    const HPolytope astar = build_a_star(d - 1);
    auto note = [&rep](std::string msg) {
        ++rep.failures;
        if (rep.failure_samples.size() < 8) rep.failure_samples.push_back(std::move(msg));
    };
    for_each_point(cstar, k, [&](const LatticePoint& x) {
        if (!on_boundary(cstar, k, x)) return;
        ++rep.a_size;
        try {
            const TaggedBoundaryElement e = project_f(x, k);
            if (lift_g(e, d, k) != x)
                note("g(f(x)) != x at x=" + detail::point_to_string(x));
        } catch (const std::exception& ex) {
            note("round trip threw at x=" + detail::point_to_string(x) + ": " + ex.what());
        }
    }, budget);
    auto check_back = [&](const LatticePoint& t, BoundaryTag tag) {
        const TaggedBoundaryElement e{t, tag};
        try {
            if (project_f(lift_g(e, d, k), k) != e)
                note("f(g(e)) != e at " + std::string(to_string(tag)) + " " +
                     detail::point_to_string(t));
        } catch (const std::exception& ex) {
            note("round trip threw at " + std::string(to_string(tag)) + " " +
                 detail::point_to_string(t) + ": " + ex.what());
        }
    };
    for_each_point(astar, k, [&](const LatticePoint& t) {
        if (!on_boundary(astar, k, t)) return;
        ++rep.b_shell;
        check_back(t, BoundaryTag::Shell);
    }, budget);
    for_each_point(astar, k - 1, [&](const LatticePoint& t) {
        ++rep.b_interior;
        check_back(t, BoundaryTag::Copy1);
        check_back(t, BoundaryTag::Copy2);
    }, budget);
    return rep;
}

}  // namespace ehrlab
