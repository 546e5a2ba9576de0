#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart.hpp"

namespace ehrlab {

using Complex = std::complex<double>;

inline constexpr double kCanonicalRealPart = -0.5;
inline constexpr double kDefaultClTol = 1e-8;        // max |Re(z) + 1/2|
inline constexpr double kDefaultMatchTol = 1e-6;     // root-to-root pairing distance
inline constexpr double kDefaultResidualTol = 1e-10; // relative defining-equation residual
inline constexpr int kMaxNumericDegree = 60;         // double coefficients stay exact below this

/// One root of (k+1)^d + k^d = 0, indexed by j = 1..d:
///   theta = (2j-1) pi / d,   z = -1/2 + i sin(theta) / (2(1 - cos(theta))).
struct CanonicalRoot {
    int dim = 0;
    int j = 0;
    double theta = 0;
    double imag = 0;
    Complex unit;  // e^{i theta}, kept for auditing the derivation

    Complex value() const { return {kCanonicalRealPart, imag}; }
};

/// All d closed-form roots, sorted by descending imaginary part (that is,
/// ascending j: the imaginary part is strictly decreasing in theta). The
/// imaginary part is computed in the half-angle form
///   sin(theta) / (2(1 - cos(theta))) = cos(theta/2) / (2 sin(theta/2)),
/// which avoids the cancellation in 1 - cos(theta) for small theta, and the
/// conjugate partner j <-> d+1-j is mirrored exactly so pairs are bit-equal
/// (odd d gets an exact 0 at theta = pi).
inline std::vector<CanonicalRoot> closed_form_roots(int d) {
    if (d < 1) throw std::invalid_argument("closed_form_roots: dimension must be positive");
    std::vector<CanonicalRoot> roots(static_cast<std::size_t>(d));
    const double pi = std::numbers::pi;
    for (int j = 1; 2 * j <= d + 1; ++j) {
        const double theta = (2.0 * j - 1.0) * pi / d;
        const double half = 0.5 * theta;
        const double im = (2 * j == d + 1) ? 0.0 : std::cos(half) / (2.0 * std::sin(half));
        roots[static_cast<std::size_t>(j) - 1] =
            {d, j, theta, im, {std::cos(theta), std::sin(theta)}};
        const int jm = d + 1 - j;
        if (jm != j) {
            const double theta_m = (2.0 * jm - 1.0) * pi / d;
            roots[static_cast<std::size_t>(jm) - 1] =
                {d, jm, theta_m, -im, {std::cos(theta_m), std::sin(theta_m)}};
        }
    }
    return roots;
}

/// Canonical presentation order for numeric root sets: descending imaginary
/// part, ties by ascending real part.
inline void sort_roots(std::vector<Complex>& roots) {
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.imag() != b.imag()) return a.imag() > b.imag();
        return a.real() < b.real();
    });
}

struct RootSolverOptions {
    int max_iterations = 400;
    double step_tol = 1e-13;      // relative simultaneous-step size
    double residual_factor = 8.0; // multiplies the per-point rounding floor
};

namespace detail {

// p(z) and p'(z) in one Horner pass; coefficients ascending.
inline std::pair<Complex, Complex> horner2(const std::vector<Complex>& c, Complex z) {
    Complex p = 0, dp = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

// sum_i |c_i| |z|^i — the natural scale of rounding error in a Horner
// evaluation at z. A residual at or below eps times this is
// indistinguishable from an exact zero in double precision.
inline double coeff_scale(const std::vector<Complex>& c, double abs_z) {
    double s = 0, zp = 1;
    for (const Complex& ci : c) {
        s += std::abs(ci) * zp;
        zp *= abs_z;
    }
    return s;
}

inline Complex cpow(Complex z, int e) {
    Complex r = 1;
    while (e) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous iteration on ascending coefficients.
/// Convergence is declared per point when |p(z)| falls to the rounding
/// floor residual_factor * n * eps * sum |c_i||z|^i — a criterion that,
/// unlike a pure step-size test, also terminates on multiple roots (where
/// Newton steps stall at ~sqrt(eps) from the cluster). Throws
/// invalid_argument for degree < 1 and runtime_error when the iteration
/// cap is hit without convergence.
inline std::vector<Complex> aberth_roots(std::vector<Complex> coeffs,
                                         const RootSolverOptions& opt = {}) {
    while (!coeffs.empty() && coeffs.back() == Complex(0)) coeffs.pop_back();
    if (coeffs.size() < 2)
        throw std::invalid_argument("aberth_roots: polynomial must have degree >= 1");
    std::vector<Complex> found;
    while (coeffs.front() == Complex(0)) {  // exact roots at the origin
        found.push_back(0);
        coeffs.erase(coeffs.begin());
        if (coeffs.size() == 1) {
            sort_roots(found);
            return found;
        }
    }
    const std::size_t n = coeffs.size() - 1;
    if (n == 1) {
        found.push_back(-coeffs[0] / coeffs[1]);
        sort_roots(found);
        return found;
    }
    // Fujiwara bound on root modulus, then equally spaced starting points on
    // that circle around the root centroid. The 0.37 phase keeps the ring
    // off the axes so real/conjugate symmetry cannot trap the iteration.
    const Complex lead = coeffs[n];
    double radius = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::abs(coeffs[i] / lead);
        if (m > 0)
            radius = std::max(radius, std::pow(m, 1.0 / static_cast<double>(n - i)));
    }
    radius = 2.0 * radius + 1e-6;
    const Complex center = -coeffs[n - 1] / (lead * static_cast<double>(n));
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(n) + 0.37;
        z[j] = center + radius * Complex(std::cos(phi), std::sin(phi));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        bool all_floored = true;
        double max_step = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto [p, dp] = detail::horner2(coeffs, z[j]);
            const double floor =
                opt.residual_factor * static_cast<double>(n) * eps *
                detail::coeff_scale(coeffs, std::abs(z[j]));
            if (std::abs(p) <= floor) continue;  // at the attainable accuracy
            all_floored = false;
            if (dp == Complex(0)) {  // stationary point: nudge off it
                z[j] += Complex(1e-8 * (1.0 + std::abs(z[j])), 1e-8);
                max_step = std::numeric_limits<double>::infinity();
                continue;
            }
            const Complex w = p / dp;
            Complex s = 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (l == j) continue;
                const Complex diff = z[j] - z[l];
                if (diff == Complex(0)) continue;  // collided points: plain Newton
                s += Complex(1) / diff;
            }
            const Complex denom = Complex(1) - w * s;
            const Complex delta = (std::abs(denom) < 1e-300) ? w : w / denom;
            z[j] -= delta;
            max_step = std::max(max_step, std::abs(delta) / (1.0 + std::abs(z[j])));
        }
        if (all_floored || max_step <= opt.step_tol) {
            // The simultaneous phase parks every point at the sweep-wide
            // floor; a few plain Newton steps per root then descend to the
            // per-point rounding floor. Best-residual tracking keeps the
            // polish monotone even where the evaluation is pure noise
            // (multiple roots, ill-conditioned clusters).
            for (Complex& zj : z) {
                Complex best = zj;
                double best_res = std::abs(detail::horner2(coeffs, zj).first);
                Complex w = zj;
                for (int it = 0; it < 24; ++it) {
                    const auto [p, dp] = detail::horner2(coeffs, w);
                    if (std::abs(p) < best_res) {
                        best_res = std::abs(p);
                        best = w;
                    }
                    if (dp == Complex(0)) break;
                    const Complex step = p / dp;
                    w -= step;
                    if (std::abs(step) <= eps * (1.0 + std::abs(w))) {
                        const double res = std::abs(detail::horner2(coeffs, w).first);
                        if (res < best_res) best = w;
                        break;
                    }
                }
                zj = best;
            }
            found.insert(found.end(), z.begin(), z.end());
            sort_roots(found);
            return found;
        }
    }
    throw std::runtime_error("aberth_roots: no convergence within iteration cap");
}

/// Roots of an exact-coefficient polynomial through the simultaneous
/// iteration. Degrees above kMaxNumericDegree are refused: binomial-sized
/// coefficients are no longer exactly representable in double there, so the
/// answer would silently degrade instead.
inline std::vector<Complex> numeric_roots(const EhrhartPolynomial& p,
                                          const RootSolverOptions& opt = {}) {
    if (p.degree() < 1) throw std::invalid_argument("numeric_roots: degree must be >= 1");
    if (p.degree() > kMaxNumericDegree)
        throw std::invalid_argument("numeric_roots: degree exceeds the double-precision guard");
    std::vector<Complex> c;
    c.reserve(p.coeffs.size());
    for (const Rational& r : p.coeffs) {
        const double v = r.convert_to<double>();
        if (!std::isfinite(v))
            throw std::invalid_argument("numeric_roots: coefficient overflows double");
        c.emplace_back(v, 0.0);
    }
    return aberth_roots(std::move(c), opt);
}

struct ClVerdict {
    bool on_line = false;
    double max_deviation = 0;  // max |Re(z) + 1/2|
};

/// Does every root sit on the canonical line Re(z) = -1/2, within tol?
inline ClVerdict cl_check(const std::vector<Complex>& roots, double tol = kDefaultClTol) {
    if (roots.empty()) throw std::invalid_argument("cl_check: empty root set");
    if (tol <= 0) throw std::invalid_argument("cl_check: tolerance must be positive");
    double dev = 0;
    for (const Complex& z : roots) dev = std::max(dev, std::abs(z.real() - kCanonicalRealPart));
    return {dev <= tol, dev};
}

namespace detail {

// Perfect matching in the tol-ball bipartite graph (Kuhn augmenting paths).
inline bool perfect_matching(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    std::function<bool(int, std::vector<char>&)> augment =
        [&](int u, std::vector<char>& seen) -> bool {
        for (const int v : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 ||
                augment(match_right[static_cast<std::size_t>(v)], seen)) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        if (!augment(u, seen)) return false;
    }
    return true;
}

}  // namespace detail

/// Is the root multiset invariant under z -> -1 - conj(z) (reflection
/// across Re(z) = -1/2)? A greedy pass pairs the canonically sorted lists
/// element by element; if that misses — possible when near-ties sort
/// differently on the two sides — the check escalates to an exact bipartite
/// matching within tol before answering no.
inline bool symmetry_check(const std::vector<Complex>& roots, double tol = kDefaultMatchTol) {
    if (tol <= 0) throw std::invalid_argument("symmetry_check: tolerance must be positive");
    if (roots.empty()) return true;
    std::vector<Complex> a = roots, b;
    b.reserve(roots.size());
    for (const Complex& z : roots) b.emplace_back(-1.0 - z.real(), z.imag());
    sort_roots(a);
    sort_roots(b);
    bool greedy = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) {
            greedy = false;
            break;
        }
    if (greedy) return true;
    std::vector<std::vector<int>> adj(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (std::abs(a[i] - b[j]) <= tol) adj[i].push_back(static_cast<int>(j));
    return detail::perfect_matching(adj);
}

/// Interlacing verdict for the consecutive pair (d, d+1), read along the
/// canonical line. t holds the d+1 positions of the larger system, s the d
/// positions of the smaller, both ascending; the claim is the sandwich
/// t_1 <= s_1 <= t_2 <= ... <= s_d <= t_{d+1} (strictly, in fact). The
/// angle_chain field re-derives strictness in exact integer arithmetic from
/// theta_(d+1,j) < theta_(d,j) < theta_(d+1,j+1), independent of floating
/// point.
struct InterlacingReport {
    int dim = 0;  // the smaller degree d
    std::vector<double> t;
    std::vector<double> s;
    bool nonstrict = false;
    bool strict = false;
    bool angle_chain = false;
};

inline InterlacingReport interlace_check(int d) {
    if (d < 1) throw std::invalid_argument("interlace_check: dimension must be positive");
    InterlacingReport rep;
    rep.dim = d;
    for (const CanonicalRoot& r : closed_form_roots(d + 1)) rep.t.push_back(r.imag);
    for (const CanonicalRoot& r : closed_form_roots(d)) rep.s.push_back(r.imag);
    std::sort(rep.t.begin(), rep.t.end());
    std::sort(rep.s.begin(), rep.s.end());
    rep.nonstrict = true;
    rep.strict = true;
    for (int i = 0; i < d; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        if (!(rep.t[ui] <= rep.s[ui] && rep.s[ui] <= rep.t[ui + 1])) rep.nonstrict = false;
        if (!(rep.t[ui] < rep.s[ui] && rep.s[ui] < rep.t[ui + 1])) rep.strict = false;
    }
    // (2j-1)/(d+1) < (2j-1)/d is immediate; the content is
    // (2j-1)/d < (2j+1)/(d+1), i.e. (2j-1)(d+1) < (2j+1)d. Int is exact here.
    rep.angle_chain = true;
    for (Int j = 1; j <= d; ++j)
        if (!((2 * j - 1) * (d + 1) < (2 * j + 1) * d)) rep.angle_chain = false;
    return rep;
}

/// Largest relative residual |(z+1)^d + z^d| / (|z+1|^d + |z|^d) over the
/// closed-form roots — how well the tabulated values satisfy their defining
/// equation in double arithmetic.
inline double max_defining_residual(int d) {
    double worst = 0;
    for (const CanonicalRoot& r : closed_form_roots(d)) {
        const Complex z = r.value();
        const Complex a = detail::cpow(z + Complex(1), d);
        const Complex b = detail::cpow(z, d);
        worst = std::max(worst, std::abs(a + b) / (std::abs(a) + std::abs(b)));
    }
    return worst;
}

}  // namespace ehrlab
