#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "numbers.hpp"

namespace ehrlab {

/// The four counted families: the root polytopes A_d and C_d and their
/// duals. Only the duals have H-representations in this library; A and C
/// are reached through their counting formulas alone.
enum class Family { A, C, AStar, CStar };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::AStar: return "Astar";
        case Family::CStar: return "Cstar";
    }
    return "?";
}

/// Dense polynomial with exact rational coefficients, coeffs[i] on k^i.
/// For a d-dimensional polytope the length is d + 1.
struct EhrhartPolynomial {
    std::vector<Rational> coeffs;
    int dim = 0;
    std::string label;

    Rational eval(const Rational& k) const {
        Rational v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
        return v;
    }

    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != 0) return static_cast<int>(i);
        return 0;
    }

    bool operator==(const EhrhartPolynomial& other) const { return coeffs == other.coeffs; }
};

namespace detail {

// (poly * (k + c)) for integer c, used to expand falling-factorial products.
inline std::vector<Rational> mul_linear(const std::vector<Rational>& p, Int c) {
    std::vector<Rational> r(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i] * c;
        r[i + 1] += p[i];
    }
    return r;
}

// Coefficients of C(k + s, d) as a polynomial in k: the product
// (k + s)(k + s - 1)...(k + s - d + 1) / d!.
inline std::vector<Rational> binomial_shift_poly(Int s, int d) {
    std::vector<Rational> p{Rational(1)};
    for (int t = 0; t < d; ++t) p = mul_linear(p, s - t);
    const Rational df(factorial(static_cast<unsigned>(d)));
    for (Rational& c : p) c /= df;
    return p;
}

// Coefficients of (k + a)^n.
inline std::vector<Rational> shifted_power_poly(Int a, int n) {
    std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
    BigInt apow = 1;  // a^(n-i) built backwards
    for (int i = n; i >= 0; --i) {
        p[static_cast<std::size_t>(i)] = Rational(binomial(static_cast<unsigned>(n),
                                                           static_cast<unsigned>(i)) * apow);
        apow *= a;
    }
    return p;
}

}  // namespace detail

/// Lattice-point count of the k-th dilate, evaluated from the family's
/// closed form without expanding coefficients:
///   A:  sum_i C(d,i)^2 C(k+d-i, d)        C:  sum_i C(2d,2i) C(k+d-i, d)
///   A*: sum_i C(d+1,i) k^i                C*: (k+1)^d + k^d
/// Binomials in k use the falling-factorial extension, so negative k is a
/// legal argument (needed by the reciprocity-style symmetry checks).
inline Rational eval_closed_form(Family family, int d, Int k) {
    if (d < 1) throw std::invalid_argument("eval_closed_form: dimension must be positive");
    switch (family) {
        case Family::A: {
            Rational s = 0;
            for (int i = 0; i <= d; ++i) {
                const BigInt w = binomial(static_cast<unsigned>(d), static_cast<unsigned>(i));
                s += Rational(w * w) *
                     falling_binomial(Rational(k + (d - i)), static_cast<unsigned>(d));
            }
            return s;
        }
        case Family::C: {
            Rational s = 0;
            for (int i = 0; i <= d; ++i)
                s += Rational(binomial(static_cast<unsigned>(2 * d), static_cast<unsigned>(2 * i))) *
                     falling_binomial(Rational(k + (d - i)), static_cast<unsigned>(d));
            return s;
        }
        case Family::AStar: {
            BigInt s = 0;
            BigInt kp = 1;
            for (int i = 0; i <= d; ++i) {
                s += binomial(static_cast<unsigned>(d) + 1, static_cast<unsigned>(i)) * kp;
                kp *= k;
            }
            return Rational(s);
        }
        case Family::CStar:
            return Rational(ipow(BigInt(k) + 1, static_cast<unsigned>(d)) +
                            ipow(BigInt(k), static_cast<unsigned>(d)));
    }
    throw std::invalid_argument("eval_closed_form: unknown family");
}

/// The same closed forms with coefficients expanded exactly.
inline EhrhartPolynomial closed_form_polynomial(Family family, int d) {
    if (d < 1) throw std::invalid_argument("closed_form_polynomial: dimension must be positive");
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    EhrhartPolynomial p{std::vector<Rational>(n, Rational(0)), d,
                        std::string(to_string(family)) + "/closed-form"};
    switch (family) {
        case Family::A:
        case Family::C: {
            for (int i = 0; i <= d; ++i) {
                BigInt w;
                if (family == Family::A) {
                    w = binomial(static_cast<unsigned>(d), static_cast<unsigned>(i));
                    w *= w;
                } else {
                    w = binomial(static_cast<unsigned>(2 * d), static_cast<unsigned>(2 * i));
                }
                const std::vector<Rational> term = detail::binomial_shift_poly(d - i, d);
                for (std::size_t t = 0; t < term.size() && t < n; ++t)
                    p.coeffs[t] += Rational(w) * term[t];
            }
            return p;
        }
        case Family::AStar: {
            for (int i = 0; i <= d; ++i)
                p.coeffs[static_cast<std::size_t>(i)] =
                    Rational(binomial(static_cast<unsigned>(d) + 1, static_cast<unsigned>(i)));
            return p;
        }
        case Family::CStar: {
            const std::vector<Rational> kp1 = detail::shifted_power_poly(1, d);
            for (std::size_t t = 0; t < n; ++t) p.coeffs[t] = kp1[t];
            p.coeffs[static_cast<std::size_t>(d)] += 1;  // + k^d
            return p;
        }
    }
    throw std::invalid_argument("closed_form_polynomial: unknown family");
}

/// Exact Lagrange interpolation: the unique polynomial of degree <= d
/// through d+1 nodes (k_i, value_i). Coefficients come out as rationals
/// with no rounding anywhere.
inline EhrhartPolynomial interpolate(const std::vector<std::pair<Int, BigInt>>& nodes, int d) {
    if (d < 0) throw std::invalid_argument("interpolate: degree must be nonnegative");
    if (static_cast<int>(nodes.size()) != d + 1)
        throw std::invalid_argument("interpolate: need exactly d+1 nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("interpolate: duplicate node k=" +
                                            std::to_string(nodes[i].first));
    EhrhartPolynomial p{std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(0)), d,
                        "interpolated"};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = detail::mul_linear(basis, -nodes[j].first);
            denom *= Rational(nodes[i].first - nodes[j].first);
        }
        const Rational w = Rational(nodes[i].second) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) p.coeffs[t] += w * basis[t];
    }
    return p;
}

struct ReflexivityResult {
    bool ok = true;
    std::optional<Int> first_failure_k;
};

/// Counting characterization of reflexivity: every lattice point of kP
/// outside (k-1)P lies on the boundary shell, i.e.
/// |kP| - |(k-1)P| = |k dP| for k = 1..k_max. Counts are enumerated, not
/// taken from formulas, so this cross-checks the three counters too.
inline ReflexivityResult reflexivity_check(const HPolytope& P, Int k_max,
                                           std::uint64_t budget = kDefaultBudget) {
    if (k_max < 1) throw std::invalid_argument("reflexivity_check: k_max must be positive");
    BigInt prev = count_points(P, 0, budget);
    for (Int k = 1; k <= k_max; ++k) {
        const CountResult c = count(P, k, budget);
        if (c.total - prev != c.boundary) return {false, k};
        prev = c.total;
    }
    return {true, std::nullopt};
}

/// Coefficient identity p(k) = (-1)^d p(-k-1): the palindromy that forces
/// every root onto pairs mirrored across Re(z) = -1/2.
inline bool canonical_symmetry_check(const EhrhartPolynomial& p) {
    std::vector<Rational> reflected(p.coeffs.size(), Rational(0));
    // p(-k-1) = sum_i c_i (-1)^i (k+1)^i, expanded by the binomial theorem.
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        const Rational c = (i % 2 == 0) ? p.coeffs[i] : -p.coeffs[i];
        for (std::size_t j = 0; j <= i; ++j)
            reflected[j] += c * Rational(binomial(static_cast<unsigned>(i),
                                                  static_cast<unsigned>(j)));
    }
    if (p.dim % 2 != 0)
        for (Rational& c : reflected) c = -c;
    return reflected == p.coeffs;
}

}  // namespace ehrlab
