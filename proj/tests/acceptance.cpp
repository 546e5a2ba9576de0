// Acceptance gate: one line per criterion, exit code = number of failures.
//
// Everything here recomputes from scratch through the public headers; no
// fixture files. Tolerances are pinned in the constants below and are not
// meant to be tuned.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ehrlab/ehrlab.hpp"

using namespace ehrlab;

namespace {

constexpr double kRootMatchTol = 1e-6;
constexpr double kLineTol = 1e-8;
constexpr double kResidualTol = 1e-10;

int failures = 0;

void report(int index, bool pass, const std::string& what, const std::string& detail) {
    std::printf("criterion %d %s  %s%s%s\n", index, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

// 1. Exact dual-C counts against the two-power formula, d <= 5, k <= 4.
void criterion_counts_c() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 5 && ok; ++d) {
        const HPolytope P = build_c_star(d);
        for (Int k = 0; k <= 4 && ok; ++k) {
            const BigInt want = ipow(BigInt(k) + 1, static_cast<unsigned>(d)) +
                                ipow(BigInt(k), static_cast<unsigned>(d));
            const BigInt got = count_points(P, k);
            if (got != want) {
                ok = false;
                detail = "Cstar d=" + std::to_string(d) + " k=" + std::to_string(k) +
                         ": counted " + got.str() + ", formula " + want.str();
            }
        }
    }
    report(1, ok, "dual-C counts equal (k+1)^d + k^d for d<=5, k<=4", detail);
}

// 2. Exact dual-A counts against the consecutive-power difference.
void criterion_counts_a() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 5 && ok; ++d) {
        const HPolytope P = build_a_star(d);
        for (Int k = 0; k <= 4 && ok; ++k) {
            const BigInt want = ipow(BigInt(k) + 1, static_cast<unsigned>(d) + 1) -
                                ipow(BigInt(k), static_cast<unsigned>(d) + 1);
            const BigInt got = count_points(P, k);
            if (got != want) {
                ok = false;
                detail = "Astar d=" + std::to_string(d) + " k=" + std::to_string(k) +
                         ": counted " + got.str() + ", formula " + want.str();
            }
        }
    }
    report(2, ok, "dual-A counts equal (k+1)^(d+1) - k^(d+1) for d<=5, k<=4", detail);
}

// 3. Shell reduction: |k dC*_d| = |k dA*_{d-1}| + 2 |(k-1) A*_{d-1}|.
void criterion_shell_reduction() {
    std::string detail;
    bool ok = true;
    for (int d = 2; d <= 5 && ok; ++d) {
        const HPolytope cstar = build_c_star(d);
        const HPolytope astar = build_a_star(d - 1);
        for (Int k = 1; k <= 4 && ok; ++k) {
            const BigInt lhs = count_boundary(cstar, k);
            const BigInt rhs = count_boundary(astar, k) + 2 * count_points(astar, k - 1);
            if (lhs != rhs) {
                ok = false;
                detail = "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " +
                         lhs.str() + " != " + rhs.str();
            }
        }
    }
    report(3, ok, "shell counts reduce one rank for 2<=d<=5, k<=4", detail);
}

// 4. Bijection round trips plus well-definedness and distinctness, d <= 5, k <= 3.
void criterion_bijection() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 5 && ok; ++d) {
        for (Int k = 1; k <= 3 && ok; ++k) {
            const BijectionReport rep = verify_bijection(d, k);
            if (!rep.ok()) {
                ok = false;
                detail = "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " +
                         std::to_string(rep.failures) + " round-trip failures, |A|=" +
                         rep.a_size.str() + " |B|=" + rep.b_size().str();
                if (!rep.failure_samples.empty()) detail += " (" + rep.failure_samples[0] + ")";
                break;
            }
            const HPolytope astar = build_a_star(d - 1);
            const int n = d - 1;
            // well-definedness: every tight window gives the same completion
            for_each_point(astar, k, [&](const LatticePoint& t) {
                if (!ok || !on_boundary(astar, k, t)) return;
                const Int lifted = lift_witness({t, BoundaryTag::Shell}, d, k).alpha_d;
                for (int i = 1; i <= n && ok; ++i)
                    for (int j = i; j <= n && ok; ++j) {
                        const Int s = interval_sum(t, i, j);
                        if (s != k && s != -k) continue;
                        const Int tail = interval_sum(t, j + 1, n);
                        const Int alpha = s == k ? -k - 2 * tail : k - 2 * tail;
                        if (alpha != lifted) {
                            ok = false;
                            detail = "completion differs across tight windows at d=" +
                                     std::to_string(d) + " k=" + std::to_string(k);
                        }
                    }
            });
            // distinctness: the two interior completions never collide
            for_each_point(astar, k - 1, [&](const LatticePoint& t) {
                if (!ok) return;
                const InteriorCandidates c = interior_candidates(t, k);
                if (c.alpha1 == c.alpha2) {
                    ok = false;
                    detail = "interior completions collide at d=" + std::to_string(d) +
                             " k=" + std::to_string(k);
                }
            });
        }
    }
    report(4, ok, "bijection round trips, well-defined and distinct for d<=5, k<=3", detail);
}

// 5. Interpolation of enumerated dual-C counts matches the expanded formula.
void criterion_interpolation() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 5 && ok; ++d) {
        const HPolytope P = build_c_star(d);
        std::vector<std::pair<Int, BigInt>> nodes;
        for (Int k = 0; k <= d; ++k) nodes.emplace_back(k, count_points(P, k));
        if (!(interpolate(nodes, d) == closed_form_polynomial(Family::CStar, d))) {
            ok = false;
            detail = "coefficient mismatch at d=" + std::to_string(d);
        }
    }
    report(5, ok, "interpolated counts match the expanded closed form for d<=5", detail);
}

// 6. Numeric spectra against the closed-form tables, with the line verdict.
void criterion_roots() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 20 && ok; ++d) {
        const std::vector<CanonicalRoot> closed = closed_form_roots(d);
        for (const CanonicalRoot& r : closed) {
            if (r.value().real() != -0.5) {
                ok = false;
                detail = "table root off the line at d=" + std::to_string(d);
            }
        }
        if (!ok) break;
        const std::vector<Complex> numeric =
            numeric_roots(closed_form_polynomial(Family::CStar, d));
        double dev = 0;
        for (std::size_t i = 0; i < closed.size(); ++i)
            dev = std::max(dev, std::abs(numeric[i] - closed[i].value()));
        const ClVerdict cl = cl_check(numeric, kLineTol);
        if (dev > kRootMatchTol || !cl.on_line) {
            ok = false;
            detail = "d=" + std::to_string(d) + ": root_dev=" + format_double(dev) +
                     " re_dev=" + format_double(cl.max_deviation);
        }
    }
    report(6, ok, "numeric roots within 1e-6 of the tables and on the line (1e-8), d<=20",
           detail);
}

// 7. Interlacing of consecutive spectra through d = 50.
void criterion_interlacing() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d + 1 <= 50 && ok; ++d) {
        const InterlacingReport rep = interlace_check(d);
        if (!rep.nonstrict || !rep.strict) {
            ok = false;
            detail = "pair (" + std::to_string(d) + "," + std::to_string(d + 1) + ")";
        }
    }
    report(7, ok, "consecutive spectra interlace strictly up to d=50", detail);
}

// 8. Enumerated shell consistency and the palindromic coefficient symmetry.
void criterion_symmetry() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 4 && ok; ++d) {
        for (const HPolytope& P : {build_a_star(d), build_c_star(d)}) {
            const ReflexivityResult r = reflexivity_check(P, 4);
            if (!r.ok) {
                ok = false;
                detail = std::string("shell consistency failed for ") + to_string(P.label) +
                         " d=" + std::to_string(d) + " at k=" +
                         std::to_string(r.first_failure_k.value_or(-1));
            }
        }
    }
    for (int d = 1; d <= 10 && ok; ++d) {
        for (const Family f : {Family::A, Family::C, Family::AStar, Family::CStar}) {
            if (!canonical_symmetry_check(closed_form_polynomial(f, d))) {
                ok = false;
                detail = std::string("coefficient symmetry failed for ") + to_string(f) +
                         " d=" + std::to_string(d);
            }
        }
    }
    report(8, ok, "shell consistency (d<=4, k<=4) and coefficient symmetry (d<=10)", detail);
}

// 9. The closed-form tables satisfy their defining equation to 1e-10, d <= 50.
void criterion_residual() {
    std::string detail;
    bool ok = true;
    for (int d = 1; d <= 50 && ok; ++d) {
        const double res = max_defining_residual(d);
        if (res > kResidualTol) {
            ok = false;
            detail = "d=" + std::to_string(d) + ": residual=" + format_double(res);
        }
    }
    report(9, ok, "defining-equation residual <= 1e-10 for d<=50", detail);
}

}  // namespace

int main() {
    criterion_counts_c();
    criterion_counts_a();
    criterion_shell_reduction();
    criterion_bijection();
    criterion_interpolation();
    criterion_roots();
    criterion_interlacing();
    criterion_symmetry();
    criterion_residual();
    std::printf("ACCEPTANCE: %d/9 criteria passed\n", 9 - failures);
    return failures;
}
