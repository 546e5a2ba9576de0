#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ehrlab/roots.hpp"

using namespace ehrlab;

namespace {

// Worst nearest-neighbor distance from each wanted root to the computed set.
double match_dev(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    REQUIRE(got.size() == want.size());
    double worst = 0;
    for (const Complex& w : want) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& g : got) best = std::min(best, std::abs(g - w));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

TEST_CASE("closed-form root tables at small degree") {
    const std::vector<CanonicalRoot> r1 = closed_form_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].imag == 0.0);
    CHECK(r1[0].value() == Complex(-0.5, 0.0));

    const std::vector<CanonicalRoot> r2 = closed_form_roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(std::abs(r2[0].imag - 0.5) < 1e-15);
    CHECK(r2[1].imag == -r2[0].imag);  // mirrored, not recomputed

    const std::vector<CanonicalRoot> r3 = closed_form_roots(3);
    REQUIRE(r3.size() == 3);
    CHECK(std::abs(r3[0].imag - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(r3[1].imag == 0.0);  // theta = pi, pinned exactly
    CHECK(r3[2].imag == -r3[0].imag);

    CHECK_THROWS_AS(closed_form_roots(0), std::invalid_argument);
}

TEST_CASE("closed-form tables are ordered, mirrored and on the line") {
    for (int d = 1; d <= 200; ++d) {
        const std::vector<CanonicalRoot> roots = closed_form_roots(d);
        REQUIRE(static_cast<int>(roots.size()) == d);
        for (int j = 0; j < d; ++j) {
            CHECK(roots[j].j == j + 1);
            CHECK(roots[j].value().real() == -0.5);
            CHECK(roots[j].theta > 0.0);
            CHECK(roots[j].theta < 2.0 * std::numbers::pi);
            CHECK(std::abs(std::abs(roots[j].unit) - 1.0) < 1e-14);
            CHECK(roots[j].imag == -roots[d - 1 - j].imag);  // exact conjugate pairing
            if (j > 0) CHECK(roots[j - 1].imag > roots[j].imag);
        }
        if (d % 2 == 1) CHECK(roots[d / 2].imag == 0.0);
    }
}

TEST_CASE("simultaneous iteration on easy polynomials") {
    // (x-1)(x-2)(x-3), ascending coefficients
    std::vector<Complex> roots = aberth_roots({-6, 11, -6, 1});
    CHECK(match_dev(roots, {Complex(1), Complex(2), Complex(3)}) < 1e-10);

    roots = aberth_roots({1, 2, 2});  // 2k^2 + 2k + 1
    CHECK(match_dev(roots, {Complex(-0.5, 0.5), Complex(-0.5, -0.5)}) < 1e-12);

    roots = aberth_roots({1, 2});
    CHECK(match_dev(roots, {Complex(-0.5)}) < 1e-15);

    roots = aberth_roots({6, -5, 1, 0});  // trailing zero coefficient is ignored
    CHECK(match_dev(roots, {Complex(2), Complex(3)}) < 1e-10);

    roots = aberth_roots({0, 0, 1});  // x^2: exact zeros split off symbolically
    CHECK(roots == std::vector<Complex>{Complex(0), Complex(0)});

    CHECK_THROWS_AS(aberth_roots({5}), std::invalid_argument);
    CHECK_THROWS_AS(aberth_roots({}), std::invalid_argument);
}

TEST_CASE("residual-floor stop survives a double root") {
    // (k+1)^2 stalls any pure step-size criterion: Newton steps contract by
    // only 1/2 near a double root. The rounding-floor test ends the run once
    // the cluster is resolved to ~sqrt(eps).
    const std::vector<Complex> roots = aberth_roots({1, 2, 1});
    REQUIRE(roots.size() == 2);
    for (const Complex& z : roots) CHECK(std::abs(z - Complex(-1)) < 1e-6);
}

TEST_CASE("numeric spectra agree with the closed-form tables") {
    for (int d = 1; d <= 20; ++d) {
        const std::vector<Complex> numeric =
            numeric_roots(closed_form_polynomial(Family::CStar, d));
        const std::vector<CanonicalRoot> closed = closed_form_roots(d);
        REQUIRE(numeric.size() == closed.size());
        double dev = 0;
        for (std::size_t i = 0; i < closed.size(); ++i)
            dev = std::max(dev, std::abs(numeric[i] - closed[i].value()));
        INFO("d=", d, " dev=", dev);
        CHECK(dev < 1e-6);
    }
}

TEST_CASE("degree guards on the numeric solver") {
    EhrhartPolynomial constant{{Rational(5)}, 0, "test"};
    CHECK_THROWS_AS(numeric_roots(constant), std::invalid_argument);
    CHECK_THROWS_AS(numeric_roots(closed_form_polynomial(Family::CStar, 61)),
                    std::invalid_argument);
}

TEST_CASE("line verdicts") {
    std::vector<Complex> on_line;
    for (const CanonicalRoot& r : closed_form_roots(7)) on_line.push_back(r.value());
    const ClVerdict good = cl_check(on_line);
    CHECK(good.on_line);
    CHECK(good.max_deviation == 0.0);

    const ClVerdict bad = cl_check({Complex(-1), Complex(0)}, 1e-8);
    CHECK_FALSE(bad.on_line);
    CHECK(bad.max_deviation == 0.5);

    CHECK_THROWS_AS(cl_check({}), std::invalid_argument);
    CHECK_THROWS_AS(cl_check(on_line, 0.0), std::invalid_argument);
}

TEST_CASE("reflection symmetry of root multisets") {
    std::vector<Complex> roots;
    for (const CanonicalRoot& r : closed_form_roots(5)) roots.push_back(r.value());
    CHECK(symmetry_check(roots));

    CHECK(symmetry_check(numeric_roots(closed_form_polynomial(Family::C, 3))));
    CHECK(symmetry_check({}));
    CHECK_FALSE(symmetry_check({Complex(0, 0)}, 1e-6));
    CHECK_THROWS_AS(symmetry_check(roots, -1.0), std::invalid_argument);

    // Greedy pairing fails on this pair (sorted orders cross), but a perfect
    // matching inside the tolerance balls exists; the check must escalate.
    CHECK(symmetry_check({Complex(0, 0), Complex(-1, 0.6)}, 0.7));
    CHECK_FALSE(symmetry_check({Complex(0, 0), Complex(-1, 0.6)}, 0.3));
}

TEST_CASE("consecutive spectra interlace along the line") {
    const InterlacingReport r1 = interlace_check(1);
    REQUIRE(r1.t.size() == 2);
    REQUIRE(r1.s.size() == 1);
    CHECK(r1.s[0] == 0.0);
    CHECK(r1.nonstrict);
    CHECK(r1.strict);
    CHECK(r1.angle_chain);

    for (int d = 1; d <= 50; ++d) {
        const InterlacingReport rep = interlace_check(d);
        INFO("d=", d);
        CHECK(rep.nonstrict);
        CHECK(rep.strict);
        CHECK(rep.angle_chain);
    }

    CHECK_THROWS_AS(interlace_check(0), std::invalid_argument);
}

TEST_CASE("closed-form roots satisfy their defining equation") {
    for (int d = 1; d <= 50; ++d) {
        INFO("d=", d);
        CHECK(max_defining_residual(d) <= 1e-10);
    }
}
