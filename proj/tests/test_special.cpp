#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nswp/special.hpp"
#include "nswp/tolerances.hpp"

using namespace nswp;

namespace {

// Error scale: the value itself on the decaying side, the oscillation envelope
// |x|^(1/4 or -1/4) / sqrt(pi) on the oscillatory side.
double airy_scale(double x, double value, bool derivative) {
    if (x >= 0.0) return std::abs(value);
    const double env = std::pow(-x, derivative ? 0.25 : -0.25) / std::sqrt(std::numbers::pi);
    return std::max(env, std::abs(value));
}

// Maclaurin series of Ai, fine near the origin.
double airy_maclaurin(double x) {
    const double c1 = 0.355028053887817239;
    const double c2 = 0.258819403792806798;
    double f = 1.0, g = x, sum_f = 1.0, sum_g = x;
    for (int k = 1; k < 60; ++k) {
        f *= x * x * x / ((3.0 * k - 1.0) * (3.0 * k));
        g *= x * x * x / ((3.0 * k) * (3.0 * k + 1.0));
        sum_f += f;
        sum_g += g;
    }
    return c1 * sum_f - c2 * sum_g;
}

}  // namespace

TEST_CASE("Ai and Ai' against Boost") {
    for (double x = -40.0; x <= 30.0; x += 0.0371) {
        CAPTURE(x);
        const double ai = boost::math::airy_ai(x);
        const double aip = boost::math::airy_ai_prime(x);
        if (ai == 0.0) continue;
        CHECK(std::abs(airy_ai(x) - ai) <= tol::kAiryRelative * airy_scale(x, ai, false));
        CHECK(std::abs(airy_ai_prime(x) - aip) <= tol::kAiryRelative * airy_scale(x, aip, true));
    }
}

TEST_CASE("Ai reference values and Maclaurin series") {
    CHECK(std::abs(airy_ai(0.0) - 0.3550280539) < 1e-10);
    CHECK(std::abs(airy_ai(1.0) - 0.1352924163) < 1e-10);
    for (double x = -3.0; x <= 2.0; x += 0.25) CHECK(std::abs(airy_ai(x) - airy_maclaurin(x)) < 1e-12);
}

TEST_CASE("Ai satisfies y'' = x y and Ai' is its derivative") {
    const double h = 2e-5;
    for (double x = -6.0; x <= 4.0; x += 0.173) {
        CAPTURE(x);
        const double second = (airy_ai_prime(x + h) - airy_ai_prime(x - h)) / (2.0 * h);
        CHECK(std::abs(second - x * airy_ai(x)) < tol::kAiryOde);
        const double first = (airy_ai(x + h) - airy_ai(x - h)) / (2.0 * h);
        CHECK(std::abs(first - airy_ai_prime(x)) < tol::kAiryOde);
    }
}

TEST_CASE("Ai is finite and decays far out") {
    CHECK(airy_ai(200.0) == 0.0);
    CHECK(std::isfinite(airy_ai(-1e4)));
    CHECK(std::abs(airy_ai(-1e4)) < 0.1);
}

TEST_CASE("oscillator eigenfunctions are orthonormal") {
    const PhysicalParams p{1.0, 1.0};
    const double omega = 1.4;
    const int n_points = 4000;
    const double lo = -15.0, hi = 15.0, dx = (hi - lo) / n_points;
    for (int m = 0; m <= 10; ++m) {
        for (int n = m; n <= 10; ++n) {
            double sum = 0.0;
            for (int j = 0; j < n_points; ++j) {
                const double x = lo + j * dx;
                sum += sho_eigenfunction(m, x, p, omega) * sho_eigenfunction(n, x, p, omega);
            }
            CHECK(std::abs(sum * dx - (m == n ? 1.0 : 0.0)) < tol::kOrthonormality);
        }
    }
}

TEST_CASE("oscillator eigenfunctions: closed forms and range") {
    const PhysicalParams p{0.7, 1.9};
    const double omega = 0.8;
    const double a = p.mass * omega / p.hbar;
    for (double x : {-2.0, 0.0, 0.6, 3.1}) {
        const double g = std::pow(a / std::numbers::pi, 0.25) * std::exp(-0.5 * a * x * x);
        CHECK(sho_eigenfunction(0, x, p, omega) == doctest::Approx(g).epsilon(1e-13));
        CHECK(sho_eigenfunction(1, x, p, omega) == doctest::Approx(std::sqrt(2.0 * a) * x * g).epsilon(1e-13));
    }
    CHECK_THROWS_AS(sho_eigenfunction(-1, 0.0, p, omega), std::out_of_range);
    CHECK_THROWS_AS(sho_eigenfunction(kMaxShoLevel + 1, 0.0, p, omega), std::out_of_range);
}
