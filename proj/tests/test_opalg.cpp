#include <cmath>
#include <sstream>

#include "doctest.h"
#include "nswp/errors.hpp"
#include "nswp/opalg.hpp"

using namespace nswp;

namespace {

// Weyl symbol of op evaluated at a phase-space point.
double symbol(const QuadOp& op, double x, double p) {
    return op.c_pp * p * p + op.c_xx * x * x + op.c_xp * x * p + op.c_x * x + op.c_p * p + op.c_0;
}

AffineMap rotation(double angle, double scale) {
    AffineMap m;
    m.a_xx = std::cos(angle);
    m.a_xp = std::sin(angle) / scale;
    m.a_px = -scale * std::sin(angle);
    m.a_pp = std::cos(angle);
    return m;
}

}  // namespace

TEST_CASE("conjugation by the identity returns the operator") {
    const QuadOp op{0.5, 0.25, 0.125, -1.0, 2.0, 3.0};
    CHECK(conjugate(AffineMap::identity(), op, 1.0) == op);
}

TEST_CASE("translation of a harmonic potential") {
    // x -> x - a on x^2 gives x^2 - 2a x + a^2.
    AffineMap shift;
    shift.s_x = -1.5;
    const QuadOp out = conjugate(shift, QuadOp{0, 1, 0, 0, 0, 0}, 1.0);
    CHECK(approx_equal(out, QuadOp{0, 1, 0, -3.0, 0, 2.25}));
}

TEST_CASE("free shear on a linear potential") {
    // x -> x - t p / m applied to p^2/2m + f x.
    AffineMap shear;
    shear.a_xp = -2.0;
    const QuadOp out = conjugate(shear, QuadOp{0.5, 0, 0, 0.75, 0, 0}, 1.0);
    CHECK(approx_equal(out, QuadOp{0.5, 0, 0, 0.75, -1.5, 0}));
}

TEST_CASE("conjugation is substitution into the symbol") {
    const QuadOp op{0.3, -0.7, 0.45, 1.1, -0.2, 0.9};
    AffineMap m;
    m.a_xx = 1.3;
    m.a_xp = 0.4;
    m.a_px = -0.2;
    m.a_pp = (1.0 + m.a_xp * m.a_px) / m.a_xx;
    m.s_x = 0.6;
    m.s_p = -1.7;
    const QuadOp out = conjugate(m, op, 0.7);
    for (double x : {-2.0, -0.3, 0.0, 1.4}) {
        for (double p : {-1.5, 0.2, 2.5}) {
            const double xs = m.a_xx * x + m.a_xp * p + m.s_x;
            const double ps = m.a_px * x + m.a_pp * p + m.s_p;
            CHECK(symbol(out, x, p) == doctest::Approx(symbol(op, xs, ps)).epsilon(1e-13));
        }
    }
}

TEST_CASE("non-symplectic maps are rejected") {
    AffineMap m;
    m.a_xx = 1.1;
    CHECK_FALSE(m.is_symplectic());
    CHECK_THROWS_AS(conjugate(m, QuadOp{1, 0, 0, 0, 0, 0}, 1.0), SymplecticViolation);
    CHECK_THROWS_AS(conjugate(AffineMap::identity(), QuadOp{}, 0.0), std::invalid_argument);
}

TEST_CASE("compose agrees with nested conjugation") {
    const QuadOp op{0.5, 0.2, -0.3, 0.1, 0.4, -0.6};
    AffineMap a = rotation(0.3, 2.0);
    a.s_x = 0.2;
    a.s_p = -0.1;
    AffineMap b;
    b.a_xp = -0.8;
    b.s_x = 1.0;
    b.s_p = 0.5;
    const QuadOp nested = conjugate(a, conjugate(b, op, 1.0), 1.0);
    const QuadOp composed = conjugate(compose(a, b), op, 1.0);
    CHECK(max_abs_difference(nested, composed) < tol::kCoefficient);
    CHECK(compose(a, b).is_symplectic(tol::kSymplecticResult));
}

TEST_CASE("a thousand small rotations compose to one") {
    const double omega = 1.3;
    const double t = 2.0;
    const int n = 1000;
    const AffineMap step = rotation(omega * t / n, 0.9 * omega);
    AffineMap total = AffineMap::identity();
    for (int i = 0; i < n; ++i) total = compose(total, step);
    const AffineMap closed = rotation(omega * t, 0.9 * omega);
    CHECK(std::abs(total.a_xx - closed.a_xx) < tol::kRotationComposition);
    CHECK(std::abs(total.a_xp - closed.a_xp) < tol::kRotationComposition);
    CHECK(std::abs(total.a_px - closed.a_px) < tol::kRotationComposition);
    CHECK(std::abs(total.a_pp - closed.a_pp) < tol::kRotationComposition);
}

TEST_CASE("decompose and linearity") {
    const QuadOp h{0.5, 0.5, 0, 0, 0, 0};
    const QuadOp ht{0.5, 0.5, 0, -2.0, -1.0, 2.0};
    const QuadOp hc = decompose(h, ht);
    CHECK(is_linear(hc));
    CHECK_FALSE(is_linear(h));
    CHECK(ht + hc == h);
}

TEST_CASE("time-dependent operators reject non-finite input and output") {
    const TimeQuadOp f([](double t) { return QuadOp{0, 0, 0, 1.0 / t, 0, 0}; });
    CHECK(f(2.0).c_x == 0.5);
    CHECK_THROWS_AS(f(0.0), std::domain_error);
    CHECK_THROWS_AS(f(std::nan("")), std::domain_error);
}

TEST_CASE("QuadOp prints its coefficients") {
    std::ostringstream os;
    os << QuadOp{1, 2, 3, 4, 5, 6};
    CHECK(os.str().find('4') != std::string::npos);
}
