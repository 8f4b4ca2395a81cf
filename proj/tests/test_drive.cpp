#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "nswp/drive.hpp"
#include "nswp/errors.hpp"
#include "nswp/tolerances.hpp"

using namespace nswp;

namespace {

// Composite Gauss-Legendre (5 points per panel) of f on [0, t].
template <class F>
double gauss_integral(F f, double t, int panels = 400) {
    static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                    0.9061798459386640};
    static const double weights[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                      0.4786286704993665, 0.2369268850561891};
    const double h = t / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double mid = (i + 0.5) * h;
        for (int k = 0; k < 5; ++k) sum += weights[k] * f(mid + 0.5 * h * nodes[k]);
    }
    return 0.5 * h * sum;
}

std::vector<std::pair<double, double>> sample(double (*f)(double), double h, int count) {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i < count; ++i) s.emplace_back(i * h, f(i * h));
    return s;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("nswp_test_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("constant drive integrals") {
    const Drive d(ConstantDrive{0.7});
    for (double t : {0.0, 0.5, 2.0, 4.5}) {
        CHECK(d.force(t) == 0.7);
        CHECK(d.alpha(t) == doctest::Approx(0.7 * t).epsilon(1e-14));
        CHECK(d.beta(t) == doctest::Approx(0.35 * t * t).epsilon(1e-14));
        CHECK(d.alpha_sq_integral(t) == doctest::Approx(0.49 * t * t * t / 3.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(d.alpha(-1.0), std::domain_error);
}

TEST_CASE("cosine drive integrals against Gauss-Legendre") {
    const double f0 = 0.5;
    const double w = 2.0;
    const Drive d(CosineDrive{f0, w});
    auto force = [&](double s) { return f0 * std::cos(w * s); };
    for (double t : {0.3, 1.0, 2.7, 5.0}) {
        const double a = gauss_integral(force, t);
        const double b = gauss_integral([&](double s) { return gauss_integral(force, s, 50); }, t, 50);
        const double a2 = gauss_integral([&](double s) { double v = gauss_integral(force, s, 50); return v * v; }, t, 50);
        CHECK(std::abs(d.alpha(t) - a) < tol::kQuadrature);
        CHECK(std::abs(d.beta(t) - b) < tol::kQuadrature);
        CHECK(std::abs(d.alpha_sq_integral(t) - a2) < tol::kQuadrature);
    }
}

TEST_CASE("tabulated polynomial drives are integrated exactly") {
    // F = t^2: alpha = t^3/3, beta = t^4/12, int alpha^2 = t^7/63.
    const TabulatedDrive odd(sample([](double t) { return t * t; }, 0.25, 8));   // 7 intervals, cubic tail
    const TabulatedDrive even(sample([](double t) { return t * t; }, 0.25, 9));  // 8 intervals
    for (const TabulatedDrive* d : {&odd, &even}) {
        for (double t : {0.0, 0.1, 0.6, 1.0, d->t_end()}) {
            CHECK(d->force(t) == doctest::Approx(t * t).epsilon(1e-12));
            CHECK(std::abs(d->alpha(t) - t * t * t / 3.0) < 1e-13);
            CHECK(std::abs(d->beta(t) - std::pow(t, 4) / 12.0) < 1e-13);
        }
    }
    const TabulatedDrive linear({{0.0, 1.0}, {1.0, 3.0}});
    CHECK(linear.alpha(1.0) == doctest::Approx(2.0));
    CHECK(linear.alpha_sq_integral(1.0) == doctest::Approx(gauss_integral([](double s) {
              const double a = s + s * s;
              return a * a;
          }, 1.0)));
}

TEST_CASE("tabulated cosine tracks the closed form") {
    const TabulatedDrive tab(sample([](double t) { return 0.5 * std::cos(2.0 * t); }, 0.01, 601));
    const Drive exact(CosineDrive{0.5, 2.0});
    for (double t : {0.5, 1.234, 3.0, 6.0}) {
        CHECK(std::abs(tab.alpha(t) - exact.alpha(t)) < tol::kCoefficientQuadrature);
        CHECK(std::abs(tab.beta(t) - exact.beta(t)) < tol::kCoefficientQuadrature);
        CHECK(std::abs(tab.alpha_sq_integral(t) - exact.alpha_sq_integral(t)) < tol::kCoefficientQuadrature);
    }
}

TEST_CASE("tabulated drive validation") {
    CHECK_THROWS_AS(TabulatedDrive({{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedDrive({{0.1, 1.0}, {0.2, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedDrive({{0.0, 1.0}, {0.1, 1.0}, {0.25, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedDrive({{0.0, 1.0}, {0.1, std::nan("")}}), std::invalid_argument);
    const TabulatedDrive d({{0.0, 1.0}, {0.5, 1.0}, {1.0, 1.0}});
    CHECK_THROWS_AS(d.alpha(1.5), QuadratureRangeError);
    CHECK_THROWS_AS(Drive(d).beta(1.01), QuadratureRangeError);
}

TEST_CASE("drive CSV loading") {
    const auto good = temp_file("good.csv", "t,F\n0,1\n0.5,2\n1.0,3\n");
    const TabulatedDrive d = load_drive_csv(good);
    CHECK(d.samples().size() == 3);
    CHECK(d.alpha(1.0) == doctest::Approx(2.0));

    const auto header = temp_file("header.csv", "time,force\n0,1\n1,1\n");
    CHECK_THROWS_AS(load_drive_csv(header), ConfigError);

    const auto bad = temp_file("bad.csv", "t,F\n0,1\n0.5,oops\n");
    try {
        load_drive_csv(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(load_drive_csv("/nonexistent/drive.csv"), ConfigError);
}
