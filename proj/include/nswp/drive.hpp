#pragma once

// Spatially uniform force F(t) and its running integrals
//   alpha(t) = int_0^t F,  beta(t) = int_0^t alpha,  A2(t) = int_0^t alpha^2.

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nswp {

struct ConstantDrive {
    double f0 = 0.0;
};

struct CosineDrive {
    double f0 = 0.0;
    double omega = 1.0;
};

/// Uniformly spaced samples of F starting at t = 0.
///
/// The samples are read as a piecewise polynomial: quadratic on consecutive
/// interval pairs, with a trailing cubic over three intervals when the interval
/// count is odd (a single interval is linear). Integrating that model exactly
/// reproduces composite Simpson with a 3/8 tail at the nodes; beta is the
/// running integral of alpha on the same panels.
class TabulatedDrive {
public:
    /// Throws std::invalid_argument unless there are >= 2 strictly increasing,
    /// uniformly spaced samples with the first at t = 0.
    explicit TabulatedDrive(std::vector<std::pair<double, double>> samples);

    const std::vector<std::pair<double, double>>& samples() const noexcept { return samples_; }
    double t_end() const noexcept { return samples_.back().first; }

    double force(double t) const;
    double alpha(double t) const;
    double beta(double t) const;
    double alpha_sq_integral(double t) const;

private:
    // Monomial coefficients in the local variable s = t - t0.
    using Poly = std::vector<double>;

    struct Panel {
        double t0;
        double t1;
        Poly force;
        Poly alpha;
        Poly beta;
        Poly alpha_sq;
    };

    const Panel& locate(double t) const;

    std::vector<std::pair<double, double>> samples_;
    std::vector<Panel> panels_;
};

/// Reads a two-column CSV with header `t,F`.
TabulatedDrive load_drive_csv(const std::filesystem::path& path);

class Drive {
public:
    using Variant = std::variant<ConstantDrive, CosineDrive, TabulatedDrive>;

    Drive(ConstantDrive d) : v_(d) {}
    Drive(CosineDrive d);
    Drive(TabulatedDrive d) : v_(std::move(d)) {}

    const Variant& variant() const noexcept { return v_; }
    bool is_tabulated() const noexcept { return std::holds_alternative<TabulatedDrive>(v_); }
    std::string name() const;

    /// All of these throw QuadratureRangeError for tabulated drives outside
    /// [0, t_end] and std::domain_error for t < 0.
    double force(double t) const;
    double alpha(double t) const;
    double beta(double t) const;
    double alpha_sq_integral(double t) const;

private:
    Variant v_;
};

}  // namespace nswp
