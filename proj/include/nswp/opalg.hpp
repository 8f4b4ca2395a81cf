#pragma once

// Quadratic operator polynomials in (x, p) and their conjugation under affine
// symplectic maps. Cross terms are kept in Weyl (symmetric) order, so the
// symbol of a conjugated operator is the classical substitution of the map
// into the symbol, with no hbar corrections.

#include <functional>
#include <iosfwd>
#include <utility>

#include "nswp/tolerances.hpp"

namespace nswp {

/// c_pp p^2 + c_xx x^2 + c_xp (xp + px)/2 + c_x x + c_p p + c_0
struct QuadOp {
    double c_pp = 0.0;
    double c_xx = 0.0;
    double c_xp = 0.0;
    double c_x = 0.0;
    double c_p = 0.0;
    double c_0 = 0.0;

    bool is_finite() const noexcept;

    friend QuadOp operator+(const QuadOp& a, const QuadOp& b) noexcept;
    friend QuadOp operator-(const QuadOp& a, const QuadOp& b) noexcept;
    friend QuadOp operator*(double s, const QuadOp& a) noexcept;
    friend bool operator==(const QuadOp&, const QuadOp&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadOp& op);

/// Largest coefficient-wise absolute difference.
double max_abs_difference(const QuadOp& a, const QuadOp& b) noexcept;

/// Same as above, ignoring c_0.
double max_abs_difference_nonconstant(const QuadOp& a, const QuadOp& b) noexcept;

bool approx_equal(const QuadOp& a, const QuadOp& b, double tol = tol::kCoefficient) noexcept;

/// x -> a_xx x + a_xp p + s_x,  p -> a_px x + a_pp p + s_p
struct AffineMap {
    double a_xx = 1.0;
    double a_xp = 0.0;
    double a_px = 0.0;
    double a_pp = 1.0;
    double s_x = 0.0;
    double s_p = 0.0;

    static AffineMap identity() noexcept { return {}; }

    double determinant() const noexcept { return a_xx * a_pp - a_xp * a_px; }
    bool is_symplectic(double tol = tol::kSymplecticInput) const noexcept;
};

/// Substitutes the map into `op`; the result represents U op U^-1 when the map
/// holds U x U^-1 and U p U^-1. Throws SymplecticViolation for det != 1.
QuadOp conjugate(const AffineMap& map, const QuadOp& op, double hbar);

/// H_c = H - H~.
QuadOp decompose(const QuadOp& h, const QuadOp& h_tilde) noexcept;

/// Map of the product U_outer U_inner: conjugate(compose(m1, m2), op) equals
/// conjugate(m1, conjugate(m2, op)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// True when no quadratic term survives (c_pp, c_xx, c_xp all within tol of 0).
bool is_linear(const QuadOp& op, double tol = tol::kCoefficient) noexcept;

/// A time-parameterized operator, t -> QuadOp.
class TimeQuadOp {
public:
    using Evaluator = std::function<QuadOp(double)>;

    TimeQuadOp() = default;
    explicit TimeQuadOp(Evaluator f) : f_(std::move(f)) {}

    static TimeQuadOp constant(const QuadOp& op) {
        return TimeQuadOp([op](double) { return op; });
    }

    /// Throws std::domain_error for non-finite t or a non-finite result.
    QuadOp operator()(double t) const;

    explicit operator bool() const noexcept { return static_cast<bool>(f_); }

private:
    Evaluator f_;
};

/// An operator together with the eigenvalue it carries.
struct Eigenpair {
    QuadOp op;
    double value = 0.0;
};

}  // namespace nswp
