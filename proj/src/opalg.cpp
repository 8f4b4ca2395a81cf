#include "nswp/opalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nswp/errors.hpp"

namespace nswp {

namespace {

// u x + w p + c
struct LinearForm {
    double u;
    double w;
    double c;
};

// Weyl symbol of the symmetrized product of two affine forms.
QuadOp symmetric_product(const LinearForm& a, const LinearForm& b) noexcept {
    QuadOp r;
    r.c_xx = a.u * b.u;
    r.c_pp = a.w * b.w;
    r.c_xp = a.u * b.w + a.w * b.u;
    r.c_x = a.u * b.c + b.u * a.c;
    r.c_p = a.w * b.c + b.w * a.c;
    r.c_0 = a.c * b.c;
    return r;
}

QuadOp from_linear(const LinearForm& a) noexcept {
    QuadOp r;
    r.c_x = a.u;
    r.c_p = a.w;
    r.c_0 = a.c;
    return r;
}

void require_symplectic(const AffineMap& map, const char* what) {
    const double det = map.determinant();
    if (!(std::abs(det - 1.0) <= tol::kSymplecticInput)) {
        std::ostringstream msg;
        msg << what << ": map determinant " << det << " violates the symplectic condition";
        throw SymplecticViolation(msg.str());
    }
}

}  // namespace

bool QuadOp::is_finite() const noexcept {
    return std::isfinite(c_pp) && std::isfinite(c_xx) && std::isfinite(c_xp) && std::isfinite(c_x) &&
           std::isfinite(c_p) && std::isfinite(c_0);
}

QuadOp operator+(const QuadOp& a, const QuadOp& b) noexcept {
    return {a.c_pp + b.c_pp, a.c_xx + b.c_xx, a.c_xp + b.c_xp, a.c_x + b.c_x, a.c_p + b.c_p, a.c_0 + b.c_0};
}

QuadOp operator-(const QuadOp& a, const QuadOp& b) noexcept {
    return {a.c_pp - b.c_pp, a.c_xx - b.c_xx, a.c_xp - b.c_xp, a.c_x - b.c_x, a.c_p - b.c_p, a.c_0 - b.c_0};
}

QuadOp operator*(double s, const QuadOp& a) noexcept {
    return {s * a.c_pp, s * a.c_xx, s * a.c_xp, s * a.c_x, s * a.c_p, s * a.c_0};
}

std::ostream& operator<<(std::ostream& os, const QuadOp& op) {
    return os << "{c_pp=" << op.c_pp << ", c_xx=" << op.c_xx << ", c_xp=" << op.c_xp << ", c_x=" << op.c_x
              << ", c_p=" << op.c_p << ", c_0=" << op.c_0 << "}";
}

double max_abs_difference_nonconstant(const QuadOp& a, const QuadOp& b) noexcept {
    return std::max({std::abs(a.c_pp - b.c_pp), std::abs(a.c_xx - b.c_xx), std::abs(a.c_xp - b.c_xp),
                     std::abs(a.c_x - b.c_x), std::abs(a.c_p - b.c_p)});
}

double max_abs_difference(const QuadOp& a, const QuadOp& b) noexcept {
    return std::max(max_abs_difference_nonconstant(a, b), std::abs(a.c_0 - b.c_0));
}

bool approx_equal(const QuadOp& a, const QuadOp& b, double tol) noexcept {
    return max_abs_difference(a, b) <= tol;
}

bool AffineMap::is_symplectic(double tol) const noexcept {
    return std::abs(determinant() - 1.0) <= tol;
}

QuadOp conjugate(const AffineMap& map, const QuadOp& op, double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("conjugate: hbar must be positive");
    require_symplectic(map, "conjugate");

    // Symmetric ordering is preserved by affine symplectic substitution, so
    // hbar never enters the result.
    const LinearForm x{map.a_xx, map.a_xp, map.s_x};
    const LinearForm p{map.a_px, map.a_pp, map.s_p};

    QuadOp r = op.c_pp * symmetric_product(p, p);
    r = r + op.c_xx * symmetric_product(x, x);
    r = r + op.c_xp * symmetric_product(x, p);
    r = r + op.c_x * from_linear(x);
    r = r + op.c_p * from_linear(p);
    r.c_0 += op.c_0;
    return r;
}

QuadOp decompose(const QuadOp& h, const QuadOp& h_tilde) noexcept { return h - h_tilde; }

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    require_symplectic(outer, "compose(outer)");
    require_symplectic(inner, "compose(inner)");

    // As substitutions z -> A z + s, the product U_outer U_inner acts as
    // inner(outer(z)).
    AffineMap r;
    r.a_xx = inner.a_xx * outer.a_xx + inner.a_xp * outer.a_px;
    r.a_xp = inner.a_xx * outer.a_xp + inner.a_xp * outer.a_pp;
    r.a_px = inner.a_px * outer.a_xx + inner.a_pp * outer.a_px;
    r.a_pp = inner.a_px * outer.a_xp + inner.a_pp * outer.a_pp;
    r.s_x = inner.a_xx * outer.s_x + inner.a_xp * outer.s_p + inner.s_x;
    r.s_p = inner.a_px * outer.s_x + inner.a_pp * outer.s_p + inner.s_p;
    return r;
}

bool is_linear(const QuadOp& op, double tol) noexcept {
    return std::abs(op.c_pp) <= tol && std::abs(op.c_xx) <= tol && std::abs(op.c_xp) <= tol;
}

QuadOp TimeQuadOp::operator()(double t) const {
    if (!f_) throw std::logic_error("TimeQuadOp: empty evaluator");
    if (!std::isfinite(t)) throw std::domain_error("TimeQuadOp: non-finite time");
    QuadOp op = f_(t);
    if (!op.is_finite()) throw std::domain_error("TimeQuadOp: non-finite coefficient");
    return op;
}

}  // namespace nswp
