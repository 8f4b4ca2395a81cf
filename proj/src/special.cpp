#include "nswp/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nswp {

namespace {

using real = long double;

constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kAi0 = 0.355028053887817239260063186004183176L;
constexpr real kAiPrime0 = -0.258819403792806798405183560189203963L;

// Ai is tabulated with (Ai, Ai') on [-kTableEdge, kTableEdge] and evaluated
// between nodes by Taylor expansion of Ai'' = x Ai. Beyond the table the
// asymptotic expansions are accurate to ~exp(-2 zeta) ~ 1e-13.
constexpr real kTableEdge = 8.0L;
constexpr int kNodesPerUnit = 16;
constexpr int kHalfNodes = static_cast<int>(kTableEdge) * kNodesPerUnit;
constexpr real kNodeSpacing = 1.0L / kNodesPerUnit;

struct Value {
    real f;
    real df;
};

// Solution of y'' = x y with y(x0) = v.f, y'(x0) = v.df, evaluated at x0 + delta.
Value taylor(real x0, Value v, real delta) {
    real a_prev = v.f;   // a_{k-1}
    real a_curr = v.df;  // a_k, starting at k = 1
    real a_km2 = 0.0L;   // a_{k-2}
    real pow_k = delta;  // delta^k
    real f = v.f + v.df * delta;
    real df = v.df;
    int quiet = 0;
    for (int k = 2; k < 200; ++k) {
        // a_k = (x0 a_{k-2} + a_{k-3}) / (k (k-1)); shift the window first.
        const real a_km3 = a_km2;
        a_km2 = a_prev;
        a_prev = a_curr;
        a_curr = (x0 * a_km2 + a_km3) / (static_cast<real>(k) * (k - 1));
        const real term_df = static_cast<real>(k) * a_curr * pow_k;
        pow_k *= delta;
        const real term_f = a_curr * pow_k;
        f += term_f;
        df += term_df;
        const real scale = fabsl(f) + fabsl(df) + 1e-300L;
        if (fabsl(term_f) + fabsl(term_df) <= 1e-22L * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return {f, df};
}

// u_k and v_k of the Airy asymptotic expansions.
struct AsymptoticCoefficients {
    static constexpr int kCount = 80;
    std::array<real, kCount> u{};
    std::array<real, kCount> v{};

    AsymptoticCoefficients() {
        u[0] = 1.0L;
        v[0] = 1.0L;
        for (int k = 1; k < kCount; ++k) {
            const real kk = k;
            u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
            v[k] = -(6 * kk + 1) / (6 * kk - 1) * u[k];
        }
    }
};

const AsymptoticCoefficients& coefficients() {
    static const AsymptoticCoefficients c;
    return c;
}

// Sum of sign(k) c_k / zeta^k over k = first, first + stride, ... with optimal truncation.
// Sign alternates between successive included terms.
real asymptotic_sum(const std::array<real, AsymptoticCoefficients::kCount>& c, real zeta, int first, int stride) {
    real sum = 0.0L;
    real last = INFINITY;
    real sign = 1.0L;
    for (int k = first; k < AsymptoticCoefficients::kCount; k += stride) {
        const real term = c[k] / powl(zeta, k);
        if (fabsl(term) > last) break;
        sum += sign * term;
        last = fabsl(term);
        if (last < 1e-22L * fabsl(sum)) break;
        sign = -sign;
    }
    return sum;
}

Value asymptotic_positive(real x) {
    const auto& c = coefficients();
    const real zeta = 2.0L / 3.0L * x * sqrtl(x);
    const real q = powl(x, 0.25L);
    const real e = expl(-zeta) / (2.0L * sqrtl(kPi));
    return {e / q * asymptotic_sum(c.u, zeta, 0, 1), -q * e * asymptotic_sum(c.v, zeta, 0, 1)};
}

Value asymptotic_negative(real x) {
    const auto& c = coefficients();
    const real z = -x;
    const real zeta = 2.0L / 3.0L * z * sqrtl(z);
    const real q = powl(z, 0.25L);
    const real phase = zeta - kPi / 4.0L;
    const real cs = cosl(phase);
    const real sn = sinl(phase);
    const real p_sum = asymptotic_sum(c.u, zeta, 0, 2);
    const real q_sum = asymptotic_sum(c.u, zeta, 1, 2);
    const real r_sum = asymptotic_sum(c.v, zeta, 0, 2);
    const real s_sum = asymptotic_sum(c.v, zeta, 1, 2);
    const real norm = 1.0L / sqrtl(kPi);
    return {norm / q * (cs * p_sum + sn * q_sum), norm * q * (sn * r_sum - cs * s_sum)};
}

struct AiryTable {
    // Node i sits at x = (i - kHalfNodes) * kNodeSpacing.
    std::array<Value, 2 * kHalfNodes + 1> nodes{};

    AiryTable() {
        // x <= 0: integrate outward from the exact values at the origin; the
        // equation is oscillatory there so errors do not grow.
        nodes[kHalfNodes] = {kAi0, kAiPrime0};
        for (int i = kHalfNodes; i > 0; --i) nodes[i - 1] = taylor(node_x(i), nodes[i], -kNodeSpacing);
        // x > 0: integrate inward from the asymptotic value at the table edge,
        // the direction in which Ai dominates Bi.
        nodes[2 * kHalfNodes] = asymptotic_positive(kTableEdge);
        for (int i = 2 * kHalfNodes; i > kHalfNodes + 1; --i)
            nodes[i - 1] = taylor(node_x(i), nodes[i], -kNodeSpacing);
    }

    static real node_x(int i) { return static_cast<real>(i - kHalfNodes) * kNodeSpacing; }
};

const AiryTable& table() {
    static const AiryTable t;
    return t;
}

Value airy(double xd) {
    const real x = xd;
    if (x >= kTableEdge) return asymptotic_positive(x);
    if (x <= -kTableEdge) return asymptotic_negative(x);
    const int i = static_cast<int>(lroundl(x / kNodeSpacing)) + kHalfNodes;
    const real x0 = AiryTable::node_x(i);
    return taylor(x0, table().nodes[static_cast<std::size_t>(i)], x - x0);
}

}  // namespace

double airy_ai(double x) {
    if (std::isnan(x)) return x;
    return static_cast<double>(airy(x).f);
}

double airy_ai_prime(double x) {
    if (std::isnan(x)) return x;
    return static_cast<double>(airy(x).df);
}

double sho_eigenfunction(int n, double x, const PhysicalParams& params, double omega) {
    if (n < 0 || n > kMaxShoLevel)
        throw std::out_of_range("sho_eigenfunction: n = " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxShoLevel) + "]");
    const double scale = params.mass * omega / params.hbar;
    const double xi = x * std::sqrt(scale);
    const double norm = std::pow(scale / static_cast<double>(kPi), 0.25);

    double prev = 0.0;
    double curr = norm * std::exp(-0.5 * xi * xi);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * xi * curr - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace nswp
