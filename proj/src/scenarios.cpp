#include "nswp/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace nswp {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("scenario: time must be finite and >= 0");
}

QuadOp kinetic(const PhysicalParams& p) {
    QuadOp op;
    op.c_pp = 1.0 / (2.0 * p.mass);
    return op;
}

}  // namespace

void PhysicalParams::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be finite and > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be finite and > 0");
}

ScenarioSpec::ScenarioSpec(Variant v, PhysicalParams params) : v_(std::move(v)), params_(params) {
    params_.validate();
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ShoDisplaced>) {
                if (s.n < 0) throw std::invalid_argument("sho: n must be >= 0");
                if (!(s.omega > 0.0) || !std::isfinite(s.omega)) throw std::invalid_argument("sho: omega must be > 0");
                if (!std::isfinite(s.d0) || !std::isfinite(s.v0)) throw std::invalid_argument("sho: d0, v0 must be finite");
            } else {
                if (s.b == 0.0 || !std::isfinite(s.b)) throw std::invalid_argument("airy: b must be finite and nonzero");
            }
        },
        v_);
}

ScenarioKind ScenarioSpec::kind() const noexcept {
    switch (v_.index()) {
        case 0: return ScenarioKind::FreeAiry;
        case 1: return ScenarioKind::LinearAiry;
        default: return ScenarioKind::ShoDisplaced;
    }
}

std::string ScenarioSpec::name() const {
    switch (kind()) {
        case ScenarioKind::FreeAiry: return "free-airy";
        case ScenarioKind::LinearAiry: return "linear-airy";
        case ScenarioKind::ShoDisplaced: return "sho";
    }
    return "unknown";
}

double ScenarioSpec::b() const {
    if (const auto* f = std::get_if<FreeAiry>(&v_)) return f->b;
    if (const auto* l = std::get_if<LinearAiry>(&v_)) return l->b;
    throw std::logic_error("b is defined only for Airy scenarios");
}

double ScenarioSpec::f_b() const {
    const double bb = b();
    return params_.hbar * params_.hbar * bb * bb * bb / (2.0 * params_.mass);
}

const LinearAiry& ScenarioSpec::linear() const {
    if (const auto* l = std::get_if<LinearAiry>(&v_)) return *l;
    throw std::logic_error("not a linear-airy scenario");
}

const ShoDisplaced& ScenarioSpec::sho() const {
    if (const auto* s = std::get_if<ShoDisplaced>(&v_)) return *s;
    throw std::logic_error("not an sho scenario");
}

TimeQuadOp hamiltonian(const ScenarioSpec& spec) {
    const PhysicalParams p = spec.params();
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry: return TimeQuadOp::constant(kinetic(p));
        case ScenarioKind::LinearAiry: {
            const Drive drive = spec.linear().drive;
            return TimeQuadOp([p, drive](double t) {
                QuadOp op = kinetic(p);
                op.c_x = -drive.force(t);
                return op;
            });
        }
        case ScenarioKind::ShoDisplaced: {
            QuadOp op = kinetic(p);
            const double w = spec.sho().omega;
            op.c_xx = 0.5 * p.mass * w * w;
            return TimeQuadOp::constant(op);
        }
    }
    throw std::logic_error("unreachable");
}

Eigenpair initial_eigenpair(const ScenarioSpec& spec) {
    const PhysicalParams& p = spec.params();
    QuadOp op = kinetic(p);
    if (spec.is_airy()) {
        op.c_x = spec.f_b();
        return {op, 0.0};
    }
    // p^2/2m + (m/2) w^2 (x - d0)^2 - v0 p, expanded.
    const ShoDisplaced& s = spec.sho();
    const double k = p.mass * s.omega * s.omega;
    op.c_xx = 0.5 * k;
    op.c_x = -k * s.d0;
    op.c_p = -s.v0;
    op.c_0 = 0.5 * k * s.d0 * s.d0;
    const double e_n = (s.n + 0.5) * p.hbar * s.omega;
    return {op, e_n - 0.5 * p.mass * s.v0 * s.v0};
}

double alpha(const ScenarioSpec& spec, double t) {
    require_time(t);
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry: return 0.0;
        case ScenarioKind::LinearAiry: return spec.linear().drive.alpha(t);
        case ScenarioKind::ShoDisplaced: break;
    }
    throw std::logic_error("alpha is defined only for Airy scenarios");
}

double beta(const ScenarioSpec& spec, double t) {
    require_time(t);
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry: return 0.0;
        case ScenarioKind::LinearAiry: return spec.linear().drive.beta(t);
        case ScenarioKind::ShoDisplaced: break;
    }
    throw std::logic_error("beta is defined only for Airy scenarios");
}

AffineMap heisenberg_map(const ScenarioSpec& spec, double t) {
    require_time(t);
    const double m = spec.params().mass;
    AffineMap map;
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry:
            map.a_xp = -t / m;
            break;
        case ScenarioKind::LinearAiry: {
            const double a = alpha(spec, t);
            const double bt = beta(spec, t);
            map.a_xp = -t / m;
            map.s_x = (t * a - bt) / m;
            map.s_p = -a;
            break;
        }
        case ScenarioKind::ShoDisplaced: {
            const double w = spec.sho().omega;
            const double c = std::cos(w * t);
            const double s = std::sin(w * t);
            map.a_xx = c;
            map.a_xp = -s / (m * w);
            map.a_px = m * w * s;
            map.a_pp = c;
            break;
        }
    }
    return map;
}

Displacement displacement(const ScenarioSpec& spec, double t) {
    require_time(t);
    const double m = spec.params().mass;
    if (spec.is_airy()) {
        const double fb = spec.f_b();
        const double force = spec.kind() == ScenarioKind::LinearAiry ? spec.linear().drive.force(t) : 0.0;
        return {fb * t * t / (2.0 * m) + beta(spec, t) / m, (fb * t + alpha(spec, t)) / m, (fb + force) / m};
    }
    const ShoDisplaced& s = spec.sho();
    const double c = std::cos(s.omega * t);
    const double sn = std::sin(s.omega * t);
    return {s.d0 * c + s.v0 / s.omega * sn, s.v0 * c - s.d0 * s.omega * sn,
            -s.omega * s.omega * s.d0 * c - s.omega * s.v0 * sn};
}

Eigenpair tilde_hamiltonian(const ScenarioSpec& spec, double t) {
    const Eigenpair initial = initial_eigenpair(spec);
    return {conjugate(heisenberg_map(spec, t), initial.op, spec.params().hbar), initial.value};
}

QuadOp state_changing_hamiltonian(const ScenarioSpec& spec, double t) {
    return decompose(hamiltonian(spec)(t), tilde_hamiltonian(spec, t).op);
}

TimeQuadOp tilde_family(const ScenarioSpec& spec) {
    return TimeQuadOp([spec](double t) { return tilde_hamiltonian(spec, t).op; });
}

TimeQuadOp state_changing_family(const ScenarioSpec& spec) {
    return TimeQuadOp([spec](double t) { return state_changing_hamiltonian(spec, t); });
}

QuadOp quoted_tilde_hamiltonian(const ScenarioSpec& spec, double t) {
    const PhysicalParams& p = spec.params();
    const double m = p.mass;
    const Displacement d = displacement(spec, t);
    QuadOp op = kinetic(p);
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry:
            op.c_x = spec.f_b();
            op.c_p = -spec.f_b() * t / m;
            break;
        case ScenarioKind::LinearAiry:
            op.c_x = spec.f_b();
            op.c_p = -d.d_dot;
            op.c_0 = -(spec.f_b() * d.d - 0.5 * m * d.d_dot * d.d_dot);
            break;
        case ScenarioKind::ShoDisplaced: {
            const ShoDisplaced& s = spec.sho();
            op.c_xx = 0.5 * m * s.omega * s.omega;
            op.c_p = -d.d_dot;
            op.c_x = m * d.d_ddot;
            op.c_0 = -0.5 * m * s.omega * s.omega * s.d0 * s.d0;
            break;
        }
    }
    return op;
}

QuadOp quoted_state_changing(const ScenarioSpec& spec, double t) {
    const double m = spec.params().mass;
    const Displacement d = displacement(spec, t);
    QuadOp op;
    switch (spec.kind()) {
        case ScenarioKind::FreeAiry:
            op.c_p = spec.f_b() * t / m;
            op.c_x = -spec.f_b();
            break;
        case ScenarioKind::LinearAiry:
            op.c_p = d.d_dot;
            op.c_x = -m * d.d_ddot;
            op.c_0 = spec.f_b() * d.d - 0.5 * m * d.d_dot * d.d_dot;
            break;
        case ScenarioKind::ShoDisplaced: {
            const double w = spec.sho().omega;
            op.c_p = d.d_dot;
            op.c_x = -m * d.d_ddot;
            op.c_0 = 0.5 * m * w * w * d.d * d.d;
            break;
        }
    }
    return op;
}

ShoConstantDiscrepancy sho_constant_discrepancy(const ScenarioSpec& spec, double t) {
    (void)spec.sho();
    const QuadOp derived_tilde = tilde_hamiltonian(spec, t).op;
    const QuadOp derived_changing = state_changing_hamiltonian(spec, t);
    const QuadOp quoted_tilde = quoted_tilde_hamiltonian(spec, t);
    const QuadOp quoted_changing = quoted_state_changing(spec, t);
    const QuadOp defect = quoted_tilde + quoted_changing - hamiltonian(spec)(t);
    return {derived_tilde.c_0, quoted_tilde.c_0, derived_changing.c_0, quoted_changing.c_0, defect.c_0};
}

}  // namespace nswp
