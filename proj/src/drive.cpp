#include "nswp/drive.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nswp/errors.hpp"
#include "nswp/tolerances.hpp"

namespace nswp {

namespace {

using Poly = std::vector<double>;

double evaluate(const Poly& p, double s) noexcept {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
    return acc;
}

// Antiderivative vanishing at s = 0, plus a constant.
Poly integrate(const Poly& p, double constant) {
    Poly r(p.size() + 1, 0.0);
    r[0] = constant;
    for (std::size_t k = 0; k < p.size(); ++k) r[k + 1] = p[k] / static_cast<double>(k + 1);
    return r;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Interpolant through (i h, values[i]) in monomial form.
Poly interpolate_equispaced(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    Poly result(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        Poly basis{1.0};
        double denom = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = multiply(basis, Poly{-static_cast<double>(j) * h, 1.0});
            denom *= (static_cast<double>(i) - static_cast<double>(j)) * h;
        }
        for (std::size_t k = 0; k < n; ++k) result[k] += values[i] * basis[k] / denom;
    }
    return result;
}

void require_nonnegative(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("drive: time must be finite and >= 0");
}

}  // namespace

TabulatedDrive::TabulatedDrive(std::vector<std::pair<double, double>> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw std::invalid_argument("tabulated drive: at least two samples required");
    for (const auto& [t, f] : samples_)
        if (!std::isfinite(t) || !std::isfinite(f)) throw std::invalid_argument("tabulated drive: non-finite sample");
    if (samples_.front().first != 0.0) throw std::invalid_argument("tabulated drive: first sample must be at t = 0");

    const double h = samples_[1].first - samples_[0].first;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const double step = samples_[i].first - samples_[i - 1].first;
        if (!(step > 0.0)) throw std::invalid_argument("tabulated drive: times must be strictly increasing");
        if (std::abs(step - h) > tol::kUniformSpacing * h)
            throw std::invalid_argument("tabulated drive: samples must be uniformly spaced");
    }

    const std::size_t intervals = samples_.size() - 1;
    std::vector<std::size_t> widths;
    if (intervals == 1) {
        widths = {1};
    } else {
        const std::size_t tail = (intervals % 2 == 1) ? 3 : 0;
        for (std::size_t k = 0; k + tail < intervals; k += 2) widths.push_back(2);
        if (tail) widths.push_back(3);
    }

    double alpha0 = 0.0;
    double beta0 = 0.0;
    double a2_0 = 0.0;
    std::size_t start = 0;
    for (std::size_t w : widths) {
        std::vector<double> values;
        for (std::size_t i = start; i <= start + w; ++i) values.push_back(samples_[i].second);
        Panel panel;
        panel.t0 = samples_[start].first;
        panel.t1 = samples_[start + w].first;
        const double local_h = (panel.t1 - panel.t0) / static_cast<double>(w);
        panel.force = interpolate_equispaced(values, local_h);
        panel.alpha = integrate(panel.force, alpha0);
        panel.beta = integrate(panel.alpha, beta0);
        panel.alpha_sq = integrate(multiply(panel.alpha, panel.alpha), a2_0);

        const double len = panel.t1 - panel.t0;
        alpha0 = evaluate(panel.alpha, len);
        beta0 = evaluate(panel.beta, len);
        a2_0 = evaluate(panel.alpha_sq, len);
        panels_.push_back(std::move(panel));
        start += w;
    }
}

const TabulatedDrive::Panel& TabulatedDrive::locate(double t) const {
    require_nonnegative(t);
    const double end = t_end();
    if (t > end * (1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "tabulated drive: t = " << t << " outside sampled range [0, " << end << "]";
        throw QuadratureRangeError(msg.str());
    }
    auto it = std::upper_bound(panels_.begin(), panels_.end(), t,
                               [](double value, const Panel& p) { return value < p.t1; });
    if (it == panels_.end()) return panels_.back();
    return *it;
}

double TabulatedDrive::force(double t) const {
    const Panel& p = locate(t);
    return evaluate(p.force, t - p.t0);
}

double TabulatedDrive::alpha(double t) const {
    const Panel& p = locate(t);
    return evaluate(p.alpha, t - p.t0);
}

double TabulatedDrive::beta(double t) const {
    const Panel& p = locate(t);
    return evaluate(p.beta, t - p.t0);
}

double TabulatedDrive::alpha_sq_integral(double t) const {
    const Panel& p = locate(t);
    return evaluate(p.alpha_sq, t - p.t0);
}

TabulatedDrive load_drive_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("drive_file", 0, "cannot open drive file '" + path.string() + "'");

    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<std::pair<double, double>> samples;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!header_seen) {
            std::string compact;
            for (char c : line)
                if (c != ' ' && c != '\t') compact += c;
            if (compact != "t,F")
                throw ConfigError("drive_file", line_no, "expected header 't,F' in " + path.string());
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("drive_file", line_no, "expected two comma-separated columns");
        try {
            std::size_t used_t = 0;
            std::size_t used_f = 0;
            const std::string ts = line.substr(0, comma);
            const std::string fs = line.substr(comma + 1);
            const double t = std::stod(ts, &used_t);
            const double f = std::stod(fs, &used_f);
            if (ts.find_first_not_of(" \t", used_t) != std::string::npos ||
                fs.find_first_not_of(" \t", used_f) != std::string::npos)
                throw std::invalid_argument("trailing characters");
            samples.emplace_back(t, f);
        } catch (const std::logic_error&) {
            throw ConfigError("drive_file", line_no, "malformed number in '" + line + "'");
        }
    }
    if (!header_seen) throw ConfigError("drive_file", 0, "empty drive file " + path.string());
    try {
        return TabulatedDrive(std::move(samples));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("drive_file", 0, e.what());
    }
}

Drive::Drive(CosineDrive d) : v_(d) {
    if (!(d.omega != 0.0) || !std::isfinite(d.omega)) throw std::invalid_argument("cosine drive: Omega must be nonzero");
}

std::string Drive::name() const {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDrive>) return "constant";
            else if constexpr (std::is_same_v<T, CosineDrive>) return "cosine";
            else return "tabulated";
        },
        v_);
}

double Drive::force(double t) const {
    require_nonnegative(t);
    return std::visit(
        [t](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDrive>) return d.f0;
            else if constexpr (std::is_same_v<T, CosineDrive>) return d.f0 * std::cos(d.omega * t);
            else return d.force(t);
        },
        v_);
}

double Drive::alpha(double t) const {
    require_nonnegative(t);
    return std::visit(
        [t](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDrive>) return d.f0 * t;
            else if constexpr (std::is_same_v<T, CosineDrive>) return d.f0 / d.omega * std::sin(d.omega * t);
            else return d.alpha(t);
        },
        v_);
}

double Drive::beta(double t) const {
    require_nonnegative(t);
    return std::visit(
        [t](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDrive>) return 0.5 * d.f0 * t * t;
            else if constexpr (std::is_same_v<T, CosineDrive>)
                // 1 - cos(x) = 2 sin^2(x/2) avoids cancellation at small t.
                return 2.0 * d.f0 / (d.omega * d.omega) * std::pow(std::sin(0.5 * d.omega * t), 2);
            else return d.beta(t);
        },
        v_);
}

double Drive::alpha_sq_integral(double t) const {
    require_nonnegative(t);
    return std::visit(
        [t](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConstantDrive>) return d.f0 * d.f0 * t * t * t / 3.0;
            else if constexpr (std::is_same_v<T, CosineDrive>) {
                const double a = d.f0 / d.omega;
                return a * a * (0.5 * t - std::sin(2.0 * d.omega * t) / (4.0 * d.omega));
            } else return d.alpha_sq_integral(t);
        },
        v_);
}

}  // namespace nswp
