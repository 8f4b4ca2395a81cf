#pragma once

#include <stdexcept>
#include <string>

namespace nswp {

/// Linear part of an affine map fails det = 1.
class SymplecticViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Propagator was handed a Hamiltonian with xp or p terms.
class UnsupportedOperator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact linear step requested for an operator with quadratic terms.
class NonlinearOperator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tabulated drive evaluated outside its sample range.
class QuadratureRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Norm taken over a window where the reference state vanishes.
class ZeroNormError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Peak tracking found its maximum on the window boundary.
class PeakTrackError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration problem, carrying the offending line (0 if unknown) and field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, int line, const std::string& message)
        : std::runtime_error(format(field, line, message)), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& field, int line, const std::string& message) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += "field '" + field + "': ";
        return out + message;
    }

    std::string field_;
    int line_;
};

}  // namespace nswp
