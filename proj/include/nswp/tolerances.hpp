#pragma once

// Every pass/fail threshold used by the verification suites, the CLI report
// and the acceptance binary. Nothing downstream hard-codes its own number.

namespace nswp::tol {

// Operator algebra.
inline constexpr double kCoefficient = 1e-12;        // analytic coefficient paths
inline constexpr double kCoefficientQuadrature = 1e-8;  // coefficients built on tabulated-drive quadrature
inline constexpr double kSymplecticInput = 1e-9;     // rejection threshold for non-symplectic maps
inline constexpr double kSymplecticResult = 1e-10;   // composed / scenario maps
inline constexpr double kRotationComposition = 1e-6;  // N small SHO rotations vs closed form

// Drive integrals.
inline constexpr double kQuadrature = 1e-10;
inline constexpr double kUniformSpacing = 1e-9;  // relative spacing jitter allowed in tabulated drives

// Closed-form identities checked at sampled times.
inline constexpr double kIdentity = 1e-10;

// Special functions.
inline constexpr double kAiryRelative = 1e-10;
inline constexpr double kAiryOde = 1e-9;
inline constexpr double kOrthonormality = 1e-8;

// Grid checks.
inline constexpr double kResidualAiry = 1e-6;   // windowed eigen residual, Airy scenarios
inline constexpr double kResidualSho = 1e-8;    // SHO floor
inline constexpr double kResidual = 1e-6;       // acceptance bound, every scenario
inline constexpr double kPlaneWave = 1e-10;
inline constexpr double kPropagation = 1e-4;    // propagator vs analytic at t = 1
inline constexpr double kStationaryPeriod = 1e-6;
inline constexpr double kRatioLow = 3.5;        // error ratio under step doubling
inline constexpr double kRatioHigh = 4.5;
inline constexpr double kNormPer1000Steps = 1e-10;
inline constexpr double kNonspreading = 1e-3;
inline constexpr double kGaussianWidth = 0.01;  // relative
inline constexpr double kShiftSlope = 0.01;     // relative
inline constexpr double kPhaseAlignment = 1e-12;
inline constexpr double kPeakGaussian = 1e-3;   // in grid cells
inline constexpr double kPeakCells = 2.0;       // tracked peak vs classical, in grid cells
inline constexpr double kSnapshotStationary = 1e-6;

// Classical correspondence.
inline constexpr double kTrajectory = 1e-8;     // scaled by max(1, |d|)
inline constexpr double kFreeTrajectory = 1e-10;
inline constexpr double kQuadraticFit = 1e-8;

// Decomposition sum is exact up to the rounding of a single add/subtract.
inline constexpr double kRoundingUlps = 4.0;

// Minimum observed order for the one-step decomposition equivalence.
inline constexpr double kMinOrder = 1.8;

}  // namespace nswp::tol
