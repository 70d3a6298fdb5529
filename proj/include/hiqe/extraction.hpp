#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "hiqe/linalg.hpp"
#include "hiqe/schedule.hpp"
#include "hiqe/synthesis.hpp"

namespace hiqe {

/// Finite-difference settings for the extractor. fd_step = 0 selects the
/// default 1e-5 * tau; it must stay below tau/2.
struct ExtractionConfig {
    double fd_step = 0.0;
    bool hermitize = true;
};

enum class CoefficientSource {
    finite_difference,
    closed_form_general,
    closed_form_grover,
    closed_form_deutsch,
};

inline const char* coefficient_source_name(CoefficientSource s) {
    switch (s) {
        case CoefficientSource::finite_difference: return "finite_difference";
        case CoefficientSource::closed_form_general: return "closed_form_general";
        case CoefficientSource::closed_form_grover: return "closed_form_grover";
        case CoefficientSource::closed_form_deutsch: return "closed_form_deutsch";
    }
    return "?";
}

struct CoefficientSample {
    double t = 0.0;
    PauliCoefficients coeffs;
    CoefficientSource source = CoefficientSource::finite_difference;
};

struct FdResult {
    OperatorMatrix hamiltonian;
    /// Max-entry anti-Hermitian defect of the raw i * dU/dt * U^dag before
    /// any symmetrization. O(h^2) for exact unitary paths.
    double anti_hermitian_residue = 0.0;
};

namespace detail {

inline double effective_fd_step(const ExtractionConfig& cfg, double tau) {
    const double h = cfg.fd_step > 0.0 ? cfg.fd_step : 1e-5 * tau;
    require(h > 0.0 && h < 0.5 * tau, "ExtractionConfig: fd_step must lie in (0, tau/2)");
    return h;
}

} // namespace detail

/// Driving Hamiltonian recovered from the path by numerical differentiation:
/// H(t) = i * dU/dt * U^dag(t). Second-order central differences in the
/// interior, second-order one-sided stencils within fd_step of either
/// endpoint. This extractor is the reference the closed-form coefficient
/// expressions are tested against.
inline FdResult hamiltonian_fd_detailed(const UnitaryPath& path, double t,
                                        const ExtractionConfig& cfg = {}) {
    const double tau = path.tau();
    detail::require(t >= 0.0 && t <= tau, "hamiltonian_fd: t outside [0, tau]");
    const double h = detail::effective_fd_step(cfg, tau);

    const std::size_t n = path.dim();
    OperatorMatrix du(n);
    if (t >= h && t <= tau - h) {
        du = unitary_at(path, t + h) - unitary_at(path, t - h);
        du *= cplx(1.0 / (2.0 * h), 0.0);
    } else if (t < h) {
        OperatorMatrix a = unitary_at(path, t);
        a *= cplx(-3.0, 0.0);
        OperatorMatrix b = unitary_at(path, t + h);
        b *= cplx(4.0, 0.0);
        du = a + b - unitary_at(path, t + 2.0 * h);
        du *= cplx(1.0 / (2.0 * h), 0.0);
    } else {
        OperatorMatrix a = unitary_at(path, t);
        a *= cplx(3.0, 0.0);
        OperatorMatrix b = unitary_at(path, t - h);
        b *= cplx(-4.0, 0.0);
        du = a + b + unitary_at(path, t - 2.0 * h);
        du *= cplx(1.0 / (2.0 * h), 0.0);
    }

    OperatorMatrix raw = matmul(du, dagger(unitary_at(path, t)));
    raw *= cplx(0.0, 1.0);
    FdResult result{raw, anti_hermitian_defect(raw)};
    if (cfg.hermitize) result.hamiltonian = hermitized(raw);
    return result;
}

inline OperatorMatrix hamiltonian_fd(const UnitaryPath& path, double t,
                                     const ExtractionConfig& cfg = {}) {
    return hamiltonian_fd_detailed(path, t, cfg).hamiltonian;
}

/// Closed-form traceless coefficients for the general frame
/// (theta, omega) with phase1 = 0, phase2 = phi. omega0 is 0 by
/// construction; the finite-difference route additionally produces an
/// identity component, which is ignored when comparing.
inline PauliCoefficients closed_form_general(const FrameParams& frame, const Schedule& phi,
                                             double t) {
    detail::require(frame.theta.tau() == phi.tau(),
                    "closed_form_general: schedules must share tau");
    const double th = frame.theta.evaluate(t);
    const double om = frame.omega.evaluate(t);
    const double ph = phi.evaluate(t);
    const double dth = frame.theta.derivative(t);
    const double dom = frame.omega.derivative(t);
    const double dph = phi.derivative(t);

    const double cphm1 = std::cos(ph) - 1.0;
    const double mixed = dth * std::cos(th) * std::sin(ph) + dph * std::sin(th);

    PauliCoefficients c;
    c.omega0 = 0.0;
    c.omegaX = cphm1 * dom * std::cos(om) * std::cos(th) * std::sin(th) +
               mixed * std::cos(om) +
               (dom * std::sin(th) * std::sin(ph) + cphm1 * dth) * std::sin(om);
    c.omegaY = cphm1 * dom * std::sin(om) * std::sin(th) * std::cos(th) +
               mixed * std::sin(om) +
               (dom * std::sin(th) * std::sin(ph) - cphm1 * dth) * std::cos(om);
    c.omegaZ = -dth * std::sin(th) * std::sin(ph) - cphm1 * dom * std::sin(th) * std::sin(th) +
               dph * std::cos(th);
    return c;
}

/// Closed-form coefficients for the search-subspace family: zero azimuth,
/// phase1 = 0, phase2 = phi, ordered basis {|m_perp>, |m>} (pauli_z =
/// |m_perp><m_perp| - |m><m|).
///
/// The x-coefficient is + dtheta cos(theta) sin(phi); the sign is pinned by
/// the finite-difference extractor and by the zero-azimuth reduction of
/// closed_form_general (the commonly printed form with a minus sign fails
/// both checks whenever theta varies; see tests).
inline PauliCoefficients closed_form_grover(const Schedule& theta, const Schedule& phi,
                                            double t) {
    detail::require(theta.tau() == phi.tau(), "closed_form_grover: schedules must share tau");
    const double th = theta.evaluate(t);
    const double ph = phi.evaluate(t);
    const double dth = theta.derivative(t);
    const double dph = phi.derivative(t);

    const double sin_half = std::sin(0.5 * ph);
    PauliCoefficients c;
    c.omega0 = 0.0;
    c.omegaX = dph * std::sin(th) + dth * std::cos(th) * std::sin(ph);
    c.omegaY = 2.0 * dth * sin_half * sin_half;
    c.omegaZ = dph * std::cos(th) - dth * std::sin(th) * std::sin(ph);
    return c;
}

/// Conventions for the oracle encoding factor F in the constant-phase
/// closed forms below.
///   parity_difference: F = (-1)^f0 - (-1)^f1. Always even, so the common
///     factor sin^2(F pi / 2) vanishes for every f and the coefficients are
///     identically zero. Kept constructible because it documents a
///     printed-form defect; it never matches the extractor for balanced f.
///   bit_difference: F = f0 - f1, which reproduces the extractor.
enum class FConvention { parity_difference, bit_difference };

/// Closed-form coefficients for the constant-phase oracle family:
/// phase1 = pi f0, phase2 = pi f1 held constant while the frame
/// (theta, omega) moves.
inline PauliCoefficients closed_form_deutsch(const FrameParams& frame, int f0, int f1, double t,
                                             FConvention convention) {
    detail::require((f0 == 0 || f0 == 1) && (f1 == 0 || f1 == 1),
                    "closed_form_deutsch: f0, f1 must be bits");
    const double th = frame.theta.evaluate(t);
    const double om = frame.omega.evaluate(t);
    const double dth = frame.theta.derivative(t);
    const double dom = frame.omega.derivative(t);

    const double f = convention == FConvention::parity_difference
                         ? std::pow(-1.0, f0) - std::pow(-1.0, f1)
                         : static_cast<double>(f0 - f1);
    const double sin_f = std::sin(0.5 * f * std::numbers::pi);
    const double factor = 2.0 * sin_f * sin_f;

    PauliCoefficients c;
    c.omega0 = 0.0;
    c.omegaX = factor * (dom * std::cos(om) * std::sin(th) * std::cos(th) + std::sin(om) * dth);
    c.omegaY = factor * (std::cos(om) * dth - dom * std::sin(om) * std::sin(th) * std::cos(th));
    c.omegaZ = factor * dom * std::sin(th) * std::sin(th);
    return c;
}

namespace detail {

inline std::vector<double> uniform_grid(double tau, int n_samples) {
    require(n_samples >= 2, "coefficient_series: n_samples must be >= 2");
    std::vector<double> ts(n_samples);
    for (int i = 0; i < n_samples; ++i)
        ts[i] = tau * static_cast<double>(i) / (n_samples - 1);
    ts.back() = tau;
    return ts;
}

} // namespace detail

/// Finite-difference coefficient series on a uniform grid including both
/// endpoints. The path must be two-dimensional (subspace-embedded paths are
/// extracted on their reduced form first).
inline std::vector<CoefficientSample> coefficient_series(const UnitaryPath& path, int n_samples,
                                                         const ExtractionConfig& cfg = {}) {
    detail::require(path.dim() == 2, "coefficient_series: path must be two-dimensional");
    std::vector<CoefficientSample> out;
    for (double t : detail::uniform_grid(path.tau(), n_samples))
        out.push_back({t, pauli_decompose(hamiltonian_fd(path, t, cfg)),
                       CoefficientSource::finite_difference});
    return out;
}

inline std::vector<CoefficientSample> coefficient_series_general(const FrameParams& frame,
                                                                 const Schedule& phi,
                                                                 int n_samples) {
    std::vector<CoefficientSample> out;
    for (double t : detail::uniform_grid(phi.tau(), n_samples))
        out.push_back({t, closed_form_general(frame, phi, t),
                       CoefficientSource::closed_form_general});
    return out;
}

inline std::vector<CoefficientSample> coefficient_series_grover(const Schedule& theta,
                                                                const Schedule& phi,
                                                                int n_samples) {
    std::vector<CoefficientSample> out;
    for (double t : detail::uniform_grid(phi.tau(), n_samples))
        out.push_back({t, closed_form_grover(theta, phi, t),
                       CoefficientSource::closed_form_grover});
    return out;
}

inline std::vector<CoefficientSample> coefficient_series_deutsch(const FrameParams& frame, int f0,
                                                                 int f1, FConvention convention,
                                                                 int n_samples) {
    std::vector<CoefficientSample> out;
    for (double t : detail::uniform_grid(frame.theta.tau(), n_samples))
        out.push_back({t, closed_form_deutsch(frame, f0, f1, t, convention),
                       CoefficientSource::closed_form_deutsch});
    return out;
}

} // namespace hiqe
