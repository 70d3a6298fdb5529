#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>

#include "hiqe/linalg.hpp"
#include "hiqe/schedule.hpp"

namespace hiqe {

/// Polar/azimuthal angle schedules parameterizing the moving orthonormal
/// frame of a two-level system.
struct FrameParams {
    Schedule theta;
    Schedule omega;

    FrameParams(Schedule theta_schedule, Schedule omega_schedule)
        : theta(std::move(theta_schedule)), omega(std::move(omega_schedule)) {
        detail::require(theta.tau() == omega.tau(),
                        "FrameParams: theta and omega must share the same tau");
    }
};

/// Frame basis pair at time t:
///   |f1> =  cos(theta/2)|0> + e^{i omega} sin(theta/2)|1>
///   |f2> = -sin(theta/2)|0> + e^{i omega} cos(theta/2)|1>
inline std::pair<StateVector, StateVector> frame_states(const FrameParams& frame, double t) {
    const double half = 0.5 * frame.theta.evaluate(t);
    const cplx phase = std::exp(cplx(0.0, frame.omega.evaluate(t)));
    const double c = std::cos(half);
    const double s = std::sin(half);
    return {StateVector({c, phase * s}), StateVector({-s, phase * c})};
}

/// Reports from sampling a path: worst unitarity defect ||U U^dag - I||_max
/// and the defect of U(0) against the identity.
struct PathReport {
    bool is_unitary = false;
    bool identity_at_zero = false;
    double max_unitarity_defect = 0.0;
    double max_identity_defect = 0.0;
};

/// Time-dependent unitary built spectrally from the frame pair and two real
/// phase schedules:
///   U(t) = e^{i phase1(t)} |f1(t)><f1(t)| + e^{i phase2(t)} |f2(t)><f2(t)|.
/// U(t) is unitary for any schedules; U(0) = I exactly when both phases
/// start at a multiple of 2 pi.
///
/// With basis_labels set, the frame pair lives in span{b1, b2} of an ambient
/// N-dimensional space and U(t) extends as the identity on the orthogonal
/// complement: U = I_N + sum_n (e^{i phase_n} - 1)|f_n><f_n|.
class UnitaryPath {
public:
    UnitaryPath(FrameParams frame, Schedule phase1, Schedule phase2,
                std::optional<std::pair<StateVector, StateVector>> basis_labels = std::nullopt)
        : frame_(std::move(frame)),
          phase1_(std::move(phase1)),
          phase2_(std::move(phase2)),
          basis_(std::move(basis_labels)) {
        detail::require(frame_.theta.tau() == phase1_.tau() && phase1_.tau() == phase2_.tau(),
                        "UnitaryPath: all schedules must share the same tau");
        if (basis_) {
            const StateVector& b1 = basis_->first;
            const StateVector& b2 = basis_->second;
            detail::require(b1.dim() == b2.dim(), "UnitaryPath: basis dimension mismatch");
            detail::require(std::abs(b1.norm() - 1.0) <= 1e-12 &&
                                std::abs(b2.norm() - 1.0) <= 1e-12 &&
                                std::abs(inner(b1, b2)) <= 1e-12,
                            "UnitaryPath: basis_labels must be orthonormal");
        }
    }

    const FrameParams& frame() const { return frame_; }
    const Schedule& phase1() const { return phase1_; }
    const Schedule& phase2() const { return phase2_; }
    const std::optional<std::pair<StateVector, StateVector>>& basis_labels() const {
        return basis_;
    }

    double tau() const { return frame_.theta.tau(); }
    std::size_t dim() const { return basis_ ? basis_->first.dim() : 2; }

private:
    FrameParams frame_;
    Schedule phase1_;
    Schedule phase2_;
    std::optional<std::pair<StateVector, StateVector>> basis_;
};

namespace detail {

// Frame pair expanded in the ambient basis pair (b1, b2).
inline std::pair<StateVector, StateVector> embedded_frame_states(const UnitaryPath& path,
                                                                 double t) {
    const auto [f1, f2] = frame_states(path.frame(), t);
    const StateVector& b1 = path.basis_labels()->first;
    const StateVector& b2 = path.basis_labels()->second;
    const std::size_t n = b1.dim();
    std::vector<cplx> e1(n), e2(n);
    for (std::size_t i = 0; i < n; ++i) {
        e1[i] = f1[0] * b1[i] + f1[1] * b2[i];
        e2[i] = f2[0] * b1[i] + f2[1] * b2[i];
    }
    return {StateVector::raw(std::move(e1)), StateVector::raw(std::move(e2))};
}

} // namespace detail

inline OperatorMatrix unitary_at(const UnitaryPath& path, double t) {
    const cplx e1 = std::exp(cplx(0.0, path.phase1().evaluate(t)));
    const cplx e2 = std::exp(cplx(0.0, path.phase2().evaluate(t)));
    if (!path.basis_labels()) {
        const auto [f1, f2] = frame_states(path.frame(), t);
        OperatorMatrix u = outer(f1, f1);
        u *= e1;
        OperatorMatrix p2 = outer(f2, f2);
        p2 *= e2;
        u += p2;
        return u;
    }
    const auto [f1, f2] = detail::embedded_frame_states(path, t);
    OperatorMatrix u = OperatorMatrix::identity(f1.dim());
    OperatorMatrix p1 = outer(f1, f1);
    p1 *= (e1 - 1.0);
    OperatorMatrix p2 = outer(f2, f2);
    p2 *= (e2 - 1.0);
    u += p1;
    u += p2;
    return u;
}

/// Closed-form evolved amplitudes for input a|0> + b|1> (a real) under the
/// spectral unitary with phase1 = 0, phase2 = phi and frame angles
/// (theta, omega_angle) at the evaluation time:
///   alpha = [a sp - sm * at] / 2,  beta = [b sp + sm * bt] / 2,
/// with sp/sm = e^{i phi} +/- 1,
///      at = a cos(theta) + b e^{-i omega_angle} sin(theta),
///      bt = b cos(theta) - a e^{+i omega_angle} sin(theta).
/// The exponent carries the frame azimuth omega_angle; expanding
/// U(t)|psi(0)> term by term fixes that choice, and the matrix route
/// (apply(unitary_at(...))) is the cross-check.
inline std::pair<cplx, cplx> evolved_amplitudes(double a, cplx b, double theta,
                                                double omega_angle, double phi) {
    detail::require(std::abs(a * a + std::norm(b) - 1.0) <= 1e-12,
                    "evolved_amplitudes: input amplitudes not normalized");
    const cplx sp = std::exp(cplx(0.0, phi)) + 1.0;
    const cplx sm = std::exp(cplx(0.0, phi)) - 1.0;
    const cplx at = a * std::cos(theta) + b * std::exp(cplx(0.0, -omega_angle)) * std::sin(theta);
    const cplx bt = b * std::cos(theta) - a * std::exp(cplx(0.0, omega_angle)) * std::sin(theta);
    return {0.5 * (a * sp - sm * at), 0.5 * (b * sp + sm * bt)};
}

/// Sample the path on a uniform grid (both endpoints included) and report
/// unitarity and identity-at-zero defects. Reports only; protocol runners
/// decide whether identity_at_zero is mandatory.
inline PathReport validate_path(const UnitaryPath& path, int samples) {
    detail::require(samples >= 2, "validate_path: samples must be >= 2");
    PathReport report;
    const std::size_t n = path.dim();
    const OperatorMatrix eye = OperatorMatrix::identity(n);
    for (int i = 0; i < samples; ++i) {
        const double t = path.tau() * static_cast<double>(i) / (samples - 1);
        const OperatorMatrix u = unitary_at(path, t);
        const double defect = max_abs_diff(matmul(u, dagger(u)), eye);
        report.max_unitarity_defect = std::max(report.max_unitarity_defect, defect);
        if (i == 0) report.max_identity_defect = max_abs_diff(u, eye);
    }
    report.is_unitary = report.max_unitarity_defect <= 1e-10;
    report.identity_at_zero = report.max_identity_defect <= 1e-10;
    return report;
}

} // namespace hiqe
