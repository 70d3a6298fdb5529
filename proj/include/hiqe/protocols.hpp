#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hiqe/dynamics.hpp"
#include "hiqe/extraction.hpp"
#include "hiqe/linalg.hpp"
#include "hiqe/schedule.hpp"
#include "hiqe/synthesis.hpp"

namespace hiqe {

/// f : {0,1} -> {0,1}. Constant iff f0 == f1, balanced otherwise.
struct BooleanFunction {
    int f0 = 0;
    int f1 = 0;

    BooleanFunction(int value_at_0, int value_at_1) : f0(value_at_0), f1(value_at_1) {
        detail::require((f0 == 0 || f0 == 1) && (f1 == 0 || f1 == 1),
                        "BooleanFunction: values must be bits");
    }

    bool balanced() const { return f0 != f1; }
};

/// How the oracle step encodes f into the path.
///   phase_ramp: static frame, phases ramp 0 -> pi f(n). U(0) = I, so the
///     extracted Hamiltonian reproduces the intended output exactly.
///   rotation: constant phases pi f(n) with the frame rotating through pi.
///     U(0) != I for balanced f, so the time-ordered evolution differs from
///     U(tau) by U^dag(0) and the verdict comes out wrong; kept as the
///     documented-failure mode.
enum class DeutschMode { phase_ramp, rotation };

inline const char* deutsch_mode_name(DeutschMode m) {
    return m == DeutschMode::phase_ramp ? "phase_ramp" : "rotation";
}

enum class DeutschVerdict { constant, balanced };

inline const char* deutsch_verdict_name(DeutschVerdict v) {
    return v == DeutschVerdict::constant ? "constant" : "balanced";
}

struct DeutschReport {
    DeutschMode mode = DeutschMode::phase_ramp;
    StateVector final_state{std::vector<cplx>{1.0, 0.0}};
    double p_plus = 0.0;
    double p_minus = 0.0;
    DeutschVerdict verdict = DeutschVerdict::constant;
    bool verdict_correct = false;
    double hadamard_fidelity = 0.0;
};

/// Database-search instance: N = 2^n entries, one marked index.
struct GroverInstance {
    int n_qubits = 1;
    std::size_t big_n = 2;
    std::size_t marked_index = 0;

    GroverInstance(int qubits, std::size_t marked) : n_qubits(qubits), marked_index(marked) {
        detail::require(n_qubits >= 1 && n_qubits <= 10,
                        "GroverInstance: n_qubits must be in [1, 10]");
        big_n = std::size_t{1} << n_qubits;
        detail::require(marked_index < big_n, "GroverInstance: marked_index out of range");
    }
};

enum class GroverMode { reduced, full_register };

inline const char* grover_mode_name(GroverMode m) {
    return m == GroverMode::reduced ? "reduced" : "full_register";
}

struct GroverReport {
    double alpha = 0.0;
    double theta_tau = 0.0;
    double epsilon = 0.0;
    double predicted_p = 0.0;
    double integrated_p = 0.0;
    GroverMode mode = GroverMode::reduced;
    std::vector<double> p_trajectory; // full_register only
};

enum class GroverThetaMode { constant, linear };

// ---------------------------------------------------------------------------
// path builders (shared by runners, tests and the CLI)
// ---------------------------------------------------------------------------

/// Oracle path for phase_ramp mode: theta = 0, omega = 0, phases ramp
/// linearly 0 -> pi f(n). Diagonal at all times, identity at t = 0.
inline UnitaryPath deutsch_phase_ramp_path(const BooleanFunction& f, double tau) {
    FrameParams frame(Schedule::constant(0.0, tau), Schedule::constant(0.0, tau));
    return UnitaryPath(std::move(frame),
                       Schedule::linear(0.0, std::numbers::pi * f.f0, tau),
                       Schedule::linear(0.0, std::numbers::pi * f.f1, tau));
}

/// Oracle path for rotation mode: constant phases pi f(n), zero azimuth,
/// theta ramping 0 -> pi. U(0) = I only for f0 = 0.
inline UnitaryPath deutsch_rotation_path(const BooleanFunction& f, double tau) {
    FrameParams frame(Schedule::linear(0.0, std::numbers::pi, tau), Schedule::constant(0.0, tau));
    return UnitaryPath(std::move(frame),
                       Schedule::constant(std::numbers::pi * f.f0, tau),
                       Schedule::constant(std::numbers::pi * f.f1, tau));
}

/// Two-level search path in the ordered basis {|m_perp>, |m>}: zero azimuth,
/// phase1 = 0, phase2 linear 0 -> pi, theta either held at theta_tau or
/// ramped linearly onto it.
inline UnitaryPath grover_reduced_path(double theta_tau, double tau,
                                       GroverThetaMode theta_mode = GroverThetaMode::constant) {
    Schedule theta = theta_mode == GroverThetaMode::constant
                         ? Schedule::constant(theta_tau, tau)
                         : Schedule::linear(0.0, theta_tau, tau);
    FrameParams frame(std::move(theta), Schedule::constant(0.0, tau));
    return UnitaryPath(std::move(frame), Schedule::constant(0.0, tau),
                       Schedule::linear(0.0, std::numbers::pi, tau));
}

/// Marked state and the uniform superposition of all unmarked states.
inline std::pair<StateVector, StateVector> grover_subspace_basis(const GroverInstance& inst) {
    const std::size_t n = inst.big_n;
    std::vector<cplx> perp(n, cplx(1.0 / std::sqrt(static_cast<double>(n - 1)), 0.0));
    perp[inst.marked_index] = 0.0;
    return {StateVector::normalized(std::move(perp)),
            StateVector::basis_state(n, inst.marked_index)};
}

inline StateVector grover_input_state(std::size_t big_n) {
    return StateVector::normalized(std::vector<cplx>(big_n, cplx(1.0, 0.0)));
}

// ---------------------------------------------------------------------------
// runners
// ---------------------------------------------------------------------------

/// Drive |0> to |+> with H(t) = [dphi/dt / (2 sqrt 2)] (pauli_z + pauli_x).
/// phi must ramp from 0 to pi. Returns the final state and its overlap
/// probability with |+>. Only the accumulated phase matters, so any ramp
/// shape gives the same gate.
inline std::pair<StateVector, double> hadamard_step(double tau, const Schedule& phi,
                                                    const IntegratorConfig& cfg = {}) {
    detail::require(phi.tau() == tau, "hadamard_step: phi schedule tau mismatch");
    if (!check_boundaries(phi, {0.0, std::numbers::pi}))
        throw validation_error("hadamard_step: phi must satisfy phi(0)=0, phi(tau)=pi");

    const HamiltonianFn h = [&phi](double t) {
        const double w = phi.derivative(t) / (2.0 * std::sqrt(2.0));
        OperatorMatrix m(2);
        m(0, 0) = w;
        m(1, 1) = -w;
        m(0, 1) = w;
        m(1, 0) = w;
        return m;
    };
    const Trajectory traj = propagate(h, StateVector::basis_state(2, 0), tau, cfg);
    const StateVector plus({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const double f = fidelity(traj.final_state().renormalized(), plus);
    return {traj.final_state(), f};
}

/// Full decision pipeline: Hadamard preparation from |0>, oracle evolution
/// under the extracted Hamiltonian, readout in the |+>/|-> basis. The
/// winning outcome decides the verdict: |+> means constant, |-> balanced.
inline DeutschReport deutsch_run(const BooleanFunction& f, double tau,
                                 const IntegratorConfig& cfg = {},
                                 DeutschMode mode = DeutschMode::phase_ramp) {
    detail::require(tau > 0.0, "deutsch_run: tau must be positive");

    DeutschReport report;
    report.mode = mode;

    auto [prepared, had_fid] = hadamard_step(tau, Schedule::linear(0.0, std::numbers::pi, tau), cfg);
    report.hadamard_fidelity = had_fid;

    const UnitaryPath oracle_path = mode == DeutschMode::phase_ramp
                                        ? deutsch_phase_ramp_path(f, tau)
                                        : deutsch_rotation_path(f, tau);
    const ExtractionConfig ext{};
    const HamiltonianFn h = [&oracle_path, &ext](double t) {
        return hamiltonian_fd(oracle_path, t, ext);
    };
    const Trajectory traj = propagate(h, prepared.renormalized(), tau, cfg);
    report.final_state = traj.final_state();

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const StateVector plus({inv_sqrt2, inv_sqrt2});
    const StateVector minus({inv_sqrt2, -inv_sqrt2});
    report.p_plus = std::norm(inner(plus, report.final_state));
    report.p_minus = std::norm(inner(minus, report.final_state));

    report.verdict =
        report.p_plus >= report.p_minus ? DeutschVerdict::constant : DeutschVerdict::balanced;
    const DeutschVerdict truth =
        f.balanced() ? DeutschVerdict::balanced : DeutschVerdict::constant;
    report.verdict_correct = report.verdict == truth;
    return report;
}

/// Initial inclination of the uniform superposition toward the marked state:
/// alpha = arccos(sqrt((N-1)/N)) = arcsin(1/sqrt(N)).
inline double grover_alpha(std::size_t big_n) {
    detail::require(big_n >= 2, "grover_alpha: N must be >= 2");
    return std::asin(1.0 / std::sqrt(static_cast<double>(big_n)));
}

/// Frame angle that lands the search on the marked state:
/// theta(tau) = (a + 1/2) pi + alpha(N), for any integer a.
inline double grover_target_angle(std::size_t big_n, int a) {
    return (a + 0.5) * std::numbers::pi + grover_alpha(big_n);
}

namespace detail {

inline double branch_reduced_epsilon(double alpha, double theta_tau) {
    // nearest representative of alpha - theta_tau - pi/2 modulo pi
    return std::remainder(alpha - theta_tau - 0.5 * std::numbers::pi, std::numbers::pi);
}

} // namespace detail

/// Integrate the two-level search model in the basis {|m_perp>, |m>} from
/// cos(alpha)|m_perp> + sin(alpha)|m> and compare against the success law
/// p = sin^2(alpha - theta(tau)).
inline GroverReport grover_reduced_run(std::size_t big_n, double theta_tau, double tau,
                                       const IntegratorConfig& cfg = {},
                                       GroverThetaMode theta_mode = GroverThetaMode::constant) {
    const double alpha = grover_alpha(big_n);

    GroverReport report;
    report.mode = GroverMode::reduced;
    report.alpha = alpha;
    report.theta_tau = theta_tau;
    report.epsilon = detail::branch_reduced_epsilon(alpha, theta_tau);
    const double d = std::sin(alpha - theta_tau);
    report.predicted_p = d * d;

    const UnitaryPath path = grover_reduced_path(theta_tau, tau, theta_mode);
    const ExtractionConfig ext{};
    const HamiltonianFn h = [&path, &ext](double t) { return hamiltonian_fd(path, t, ext); };
    const StateVector psi0({std::cos(alpha), std::sin(alpha)});
    const Trajectory traj = propagate(h, psi0, tau, cfg);
    report.integrated_p = std::norm(traj.final_state()[1]);
    return report;
}

struct GroverFullResult {
    GroverReport report;
    Trajectory trajectory;
};

/// Full-register search: the reduced Hamiltonian (constant theta) is
/// extracted on the two-level path and embedded into the 2^n-dimensional
/// register as zero on the orthogonal complement; the evolution starts from
/// the uniform superposition over all N entries.
inline GroverFullResult grover_full_run_detailed(const GroverInstance& inst, double theta_tau,
                                                 double tau, const IntegratorConfig& cfg = {}) {
    const auto [m_perp, m] = grover_subspace_basis(inst);
    const UnitaryPath reduced = grover_reduced_path(theta_tau, tau, GroverThetaMode::constant);
    const ExtractionConfig ext{};
    const HamiltonianFn h = [&reduced, &ext, &m_perp, &m](double t) {
        return embed_two_level(hamiltonian_fd(reduced, t, ext), m_perp, m);
    };

    GroverFullResult result;
    result.trajectory = propagate(h, grover_input_state(inst.big_n), tau, cfg);

    GroverReport& report = result.report;
    report.mode = GroverMode::full_register;
    report.alpha = grover_alpha(inst.big_n);
    report.theta_tau = theta_tau;
    report.epsilon = detail::branch_reduced_epsilon(report.alpha, theta_tau);
    const double d = std::sin(report.alpha - theta_tau);
    report.predicted_p = d * d;
    report.p_trajectory = population(result.trajectory, m);
    report.integrated_p = report.p_trajectory.back();
    return result;
}

inline GroverReport grover_full_run(const GroverInstance& inst, double theta_tau, double tau,
                                    const IntegratorConfig& cfg = {}) {
    return grover_full_run_detailed(inst, theta_tau, tau, cfg).report;
}

/// Success-law linearization around the perfect-success condition:
/// epsilon = alpha - theta_tau - pi/2 (nearest branch), exact probability
/// sin^2(alpha - theta_tau), and the quadratic approximation 1 - epsilon^2.
struct EpsilonCheck {
    double epsilon = 0.0;
    double predicted_p = 0.0;
    double quadratic_approx = 0.0;
};

inline EpsilonCheck epsilon_probability_check(double alpha, double theta_tau) {
    EpsilonCheck out;
    out.epsilon = detail::branch_reduced_epsilon(alpha, theta_tau);
    const double d = std::sin(alpha - theta_tau);
    out.predicted_p = d * d;
    out.quadratic_approx = 1.0 - out.epsilon * out.epsilon;
    return out;
}

} // namespace hiqe
