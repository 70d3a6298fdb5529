#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hiqe/linalg.hpp"

namespace hiqe {

enum class IntegratorMethod { rk4, exp_midpoint };

inline const char* integrator_method_name(IntegratorMethod m) {
    return m == IntegratorMethod::rk4 ? "rk4" : "exp_midpoint";
}

/// Fixed-step integrator settings. exp_midpoint applies the exact matrix
/// exponential of the midpoint Hamiltonian each step and is the default;
/// rk4 is the scheme-independence cross-check.
struct IntegratorConfig {
    IntegratorMethod method = IntegratorMethod::exp_midpoint;
    int steps = 4096;
    int record_every = 1;
};

/// Sampled evolution: strictly increasing times from 0 to tau, the recorded
/// states, and their norms.
struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    std::vector<double> norms;

    const StateVector& final_state() const { return states.back(); }
};

using HamiltonianFn = std::function<OperatorMatrix(double)>;

namespace detail {

constexpr double kHermiticityTol = 1e-8;

inline OperatorMatrix sample_hamiltonian(const HamiltonianFn& h_of_t, double t,
                                         std::size_t expected_dim) {
    OperatorMatrix h = h_of_t(t);
    require(h.dim() == expected_dim, "propagate: Hamiltonian dimension mismatch");
    for (cplx e : h.entries())
        if (!is_finite(e)) throw numeric_error("propagate: non-finite Hamiltonian sample");
    if (anti_hermitian_defect(h) > kHermiticityTol)
        throw validation_error("propagate: Hamiltonian sample not Hermitian within 1e-8");
    return h;
}

/// Closed-form exp(-i H dt) for 2x2 Hermitian H: with H = a I + b n.sigma,
/// exp(-i H dt) = e^{-i a dt} (cos(b dt) I - i sin(b dt) n.sigma).
inline OperatorMatrix exp_unitary_2x2(const OperatorMatrix& h, double dt) {
    const double a = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double bx = h(1, 0).real();
    const double by = h(1, 0).imag();
    const double bz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double b = std::sqrt(bx * bx + by * by + bz * bz);

    const cplx global = std::exp(cplx(0.0, -a * dt));
    OperatorMatrix u(2);
    if (b == 0.0) {
        u(0, 0) = global;
        u(1, 1) = global;
        return u;
    }
    const double cb = std::cos(b * dt);
    const double sb = std::sin(b * dt);
    const double nx = bx / b, ny = by / b, nz = bz / b;
    u(0, 0) = global * cplx(cb, -sb * nz);
    u(1, 1) = global * cplx(cb, sb * nz);
    u(0, 1) = global * (cplx(0.0, -sb) * cplx(nx, -ny));
    u(1, 0) = global * (cplx(0.0, -sb) * cplx(nx, ny));
    return u;
}

/// exp(-i H dt) |psi> by a truncated Taylor series on the state. ||H dt|| is
/// small for the fixed-step integrators here, so the series reaches machine
/// precision in a handful of matrix-vector products.
inline std::vector<cplx> exp_apply_series(const OperatorMatrix& h, double dt,
                                          const std::vector<cplx>& psi) {
    const std::size_t n = psi.size();
    std::vector<cplx> out = psi;
    std::vector<cplx> term = psi;
    std::vector<cplx> next(n);
    for (int k = 1; k <= 80; ++k) {
        const cplx scale = cplx(0.0, -dt / k);
        for (std::size_t i = 0; i < n; ++i) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) acc += h(i, j) * term[j];
            next[i] = scale * acc;
        }
        term = next;
        double tn = 0.0;
        for (cplx v : term) tn += std::norm(v);
        for (std::size_t i = 0; i < n; ++i) out[i] += term[i];
        if (std::sqrt(tn) <= 1e-18) break;
    }
    return out;
}

/// exp(-i H dt) as a matrix, same series on columns.
inline OperatorMatrix exp_unitary_series(const OperatorMatrix& h, double dt) {
    const std::size_t n = h.dim();
    OperatorMatrix u(n);
    std::vector<cplx> col(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(col.begin(), col.end(), cplx(0.0, 0.0));
        col[c] = 1.0;
        const std::vector<cplx> out = exp_apply_series(h, dt, col);
        for (std::size_t r = 0; r < n; ++r) u(r, c) = out[r];
    }
    return u;
}

inline OperatorMatrix step_unitary(const OperatorMatrix& h, double dt) {
    return h.dim() == 2 ? exp_unitary_2x2(h, dt) : exp_unitary_series(h, dt);
}

inline void check_state_finite(const std::vector<cplx>& psi) {
    for (cplx a : psi)
        if (!is_finite(a)) throw numeric_error("propagate: state became non-finite");
}

} // namespace detail

/// Integrate i d|psi>/dt = H(t)|psi> from psi0 over [0, tau]. H(t) must be
/// Hermitian within 1e-8 at every queried time. States are recorded at t=0,
/// every record_every-th step, and t=tau.
inline Trajectory propagate(const HamiltonianFn& h_of_t, const StateVector& psi0, double tau,
                            const IntegratorConfig& cfg = {}) {
    detail::require(tau > 0.0, "propagate: tau must be positive");
    detail::require(cfg.steps >= 16, "propagate: steps must be >= 16");
    detail::require(cfg.record_every >= 1, "propagate: record_every must be >= 1");
    detail::require(std::abs(psi0.norm() - 1.0) <= 1e-8, "propagate: psi0 must be normalized");

    const std::size_t n = psi0.dim();
    const double dt = tau / cfg.steps;
    std::vector<cplx> psi = psi0.amplitudes();

    Trajectory traj;
    auto record = [&](double t) {
        StateVector s = StateVector::raw(psi);
        traj.times.push_back(t);
        traj.norms.push_back(s.norm());
        traj.states.push_back(std::move(s));
    };
    record(0.0);

    for (int step = 0; step < cfg.steps; ++step) {
        const double t = dt * step;
        if (cfg.method == IntegratorMethod::exp_midpoint) {
            const OperatorMatrix h = detail::sample_hamiltonian(h_of_t, t + 0.5 * dt, n);
            if (n == 2) {
                const OperatorMatrix u = detail::exp_unitary_2x2(h, dt);
                const cplx p0 = psi[0], p1 = psi[1];
                psi[0] = u(0, 0) * p0 + u(0, 1) * p1;
                psi[1] = u(1, 0) * p0 + u(1, 1) * p1;
            } else {
                psi = detail::exp_apply_series(h, dt, psi);
            }
        } else {
            // classic RK4 on dpsi/dt = -i H(t) psi
            const OperatorMatrix h0 = detail::sample_hamiltonian(h_of_t, t, n);
            const OperatorMatrix hm = detail::sample_hamiltonian(h_of_t, t + 0.5 * dt, n);
            const OperatorMatrix h1 = detail::sample_hamiltonian(h_of_t, t + dt, n);
            auto rhs = [n](const OperatorMatrix& h, const std::vector<cplx>& v) {
                std::vector<cplx> out(n);
                for (std::size_t i = 0; i < n; ++i) {
                    cplx acc(0.0, 0.0);
                    for (std::size_t j = 0; j < n; ++j) acc += h(i, j) * v[j];
                    out[i] = cplx(0.0, -1.0) * acc;
                }
                return out;
            };
            std::vector<cplx> k1 = rhs(h0, psi);
            std::vector<cplx> tmp(n);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k1[i];
            std::vector<cplx> k2 = rhs(hm, tmp);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k2[i];
            std::vector<cplx> k3 = rhs(hm, tmp);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + dt * k3[i];
            std::vector<cplx> k4 = rhs(h1, tmp);
            for (std::size_t i = 0; i < n; ++i)
                psi[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        detail::check_state_finite(psi);
        const bool last = step + 1 == cfg.steps;
        if (last || (step + 1) % cfg.record_every == 0) record(last ? tau : dt * (step + 1));
    }
    return traj;
}

/// Time-ordered evolution operator over [0, tau]: the ordered product of the
/// per-step midpoint exponentials (or the RK4 propagation of basis columns).
/// For a Hamiltonian extracted from a path U(t) this converges to
/// U(tau) U^dag(0).
inline OperatorMatrix propagator(const HamiltonianFn& h_of_t, std::size_t dim, double tau,
                                 const IntegratorConfig& cfg = {}) {
    detail::require(tau > 0.0, "propagator: tau must be positive");
    detail::require(cfg.steps >= 16, "propagator: steps must be >= 16");
    detail::require(dim >= 2, "propagator: dim must be >= 2");

    if (cfg.method == IntegratorMethod::rk4) {
        // column-by-column propagation
        OperatorMatrix u(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            std::vector<cplx> e(dim, cplx(0.0, 0.0));
            e[c] = 1.0;
            const Trajectory traj = propagate(h_of_t, StateVector::raw(std::move(e)), tau, cfg);
            for (std::size_t r = 0; r < dim; ++r) u(r, c) = traj.final_state()[r];
        }
        return u;
    }

    const double dt = tau / cfg.steps;
    OperatorMatrix u = OperatorMatrix::identity(dim);
    for (int step = 0; step < cfg.steps; ++step) {
        const OperatorMatrix h = detail::sample_hamiltonian(h_of_t, dt * (step + 0.5), dim);
        u = matmul(detail::step_unitary(h, dt), u);
    }
    for (cplx e : u.entries())
        if (!is_finite(e)) throw numeric_error("propagator: non-finite result");
    return u;
}

/// Per-sample overlap probability |<basis|psi(t)>|^2 along a trajectory.
inline std::vector<double> population(const Trajectory& traj, const StateVector& basis_state) {
    std::vector<double> out;
    out.reserve(traj.states.size());
    for (const StateVector& s : traj.states) {
        detail::require(s.dim() == basis_state.dim(), "population: dimension mismatch");
        out.push_back(std::norm(inner(basis_state, s)));
    }
    return out;
}

} // namespace hiqe
