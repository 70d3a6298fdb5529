#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "hiqe/dynamics.hpp"
#include "hiqe/extraction.hpp"
#include "hiqe/protocols.hpp"

namespace hiqe {

/// 17 significant digits: enough to round-trip any double, and fixed so that
/// identical runs emit byte-identical artifacts.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_coefficient_csv(std::ostream& os,
                                  const std::vector<CoefficientSample>& samples) {
    os << "t,omega_0,omega_x,omega_y,omega_z,source\n";
    for (const CoefficientSample& s : samples)
        os << fmt17(s.t) << ',' << fmt17(s.coeffs.omega0) << ',' << fmt17(s.coeffs.omegaX) << ','
           << fmt17(s.coeffs.omegaY) << ',' << fmt17(s.coeffs.omegaZ) << ','
           << coefficient_source_name(s.source) << '\n';
}

/// Trajectory CSV: t, norm, then re/im per amplitude.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().dim();
    os << "t,norm";
    for (std::size_t k = 0; k < dim; ++k) os << ",re_" << k << ",im_" << k;
    os << '\n';
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << fmt17(traj.times[i]) << ',' << fmt17(traj.norms[i]);
        for (std::size_t k = 0; k < dim; ++k)
            os << ',' << fmt17(traj.states[i][k].real()) << ','
               << fmt17(traj.states[i][k].imag());
        os << '\n';
    }
}

/// Trajectory CSV with selected populations instead of raw amplitudes.
inline void write_population_csv(std::ostream& os, const Trajectory& traj,
                                 const std::vector<std::pair<std::string, StateVector>>& bases) {
    os << "t,norm";
    for (const auto& [name, basis] : bases) os << ",p_" << name;
    os << '\n';
    std::vector<std::vector<double>> columns;
    for (const auto& [name, basis] : bases) columns.push_back(population(traj, basis));
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << fmt17(traj.times[i]) << ',' << fmt17(traj.norms[i]);
        for (const auto& col : columns) os << ',' << fmt17(col[i]);
        os << '\n';
    }
}

namespace detail {

inline std::string state_json(const StateVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ',';
        out += '[' + fmt17(v[i].real()) + ',' + fmt17(v[i].imag()) + ']';
    }
    return out + ']';
}

} // namespace detail

/// Report JSON, hand-assembled with a stable field order so identical runs
/// are byte-identical.
inline std::string deutsch_report_json(const DeutschReport& r) {
    std::string out = "{";
    out += "\"mode\":\"" + std::string(deutsch_mode_name(r.mode)) + "\",";
    out += "\"final_state\":" + detail::state_json(r.final_state) + ",";
    out += "\"p_plus\":" + fmt17(r.p_plus) + ",";
    out += "\"p_minus\":" + fmt17(r.p_minus) + ",";
    out += "\"verdict\":\"" + std::string(deutsch_verdict_name(r.verdict)) + "\",";
    out += std::string("\"verdict_correct\":") + (r.verdict_correct ? "true" : "false") + ",";
    out += "\"hadamard_fidelity\":" + fmt17(r.hadamard_fidelity);
    return out + "}";
}

inline std::string grover_report_json(const GroverReport& r) {
    std::string out = "{";
    out += "\"alpha\":" + fmt17(r.alpha) + ",";
    out += "\"theta_tau\":" + fmt17(r.theta_tau) + ",";
    out += "\"epsilon\":" + fmt17(r.epsilon) + ",";
    out += "\"predicted_p\":" + fmt17(r.predicted_p) + ",";
    out += "\"integrated_p\":" + fmt17(r.integrated_p) + ",";
    out += "\"mode\":\"" + std::string(grover_mode_name(r.mode)) + "\"";
    if (r.mode == GroverMode::full_register) {
        out += ",\"p_trajectory\":[";
        for (std::size_t i = 0; i < r.p_trajectory.size(); ++i) {
            if (i) out += ',';
            out += fmt17(r.p_trajectory[i]);
        }
        out += ']';
    }
    return out + "}";
}

inline std::string path_report_json(const PathReport& r) {
    std::string out = "{";
    out += std::string("\"is_unitary\":") + (r.is_unitary ? "true" : "false") + ",";
    out += std::string("\"identity_at_zero\":") + (r.identity_at_zero ? "true" : "false") + ",";
    out += "\"max_unitarity_defect\":" + fmt17(r.max_unitarity_defect) + ",";
    out += "\"max_identity_defect\":" + fmt17(r.max_identity_defect);
    return out + "}";
}

} // namespace hiqe
