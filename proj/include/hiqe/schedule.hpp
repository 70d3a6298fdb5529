#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hiqe/error.hpp"

namespace hiqe {

enum class ScheduleKind { constant, linear, smooth, polynomial };

inline const char* schedule_kind_name(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::constant: return "constant";
        case ScheduleKind::linear: return "linear";
        case ScheduleKind::smooth: return "smooth";
        case ScheduleKind::polynomial: return "polynomial";
    }
    return "?";
}

/// Real-valued control parameter on [0, tau] with an exact analytic
/// derivative. Evaluation outside [0, tau] is an error, not extrapolation.
///
/// Kinds:
///   constant    value v
///   linear      v0 + (v1 - v0) * t/tau
///   smooth      v0 + (v1 - v0) * sin^2(pi t / 2 tau)   (zero slope at both ends)
///   polynomial  sum_k c_k (t/tau)^k
class Schedule {
public:
    static Schedule constant(double value, double tau) {
        return Schedule(ScheduleKind::constant, {value}, tau);
    }
    static Schedule linear(double from, double to, double tau) {
        return Schedule(ScheduleKind::linear, {from, to}, tau);
    }
    static Schedule smooth(double from, double to, double tau) {
        return Schedule(ScheduleKind::smooth, {from, to}, tau);
    }
    static Schedule polynomial(std::vector<double> coeffs, double tau) {
        if (coeffs.empty()) throw validation_error("Schedule: polynomial needs coefficients");
        return Schedule(ScheduleKind::polynomial, std::move(coeffs), tau);
    }

    ScheduleKind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    double tau() const { return tau_; }

    double evaluate(double t) const {
        check_time(t);
        switch (kind_) {
            case ScheduleKind::constant: return params_[0];
            case ScheduleKind::linear: return params_[0] + (params_[1] - params_[0]) * (t / tau_);
            case ScheduleKind::smooth: {
                const double s = std::sin(std::numbers::pi * t / (2.0 * tau_));
                return params_[0] + (params_[1] - params_[0]) * s * s;
            }
            case ScheduleKind::polynomial: {
                const double u = t / tau_;
                double acc = 0.0;
                for (std::size_t k = params_.size(); k-- > 0;) acc = acc * u + params_[k];
                return acc;
            }
        }
        throw validation_error("Schedule: unknown kind");
    }

    double derivative(double t) const {
        check_time(t);
        switch (kind_) {
            case ScheduleKind::constant: return 0.0;
            case ScheduleKind::linear: return (params_[1] - params_[0]) / tau_;
            case ScheduleKind::smooth:
                // d/dt sin^2(pi t / 2 tau) = (pi / 2 tau) sin(pi t / tau)
                return (params_[1] - params_[0]) * (std::numbers::pi / (2.0 * tau_)) *
                       std::sin(std::numbers::pi * t / tau_);
            case ScheduleKind::polynomial: {
                const double u = t / tau_;
                double acc = 0.0;
                for (std::size_t k = params_.size(); k-- > 1;)
                    acc = acc * u + static_cast<double>(k) * params_[k];
                return acc / tau_;
            }
        }
        throw validation_error("Schedule: unknown kind");
    }

private:
    Schedule(ScheduleKind kind, std::vector<double> params, double tau)
        : kind_(kind), params_(std::move(params)), tau_(tau) {
        if (!(tau > 0.0) || !std::isfinite(tau))
            throw validation_error("Schedule: tau must be positive and finite");
        for (double p : params_)
            if (!std::isfinite(p)) throw validation_error("Schedule: non-finite parameter");
    }

    void check_time(double t) const {
        if (!(t >= 0.0 && t <= tau_))
            throw validation_error("Schedule: t=" + std::to_string(t) + " outside [0, " +
                                   std::to_string(tau_) + "]");
    }

    ScheduleKind kind_;
    std::vector<double> params_;
    double tau_;
};

/// Required endpoint values, checked to 1e-12.
struct BoundarySpec {
    double value_at_0 = 0.0;
    double value_at_tau = 0.0;
};

inline bool check_boundaries(const Schedule& s, const BoundarySpec& b) {
    constexpr double tol = 1e-12;
    return std::abs(s.evaluate(0.0) - b.value_at_0) <= tol &&
           std::abs(s.evaluate(s.tau()) - b.value_at_tau) <= tol;
}

} // namespace hiqe
