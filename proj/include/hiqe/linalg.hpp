#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hiqe/error.hpp"

namespace hiqe {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

inline void require_finite(const std::vector<cplx>& values, const char* what) {
    for (cplx z : values)
        require(is_finite(z), std::string(what) + ": non-finite entry");
}

} // namespace detail

/// Normalized complex amplitude vector, dim >= 2. The checked constructor
/// demands unit norm within 1e-12; `normalized` rescales arbitrary input;
/// `raw` skips the norm requirement (used for un-renormalized operator
/// application results).
class StateVector {
public:
    static constexpr double kNormTolerance = 1e-12;

    explicit StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
        validate_shape();
        detail::require(std::abs(norm() - 1.0) <= kNormTolerance,
                        "StateVector: amplitudes not normalized");
    }

    StateVector(std::initializer_list<cplx> amplitudes)
        : StateVector(std::vector<cplx>(amplitudes)) {}

    static StateVector normalized(std::vector<cplx> amplitudes) {
        StateVector v = raw(std::move(amplitudes));
        const double n = v.norm();
        detail::require(n > 0.0, "StateVector: cannot normalize the zero vector");
        for (cplx& a : v.amps_) a /= n;
        return v;
    }

    static StateVector raw(std::vector<cplx> amplitudes) {
        StateVector v(unchecked_tag{}, std::move(amplitudes));
        v.validate_shape();
        return v;
    }

    static StateVector basis_state(std::size_t dim, std::size_t index) {
        detail::require(index < dim, "basis_state: index out of range");
        std::vector<cplx> a(dim, cplx(0.0, 0.0));
        a[index] = 1.0;
        return StateVector(std::move(a));
    }

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm() const {
        double s = 0.0;
        for (cplx a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    StateVector renormalized() const { return normalized(amps_); }

private:
    struct unchecked_tag {};
    StateVector(unchecked_tag, std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {}

    void validate_shape() const {
        detail::require(amps_.size() >= 2, "StateVector: dim must be >= 2");
        detail::require_finite(amps_, "StateVector");
    }

    std::vector<cplx> amps_;
};

/// Dense square complex matrix, row-major.
class OperatorMatrix {
public:
    explicit OperatorMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, cplx(0.0, 0.0)) {
        detail::require(dim >= 1, "OperatorMatrix: dim must be positive");
    }

    OperatorMatrix(std::size_t dim, std::vector<cplx> entries)
        : dim_(dim), entries_(std::move(entries)) {
        detail::require(dim >= 1, "OperatorMatrix: dim must be positive");
        detail::require(entries_.size() == dim * dim, "OperatorMatrix: entry count != dim^2");
        detail::require_finite(entries_, "OperatorMatrix");
    }

    static OperatorMatrix identity(std::size_t dim) {
        OperatorMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static OperatorMatrix zero(std::size_t dim) { return OperatorMatrix(dim); }

    static OperatorMatrix pauli_x() { return OperatorMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
    static OperatorMatrix pauli_y() {
        return OperatorMatrix(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0});
    }
    static OperatorMatrix pauli_z() { return OperatorMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<cplx>& entries() const { return entries_; }

    OperatorMatrix& operator+=(const OperatorMatrix& rhs) {
        detail::require(dim_ == rhs.dim_, "operator+=: dimension mismatch");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
        return *this;
    }

    OperatorMatrix& operator-=(const OperatorMatrix& rhs) {
        detail::require(dim_ == rhs.dim_, "operator-=: dimension mismatch");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
        return *this;
    }

    OperatorMatrix& operator*=(cplx scale) {
        for (cplx& e : entries_) e *= scale;
        return *this;
    }

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(cplx scale, OperatorMatrix a) { return a *= scale; }

private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

inline OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
    detail::require(a.dim() == b.dim(), "matmul: dimension mismatch");
    const std::size_t n = a.dim();
    OperatorMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline OperatorMatrix dagger(const OperatorMatrix& a) {
    const std::size_t n = a.dim();
    OperatorMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

/// Matrix-vector product. The result is not renormalized; callers that need a
/// unit vector must check or renormalize explicitly.
inline StateVector apply(const OperatorMatrix& a, const StateVector& v) {
    detail::require(a.dim() == v.dim(), "apply: dimension mismatch");
    const std::size_t n = a.dim();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return StateVector::raw(std::move(out));
}

inline cplx inner(const StateVector& u, const StateVector& v) {
    detail::require(u.dim() == v.dim(), "inner: dimension mismatch");
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

inline OperatorMatrix outer(const StateVector& u, const StateVector& v) {
    detail::require(u.dim() == v.dim(), "outer: dimension mismatch");
    const std::size_t n = u.dim();
    OperatorMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = u[i] * std::conj(v[j]);
    return out;
}

/// Global-phase-insensitive overlap |<u|v>|^2, clamped to [0, 1].
inline double fidelity(const StateVector& u, const StateVector& v) {
    detail::require(u.dim() == v.dim(), "fidelity: dimension mismatch");
    detail::require(std::abs(u.norm() - 1.0) <= 1e-6 && std::abs(v.norm() - 1.0) <= 1e-6,
                    "fidelity: inputs must be normalized");
    const double f = std::norm(inner(u, v));
    return std::clamp(f, 0.0, 1.0);
}

inline double max_abs_entry(const OperatorMatrix& a) {
    double m = 0.0;
    for (cplx e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    detail::require(a.dim() == b.dim(), "max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

/// Max-entry magnitude of the anti-Hermitian part (A - A^dag)/2.
inline double anti_hermitian_defect(const OperatorMatrix& a) {
    const std::size_t n = a.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m = std::max(m, 0.5 * std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline OperatorMatrix hermitized(const OperatorMatrix& a) {
    const std::size_t n = a.dim();
    OperatorMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return out;
}

/// Expansion of a 2x2 Hermitian operator over {identity, pauli_x, pauli_y,
/// pauli_z}: H = omega0/2 * I + (omegaX*X + omegaY*Y + omegaZ*Z)/2.
/// All values are angular frequencies (hbar = 1). omega0 carries the
/// physically irrelevant global-phase component.
struct PauliCoefficients {
    double omega0 = 0.0;
    double omegaX = 0.0;
    double omegaY = 0.0;
    double omegaZ = 0.0;

    OperatorMatrix reconstruct() const {
        OperatorMatrix h(2);
        h(0, 0) = 0.5 * (omega0 + omegaZ);
        h(1, 1) = 0.5 * (omega0 - omegaZ);
        h(0, 1) = 0.5 * cplx(omegaX, -omegaY);
        h(1, 0) = 0.5 * cplx(omegaX, omegaY);
        return h;
    }
};

/// Inverse of PauliCoefficients::reconstruct. Input must be 2x2 and Hermitian
/// within 1e-10 (max entry deviation); it is symmetrized before decomposition
/// so the tiny anti-Hermitian residue of finite-difference extraction cannot
/// leak into the coefficients.
inline PauliCoefficients pauli_decompose(const OperatorMatrix& h) {
    detail::require(h.dim() == 2, "pauli_decompose: requires a 2x2 operator");
    if (anti_hermitian_defect(h) > 1e-10)
        throw validation_error("pauli_decompose: input not Hermitian within 1e-10");
    const OperatorMatrix s = hermitized(h);
    PauliCoefficients c;
    c.omega0 = (s(0, 0) + s(1, 1)).real();
    c.omegaX = 2.0 * s(0, 1).real();
    c.omegaY = -2.0 * s(0, 1).imag();
    c.omegaZ = (s(0, 0) - s(1, 1)).real();
    return c;
}

/// Embed a 2x2 operator block into an N-dimensional space spanned by the
/// orthonormal pair (b1, b2); the orthogonal complement maps to zero.
inline OperatorMatrix embed_two_level(const OperatorMatrix& block, const StateVector& b1,
                                      const StateVector& b2) {
    detail::require(block.dim() == 2, "embed_two_level: block must be 2x2");
    detail::require(b1.dim() == b2.dim(), "embed_two_level: basis dimension mismatch");
    detail::require(std::abs(b1.norm() - 1.0) <= 1e-10 && std::abs(b2.norm() - 1.0) <= 1e-10 &&
                        std::abs(inner(b1, b2)) <= 1e-10,
                    "embed_two_level: basis pair must be orthonormal");
    const std::size_t n = b1.dim();
    const StateVector* basis[2] = {&b1, &b2};
    OperatorMatrix out(n);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            const cplx w = block(p, q);
            if (w == cplx(0.0, 0.0)) continue;
            for (std::size_t r = 0; r < n; ++r) {
                const cplx wr = w * (*basis[p])[r];
                if (wr == cplx(0.0, 0.0)) continue;
                for (std::size_t c = 0; c < n; ++c) out(r, c) += wr * std::conj((*basis[q])[c]);
            }
        }
    return out;
}

} // namespace hiqe
