#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace superior {

/// Dense point in R^J. Entries are expected to stay finite; boundary code
/// (problem I/O, generators) validates, algorithmic kernels assume it.
using Vector = std::vector<double>;

namespace vec {

inline double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

inline double norm_sq(const Vector& a) { return dot(a, a); }

inline double norm(const Vector& a) { return std::sqrt(norm_sq(a)); }

inline double dist(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

/// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += alpha * x[j];
}

inline Vector scaled(double alpha, const Vector& x) {
    Vector out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = alpha * x[j];
    return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
    return out;
}

inline bool all_finite(const Vector& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline Vector zeros(std::size_t n) { return Vector(n, 0.0); }

} // namespace vec
} // namespace superior
