#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace orbk {

// Element tolerance for the unit-quaternion groups. All groups handled here
// have order <= 2000; coordinate gaps between distinct elements stay far
// above this.
inline constexpr double kQuaternionTolerance = 1e-9;

struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion operator*(const Quaternion& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z,
                w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x,
                w * q.z + x * q.y - y * q.x + z * q.w};
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
};

// Coordinatewise agreement; q and -q are distinct (binary covers, not
// rotation groups).
inline bool approx_equal(const Quaternion& a, const Quaternion& b,
                         double tol = kQuaternionTolerance) {
    return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
           std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

// Row-major SU(2) matrix of w + xi + yj + zk:
//   [ w+xi   y+zi ]
//   [ -y+zi  w-xi ]
inline std::array<std::complex<double>, 4> su2_matrix(const Quaternion& q) {
    return {std::complex<double>(q.w, q.x), std::complex<double>(q.y, q.z),
            std::complex<double>(-q.y, q.z), std::complex<double>(q.w, -q.x)};
}

inline std::complex<double> su2_determinant(const Quaternion& q) {
    auto m = su2_matrix(q);
    return m[0] * m[3] - m[1] * m[2];
}

// Character of the defining 2-dimensional representation; real for every
// unit quaternion.
inline std::complex<double> su2_trace(const Quaternion& q) {
    auto m = su2_matrix(q);
    return m[0] + m[3];
}

}  // namespace orbk
