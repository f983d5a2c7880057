#pragma once
// Killing vector fields of Euclidean 3-space. The algebra is 6-dimensional;
// a field is stored as coefficients over the ordered basis
//   (dx, dy, dz, -y dx + x dy, -z dy + y dz, z dx - x dz)
// i.e. three translations followed by the rotations about the z, x and y axes.

#include <array>
#include <functional>

#include "constangle/geometry.hpp"

namespace constangle {

struct KillingField {
    std::array<double, 6> coeff{};

    Vec3 eval(const Vec3& p) const {
        const double a1 = coeff[0], a2 = coeff[1], a3 = coeff[2];
        const double a4 = coeff[3], a5 = coeff[4], a6 = coeff[5];
        return {a1 - a4 * p.y + a6 * p.z,
                a2 + a4 * p.x - a5 * p.z,
                a3 + a5 * p.y - a6 * p.x};
    }

    static KillingField translation_x() { return {{1, 0, 0, 0, 0, 0}}; }
    static KillingField translation_y() { return {{0, 1, 0, 0, 0, 0}}; }
    static KillingField translation_z() { return {{0, 0, 1, 0, 0, 0}}; }
    static KillingField rotation_z() { return {{0, 0, 0, 1, 0, 0}}; }
    static KillingField rotation_x() { return {{0, 0, 0, 0, 1, 0}}; }
    static KillingField rotation_y() { return {{0, 0, 0, 0, 0, 1}}; }
    static KillingField basis(int i) {
        KillingField f{};
        f.coeff[i] = 1.0;
        return f;
    }
};

inline Vec3 killing_eval(const KillingField& V, const Vec3& p) { return V.eval(p); }

// Residual of the Killing equation <D_Y W, Z> + <D_Z W, Y> at p, with the
// directional derivatives taken by central differences of step h. Vanishes
// (up to O(h^2) truncation plus rounding) exactly when W is Killing.
// W is an arbitrary callable so that non-Killing counterexamples can be fed in.
inline double killing_residual(const std::function<Vec3(const Vec3&)>& W, const Vec3& p,
                               const Vec3& Y, const Vec3& Z, double h = 1e-4) {
    auto dir_deriv = [&](const Vec3& d) {
        return (W(p + d * h) - W(p - d * h)) / (2.0 * h);
    };
    return dot(dir_deriv(Y), Z) + dot(dir_deriv(Z), Y);
}

inline double killing_residual(const KillingField& V, const Vec3& p, const Vec3& Y,
                               const Vec3& Z, double h = 1e-4) {
    return killing_residual([&](const Vec3& q) { return V.eval(q); }, p, Y, Z, h);
}

}  // namespace constangle
