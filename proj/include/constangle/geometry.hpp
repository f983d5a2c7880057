#pragma once
// Basic geometric value types: Cartesian/cylindrical points, angles,
// and the error hierarchy shared by the whole kernel.

#include <cmath>
#include <stdexcept>
#include <string>

namespace constangle {

// ---------------------------------------------------------------------------
// Errors. Every domain/math failure derives from GeomError so the CLI can
// map them to a single exit code.
// ---------------------------------------------------------------------------

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVector : GeomError {
    ZeroVector() : GeomError("zero vector has no direction") {}
};
struct InvalidRange : GeomError {
    using GeomError::GeomError;
};
struct OriginOnCurve : GeomError {
    using GeomError::GeomError;
};
struct RadiusNonPositive : GeomError {
    double s;  // parameter where r(s) <= 0 was hit
    explicit RadiusNonPositive(double s_)
        : GeomError("radius became non-positive at s = " + std::to_string(s_)), s(s_) {}
};
struct DomainTouchesAxis : GeomError {
    using GeomError::GeomError;
};
struct DomainViolation : GeomError {
    using GeomError::GeomError;
};
struct SignError : GeomError {
    using GeomError::GeomError;
};
struct TooCloseToBoundary : GeomError {
    using GeomError::GeomError;
};
struct DegeneratePoint : GeomError {
    using GeomError::GeomError;
};
struct AxisPoint : GeomError {
    AxisPoint() : GeomError("cylindrical operation undefined on the z-axis (r = 0)") {}
};
struct KillingFieldVanishes : GeomError {
    using GeomError::GeomError;
};
struct DegenerateGrid : GeomError {
    using GeomError::GeomError;
};
struct IoError : GeomError {
    using GeomError::GeomError;
};

// ---------------------------------------------------------------------------
// Vec3
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
    Vec3 operator-(const Vec3& v) const { return {x - v.x, y - v.y, z - v.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& v) { x += v.x; y += v.y; z += v.z; return *this; }
    Vec3& operator-=(const Vec3& v) { x -= v.x; y -= v.y; z -= v.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double dot(const Vec3& v) const { return x * v.x + y * v.y + z * v.z; }
    Vec3 cross(const Vec3& v) const {
        return {y * v.z - z * v.y, z * v.x - x * v.z, x * v.y - y * v.x};
    }
    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    // Returns the zero vector unchanged rather than dividing by zero.
    Vec3 normalized(double eps = 1e-300) const {
        double n = norm();
        return (n > eps) ? (*this / n) : Vec3{0, 0, 0};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

// ---------------------------------------------------------------------------
// Angle: radians, restricted to [0, pi].
// ---------------------------------------------------------------------------

class Angle {
  public:
    explicit Angle(double radians) : value_(radians) {
        if (!(radians >= 0.0 && radians <= kPi)) {
            throw DomainViolation("angle must lie in [0, pi], got " + std::to_string(radians));
        }
    }
    double radians() const { return value_; }

    static constexpr double kPi = 3.14159265358979323846;

  private:
    double value_;
};

// ---------------------------------------------------------------------------
// Cylindrical coordinates (r, phi, z). phi is unbounded (winding allowed);
// r is kept non-negative.
// ---------------------------------------------------------------------------

struct CylPoint {
    double r = 0.0;    // >= 0
    double phi = 0.0;  // radians
    double z = 0.0;
};

inline Vec3 cyl_to_cart(const CylPoint& p) {
    return {p.r * std::cos(p.phi), p.r * std::sin(p.phi), p.z};
}

inline CylPoint cart_to_cyl(const Vec3& v) {
    return {std::hypot(v.x, v.y), std::atan2(v.y, v.x), v.z};
}

// Angle between two nonzero vectors, in [0, pi]. The cosine is clamped into
// [-1, 1] before acos to absorb rounding overshoot (at most a few ulp).
inline Angle angle_between(const Vec3& a, const Vec3& b) {
    double na = a.norm();
    double nb = b.norm();
    if (na < 1e-300 || nb < 1e-300) throw ZeroVector{};
    double c = a.dot(b) / (na * nb);
    c = std::max(-1.0, std::min(1.0, c));
    return Angle(std::acos(c));
}

}  // namespace constangle
