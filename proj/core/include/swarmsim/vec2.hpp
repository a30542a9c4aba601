#pragma once

#include <cmath>
#include <stdexcept>

namespace swarmsim {

enum class Side { Left, Right };

/// Planar vector used for positions (space units) and velocities
/// (units per timestep). All arithmetic is in 64-bit floating point.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double k) { return {a.x * k, a.y * k}; }
    friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
    constexpr Vec2& operator+=(Vec2 b) {
        x += b.x;
        y += b.y;
        return *this;
    }
    friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

    constexpr bool is_zero() const { return x == 0.0 && y == 0.0; }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product; positive when b lies to the left of a.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline double distance_sq(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Unit vector in the direction of `a`. The zero vector maps to the zero
/// vector: a force with no contributors exerts no influence.
inline Vec2 normalize(Vec2 a) {
    const double n = norm(a);
    if (n == 0.0) return {0.0, 0.0};
    return {a.x / n, a.y / n};
}

/// Unit vector rotated +90 degrees (Left) or -90 degrees (Right) from `a`.
/// Throws std::invalid_argument for the zero vector, which has no direction.
inline Vec2 perpendicular(Vec2 a, Side side) {
    if (a.is_zero()) throw std::invalid_argument("perpendicular: zero vector");
    const Vec2 u = normalize(a);
    return side == Side::Left ? Vec2{-u.y, u.x} : Vec2{u.y, -u.x};
}

}  // namespace swarmsim
