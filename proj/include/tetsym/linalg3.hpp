#pragma once

#include <cmath>
#include <algorithm>

#include "tetsym/errors.hpp"

// Minimal 3-vector / 3x3-matrix kernel. Everything here is closed-form and
// double precision; no external linear algebra is used anywhere in the
// project.

namespace tetsym {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;

    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        if (!(std::isfinite(x_) && std::isfinite(y_) && std::isfinite(z_)))
            throw Error("Vec3: non-finite component");
    }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return s * a; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm_sq(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm_sq(a)); }

inline Vec3 normalized(Vec3 a) {
    double n = norm(a);
    if (n == 0.0) throw Error("normalized: zero vector");
    return a / n;
}

// Unsigned angle between two vectors, stable for nearly parallel inputs.
inline double angle_between(Vec3 a, Vec3 b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Row-major semantic layout; m[r][c].
struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    constexpr Mat3() = default;

    static Mat3 from_columns(Vec3 c0, Vec3 c1, Vec3 c2) {
        Mat3 a;
        a.m[0][0] = c0.x; a.m[0][1] = c1.x; a.m[0][2] = c2.x;
        a.m[1][0] = c0.y; a.m[1][1] = c1.y; a.m[1][2] = c2.y;
        a.m[2][0] = c0.z; a.m[2][1] = c1.z; a.m[2][2] = c2.z;
        return a;
    }

    static Mat3 from_rows(Vec3 r0, Vec3 r1, Vec3 r2) {
        Mat3 a;
        a.m[0][0] = r0.x; a.m[0][1] = r0.y; a.m[0][2] = r0.z;
        a.m[1][0] = r1.x; a.m[1][1] = r1.y; a.m[1][2] = r1.z;
        a.m[2][0] = r2.x; a.m[2][1] = r2.y; a.m[2][2] = r2.z;
        return a;
    }

    static Mat3 diagonal(double d0, double d1, double d2) {
        Mat3 a;
        a.m[0][0] = d0; a.m[1][1] = d1; a.m[2][2] = d2;
        return a;
    }

    static Mat3 identity() { return diagonal(1.0, 1.0, 1.0); }

    Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
    Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
};

inline Mat3 transpose(const Mat3& a) {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = a.m[j][i];
    return t;
}

inline Vec3 operator*(const Mat3& a, Vec3 v) {
    return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return c;
}

inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.m[i][j] = s * a.m[i][j];
    return c;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.m[i][j] = a.m[i][j] - b.m[i][j];
    return c;
}

inline double det(const Mat3& a) {
    return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1])
         - a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0])
         + a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

inline double max_abs(const Mat3& a) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a.m[i][j]));
    return r;
}

// Cofactor matrix C with C^t * A = det(A) * I (Cramer's rule).
inline Mat3 cofactor(const Mat3& a) {
    Mat3 c;
    c.m[0][0] = a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1];
    c.m[0][1] = -(a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]);
    c.m[0][2] = a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0];
    c.m[1][0] = -(a.m[0][1] * a.m[2][2] - a.m[0][2] * a.m[2][1]);
    c.m[1][1] = a.m[0][0] * a.m[2][2] - a.m[0][2] * a.m[2][0];
    c.m[1][2] = -(a.m[0][0] * a.m[2][1] - a.m[0][1] * a.m[2][0]);
    c.m[2][0] = a.m[0][1] * a.m[1][2] - a.m[0][2] * a.m[1][1];
    c.m[2][1] = -(a.m[0][0] * a.m[1][2] - a.m[0][2] * a.m[1][0]);
    c.m[2][2] = a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
    return c;
}

// Scale-relative singularity floor: dilating the matrix by s scales both
// sides of the comparison by s^3.
inline double singularity_floor(const Mat3& a) {
    double cmax = 0.0;
    for (int j = 0; j < 3; ++j) cmax = std::max(cmax, norm(a.column(j)));
    return 1e-12 * cmax * cmax * cmax;
}

// A^{-t}, via the cofactor matrix: A^{-1} = cofactor(A)^t / det(A).
inline Mat3 solve_inverse_transpose(const Mat3& a) {
    double d = det(a);
    if (std::abs(d) <= singularity_floor(a))
        throw SingularMatrix("solve_inverse_transpose: |det| below singularity floor");
    return (1.0 / d) * cofactor(a);
}

} // namespace tetsym
