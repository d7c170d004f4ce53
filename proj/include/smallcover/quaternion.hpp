#pragma once

// Quaternions over Q(sqrt 5).  Facet centers of the 120-cell and the
// isometries acting on them live here; only cosines of spherical distances
// are ever compared, never angles.

#include "smallcover/exact.hpp"

#include <stdexcept>

namespace smallcover {

struct Quaternion {
    QuadraticRational w, x, y, z;

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        };
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    QuadraticRational norm_squared() const { return w * w + x * x + y * y + z * z; }

    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

    // Total order by real value of the components; used for exact lookup maps.
    friend bool operator<(const Quaternion& p, const Quaternion& q) {
        if (p.w != q.w) return p.w < q.w;
        if (p.x != q.x) return p.x < q.x;
        if (p.y != q.y) return p.y < q.y;
        return p.z < q.z;
    }
};

inline Quaternion quaternion_one() {
    return {QuadraticRational(1), QuadraticRational(0), QuadraticRational(0), QuadraticRational(0)};
}

// Cosine of the spherical distance for unit quaternions.
inline QuadraticRational inner_product(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

// Smallest k >= 1 with q^k = 1.  All 120 facet centers have order <= 10;
// the cap guards against non-torsion input.
inline int multiplicative_order(const Quaternion& q, int cap = 60) {
    if (q.norm_squared() != QuadraticRational(1))
        throw std::domain_error("multiplicative_order: not a unit quaternion");
    Quaternion one = quaternion_one();
    Quaternion p = q;
    for (int k = 1; k <= cap; ++k) {
        if (p == one) return k;
        p = p * q;
    }
    throw std::domain_error("multiplicative_order: order cap exceeded");
}

}  // namespace smallcover
