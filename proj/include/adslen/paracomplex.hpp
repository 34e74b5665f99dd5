#pragma once

#include <ostream>

#include "adslen/mat2.hpp"

namespace adslen {

// x + tau*y with tau^2 = 1.
struct ParaComplex {
    double re = 0;
    double ta = 0;

    constexpr ParaComplex() = default;
    constexpr ParaComplex(double r, double t = 0) : re(r), ta(t) {}

    // Idempotent coordinates: z = l*e_l + r*e_r.
    constexpr double l() const { return re + ta; }
    constexpr double r() const { return re - ta; }
    static constexpr ParaComplex from_idempotent(double l, double r) { return {(l + r) / 2, (l - r) / 2}; }
};

inline constexpr ParaComplex tau{0, 1};
inline constexpr ParaComplex e_l{0.5, 0.5};
inline constexpr ParaComplex e_r{0.5, -0.5};

constexpr ParaComplex operator+(ParaComplex z, ParaComplex w) { return {z.re + w.re, z.ta + w.ta}; }
constexpr ParaComplex operator-(ParaComplex z, ParaComplex w) { return {z.re - w.re, z.ta - w.ta}; }
constexpr ParaComplex operator-(ParaComplex z) { return {-z.re, -z.ta}; }
constexpr ParaComplex operator*(ParaComplex z, ParaComplex w) {
    return {z.re * w.re + z.ta * w.ta, z.re * w.ta + z.ta * w.re};
}
constexpr ParaComplex operator*(double k, ParaComplex z) { return {k * z.re, k * z.ta}; }
constexpr bool operator==(ParaComplex z, ParaComplex w) { return z.re == w.re && z.ta == w.ta; }

constexpr ParaComplex conj(ParaComplex z) { return {z.re, -z.ta}; }
constexpr double norm_sq(ParaComplex z) { return z.re * z.re - z.ta * z.ta; }

// Throws NonInvertible on zero divisors.
ParaComplex inverse(ParaComplex z);
ParaComplex operator/(ParaComplex z, ParaComplex w);

ParaComplex pc_exp(ParaComplex z);
// Defined on B+ = {re > 0, re^2 - ta^2 > 0}; throws Domain otherwise.
ParaComplex pc_log(ParaComplex z);
bool in_b_plus(ParaComplex z);

std::ostream& operator<<(std::ostream& os, ParaComplex z);

// Point of RP^1 as a homogeneous pair [x : y]; affine value x/y.
struct ProjectivePoint {
    double x = 1;
    double y = 0;

    static ProjectivePoint from_real(double t) { return {t, 1}; }
    static ProjectivePoint infinity() { return {1, 0}; }

    ProjectivePoint normalized() const;
    // x/y, or +inf when y = 0.
    double affine() const;
};

struct ParaProjectivePoint {
    ProjectivePoint left;
    ProjectivePoint right;
};

constexpr double det(const ProjectivePoint& p, const ProjectivePoint& q) { return p.x * q.y - p.y * q.x; }

inline ProjectivePoint operator*(const Mat2& m, const ProjectivePoint& p) {
    return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q, double tol = 1e-9);

// +1 if (p, q, r) is positively cyclically ordered on RP^1, -1 if negatively, 0 if two coincide.
int cyclic_orientation(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

inline constexpr double kCrossRatioTol = 1e-14;

// det(a,c)det(b,d) / (det(a,d)det(b,c)); +inf marks a vanishing denominator.
double cross_ratio_real(const ProjectivePoint& a, const ProjectivePoint& b,
                        const ProjectivePoint& c, const ProjectivePoint& d);

// e_l * beta(lefts) + e_r * beta(rights); throws Degenerate if either factor is infinite.
ParaComplex cross_ratio_para(const ParaProjectivePoint& a, const ParaProjectivePoint& b,
                             const ParaProjectivePoint& c, const ParaProjectivePoint& d);

}  // namespace adslen
