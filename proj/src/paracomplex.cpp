#include "adslen/paracomplex.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "adslen/errors.hpp"

namespace adslen {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonInvertible: return "non-invertible element";
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::Degenerate: return "degenerate configuration";
        case ErrorKind::Constraint: return "constraint violated";
        case ErrorKind::Type: return "type error";
        case ErrorKind::NonFuchsian: return "non-Fuchsian configuration";
        case ErrorKind::Separation: return "separation error";
        case ErrorKind::Rank: return "rank error";
        case ErrorKind::Orthogonality: return "orthogonality error";
        case ErrorKind::NoIntersection: return "no intersection";
        case ErrorKind::Configuration: return "configuration error";
        case ErrorKind::Support: return "support error";
    }
    return "error";
}

namespace {
constexpr double kBPlusTol = 1e-12;
}

ParaComplex inverse(ParaComplex z) {
    double n = norm_sq(z);
    double scale = z.re * z.re + z.ta * z.ta;
    if (scale == 0 || std::fabs(n) <= kBPlusTol * scale) {
        std::ostringstream os;
        os << "zero divisor " << z << " has |z|^2 = " << n;
        throw Error(ErrorKind::NonInvertible, os.str());
    }
    return {z.re / n, -z.ta / n};
}

ParaComplex operator/(ParaComplex z, ParaComplex w) { return z * inverse(w); }

ParaComplex pc_exp(ParaComplex z) {
    double e = std::exp(z.re);
    return {e * std::cosh(z.ta), e * std::sinh(z.ta)};
}

bool in_b_plus(ParaComplex z) {
    double scale = std::fabs(z.re) + std::fabs(z.ta);
    if (scale == 0) return false;
    return z.re / scale > kBPlusTol && norm_sq(z) / (scale * scale) > kBPlusTol;
}

ParaComplex pc_log(ParaComplex z) {
    double scale = std::fabs(z.re) + std::fabs(z.ta);
    std::ostringstream os;
    if (scale == 0 || z.re / scale <= kBPlusTol) {
        os << "log of " << z << ": real part not positive (re <= 0)";
        throw Error(ErrorKind::Domain, os.str());
    }
    if (norm_sq(z) / (scale * scale) <= kBPlusTol) {
        os << "log of " << z << ": pseudo-norm not positive (re^2 - ta^2 <= 0)";
        throw Error(ErrorKind::Domain, os.str());
    }
    return ParaComplex::from_idempotent(std::log(z.l()), std::log(z.r()));
}

std::ostream& operator<<(std::ostream& os, ParaComplex z) {
    return os << z.re << (z.ta < 0 ? " - " : " + ") << std::fabs(z.ta) << "τ";
}

ProjectivePoint ProjectivePoint::normalized() const {
    double n = std::hypot(x, y);
    return {x / n, y / n};
}

double ProjectivePoint::affine() const {
    if (y == 0) return std::numeric_limits<double>::infinity();
    return x / y;
}

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
    auto a = p.normalized();
    auto b = q.normalized();
    return std::fabs(det(a, b)) < tol;
}

int cyclic_orientation(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    auto a = p.normalized(), b = q.normalized(), c = r.normalized();
    double s = det(a, b) * det(b, c) * det(c, a);
    return (s > 0) - (s < 0);
}

double cross_ratio_real(const ProjectivePoint& a, const ProjectivePoint& b,
                        const ProjectivePoint& c, const ProjectivePoint& d) {
    auto na = a.normalized(), nb = b.normalized(), nc = c.normalized(), nd = d.normalized();
    double den = det(na, nd) * det(nb, nc);
    if (std::fabs(den) < kCrossRatioTol) return std::numeric_limits<double>::infinity();
    return det(na, nc) * det(nb, nd) / den;
}

ParaComplex cross_ratio_para(const ParaProjectivePoint& a, const ParaProjectivePoint& b,
                             const ParaProjectivePoint& c, const ParaProjectivePoint& d) {
    double bl = cross_ratio_real(a.left, b.left, c.left, d.left);
    double br = cross_ratio_real(a.right, b.right, c.right, d.right);
    if (std::isinf(bl) || std::isinf(br))
        throw Error(ErrorKind::Degenerate, std::string("para cross-ratio has an infinite ") +
                                               (std::isinf(bl) ? "left" : "right") + " component");
    return ParaComplex::from_idempotent(bl, br);
}

}  // namespace adslen
