#include "adslen/adscore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "adslen/errors.hpp"

namespace adslen {

double ads_form(const Mat2& X, const Mat2& Y) {
    // -tr(X adj Y)/2 expanded
    return -(X.a * Y.d + X.d * Y.a - X.b * Y.c - X.c * Y.b) / 2;
}

AdsPoint AdsPoint::normalize(const Mat2& raw) {
    double d = raw.det();
    if (!(d > 0)) {
        std::ostringstream os;
        os << "matrix " << raw << " has det " << d << ", not a point of the quadric";
        throw Error(ErrorKind::Domain, os.str());
    }
    return {(1 / std::sqrt(d)) * raw};
}

AdsVector AdsVector::make(const AdsPoint& base, const Mat2& v) {
    double o = ads_form(base.m, v), n = ads_form(v, v);
    if (std::fabs(o) > kCausalTol || std::fabs(std::fabs(n) - 1) > kCausalTol) {
        std::ostringstream os;
        os << "tangent vector has <x,v> = " << o << ", <v,v> = " << n;
        throw Error(ErrorKind::Orthogonality, os.str());
    }
    return {base, v};
}

const char* separation_name(Separation s) {
    switch (s) {
        case Separation::Spacelike: return "spacelike";
        case Separation::Timelike: return "timelike";
        case Separation::LightlikeOrEqual: return "lightlike-or-equal";
    }
    return "?";
}

Separation classify_separation(const AdsPoint& x, const AdsPoint& y) {
    double g = std::fabs(ads_form(x.m, y.m));
    if (g > 1 + kCausalTol) return Separation::Spacelike;
    if (g < 1 - kCausalTol) return Separation::Timelike;
    return Separation::LightlikeOrEqual;
}

AdsPoint geodesic_point(const AdsVector& s, double t) {
    Mat2 m = s.timelike() ? std::cos(t) * s.base.m + std::sin(t) * s.v
                          : std::cosh(t) * s.base.m + std::sinh(t) * s.v;
    return AdsPoint::normalize(m);
}

double spacelike_distance(const AdsPoint& x, const AdsPoint& y) {
    double g = std::fabs(ads_form(x.m, y.m));
    if (g < 1 - kCausalTol) {
        std::ostringstream os;
        os << "points are timelike separated, |<x,y>| = " << g;
        throw Error(ErrorKind::Separation, os.str());
    }
    return std::acosh(std::max(1.0, g));
}

double timelike_distance(const AdsPoint& x, const AdsPoint& y) {
    double g = std::fabs(ads_form(x.m, y.m));
    if (g >= 1 - kCausalTol) return 0;
    return std::acos(g);
}

BoundaryPointAds BoundaryPointAds::from(const Mat2& raw) {
    double n = raw.frobenius();
    if (n == 0 || std::fabs(raw.det()) >= 1e-10 * n * n) {
        std::ostringstream os;
        os << "matrix " << raw << " is not of rank one";
        throw Error(ErrorKind::Rank, os.str());
    }
    return {raw};
}

std::pair<ProjectivePoint, ProjectivePoint> boundary_pair(const BoundaryPointAds& p) {
    const Mat2& m = p.m;
    // image: the larger column; kernel: orthogonal to the larger row
    bool col0 = std::hypot(m.a, m.c) >= std::hypot(m.b, m.d);
    ProjectivePoint im = col0 ? ProjectivePoint{m.a, m.c} : ProjectivePoint{m.b, m.d};
    bool row0 = std::hypot(m.a, m.b) >= std::hypot(m.c, m.d);
    ProjectivePoint ker = row0 ? ProjectivePoint{-m.b, m.a} : ProjectivePoint{-m.d, m.c};
    return {im.normalized(), ker.normalized()};
}

BoundaryPointAds pair_to_boundary(const ProjectivePoint& im, const ProjectivePoint& ker) {
    auto u = im.normalized(), k = ker.normalized();
    // u (-k.y, k.x): rows annihilate k
    return {Mat2{-u.x * k.y, u.x * k.x, -u.y * k.y, u.y * k.x}};
}

SpacelikeLine SpacelikeLine::through(const Mat2& plus, const Mat2& minus) {
    double g = ads_form(plus, minus);
    double scale = plus.frobenius() * minus.frobenius();
    if (std::fabs(g) <= 1e-14 * scale) throw Error(ErrorKind::Degenerate, "line endpoints are orthogonal (lightlike)");
    Mat2 m = g < 0 ? minus : -minus;
    double k = 1 / std::sqrt(2 * std::fabs(g));
    return {k * plus, k * m};
}

AdsPoint SpacelikeLine::at(double t) const { return {std::exp(t) * lp + std::exp(-t) * lm}; }

LineProjection project_to_line(const AdsPoint& y, const SpacelikeLine& l) {
    double a = ads_form(y.m, l.lp), b = ads_form(y.m, l.lm);
    if (!(a * b > 0)) {
        std::ostringstream os;
        os << "rays to the line ends are not both spacelike (<y,l+> = " << a << ", <y,l-> = " << b << ")";
        throw Error(ErrorKind::Degenerate, os.str());
    }
    double t = 0.5 * std::log(b / a);
    // with <lp, lm> = -1/2 the minimum sqrt(2ab / (1/2)) is 2 sqrt(ab)
    double m = 2 * std::sqrt(a * b);
    AdsPoint foot = l.at(t);
    if (a > 0) foot.m = -foot.m;
    return {foot, m, t};
}

double move_endpoints(const AdsPoint& x, const AdsPoint& y0, const Mat2& v, const Mat2& w0, double t) {
    Mat2 y = y0.m, w = w0;
    if (ads_form(x.m, y) > 0) {
        y = -y;
        w = -w;
    }
    auto bad = [](const char* what, double val) {
        std::ostringstream os;
        os << what << " = " << val;
        throw Error(ErrorKind::Orthogonality, os.str());
    };
    const double tol = 1e-9;
    if (std::fabs(ads_form(x.m, v)) > tol) bad("<x,v>", ads_form(x.m, v));
    if (std::fabs(ads_form(y, w)) > tol) bad("<y,w>", ads_form(y, w));
    if (std::fabs(ads_form(y, v)) > tol) bad("<y,v>", ads_form(y, v));
    if (std::fabs(ads_form(x.m, w)) > tol) bad("<x,w>", ads_form(x.m, w));
    if (std::fabs(ads_form(v, v) + 1) > tol) bad("<v,v> + 1", ads_form(v, v) + 1);
    if (std::fabs(ads_form(w, w) + 1) > tol) bad("<w,w> + 1", ads_form(w, w) + 1);
    double xy = -ads_form(x.m, y), vw = -ads_form(v, w);
    if (xy < 1 - kCausalTol) bad("segment is not spacelike, -<x,y>", xy);
    if (vw < 1 - kCausalTol) bad("normals on opposite sides, -<v,w>", vw);

    double c = std::cos(t), s = std::sin(t);
    Mat2 p = c * x.m + s * v, q = c * y + s * w;
    double lhs = -ads_form(p, q);
    double rhs = c * c * xy + s * s * vw;
    if (std::fabs(lhs - rhs) > 1e-10 * std::max(1.0, std::fabs(rhs))) {
        std::ostringstream os;
        os << "moved segment: -<p,q> = " << lhs << " but closed form gives " << rhs;
        throw Error(ErrorKind::Constraint, os.str());
    }
    return lhs;
}

AnalysisConstants analysis_constants(double a0, double b0) {
    if (!(a0 > 0) || !(b0 > 0) || b0 > std::numbers::pi / 2 + 1e-15) {
        std::ostringstream os;
        os << "analysis constants need a0 > 0 and b0 in (0, pi/2]; got a0 = " << a0 << ", b0 = " << b0;
        throw Error(ErrorKind::Domain, os.str());
    }
    double cb = std::cos(b0), sb = std::sin(b0);
    AnalysisConstants k;
    k.a0 = a0;
    k.b0 = b0;
    k.kappa = -std::log(cb * cb + sb * sb / std::cosh(a0));
    k.c0 = 1 / std::cosh(a0);
    return k;
}

double eta(double c) {
    if (!(c > 0) || c > 1) {
        std::ostringstream os;
        os << "eta(c) needs c in (0, 1], got " << c;
        throw Error(ErrorKind::Domain, os.str());
    }
    return std::acosh(1 / c);
}

AnalysisSlack analysis_grid_slack(const AnalysisConstants& k, int na, int nb, double span) {
    AnalysisSlack out{INFINITY, INFINITY};
    for (int i = 0; i < na; ++i) {
        double a = k.a0 + span * i / (na - 1);
        double ch = std::cosh(a);
        for (int j = 0; j < nb; ++j) {
            double b = k.b0 + (std::numbers::pi / 2 - k.b0) * j / std::max(1, nb - 1);
            double cb = std::cos(b), sb = std::sin(b);
            double lhs = cb * cb * ch + sb * sb * std::cosh(a - k.a0);
            out.first = std::min(out.first, (std::cosh(a - k.kappa) - lhs) / ch);
            double c = std::min(1.0, k.c0 + (1 - k.c0) * j / std::max(1, nb - 1));
            out.second = std::min(out.second, (c * ch - std::cosh(a - eta(c))) / ch);
        }
    }
    return out;
}

}  // namespace adslen
