#pragma once

#include <utility>

#include "adslen/mat2.hpp"
#include "adslen/paracomplex.hpp"

namespace adslen {

// <X,Y> = -tr(X adj Y)/2, so <X,X> = -det X and SL2 is the norm -1 quadric.
double ads_form(const Mat2& X, const Mat2& Y);

// (A, B) . X = A X B^-1 for A, B of determinant 1.
inline Mat2 ads_act(const Mat2& A, const Mat2& X, const Mat2& B) { return A * X * B.adj(); }

inline constexpr double kCausalTol = 1e-10;

struct AdsPoint {
    Mat2 m = Mat2::identity();

    // Rescales to <m,m> = -1; throws Domain unless det m > 0.
    static AdsPoint normalize(const Mat2& raw);
};

// Tangent vector at base: <base, v> = 0 and <v, v> = +-1.
struct AdsVector {
    AdsPoint base;
    Mat2 v;

    // Throws Orthogonality when v is not a unit tangent at base.
    static AdsVector make(const AdsPoint& base, const Mat2& v);
    bool timelike() const { return ads_form(v, v) < 0; }
};

enum class Separation { Spacelike, Timelike, LightlikeOrEqual };
const char* separation_name(Separation s);

Separation classify_separation(const AdsPoint& x, const AdsPoint& y);

// cosh t x + sinh t v (spacelike v) or cos t x + sin t v (timelike v).
AdsPoint geodesic_point(const AdsVector& start, double t);

// arccosh |<x,y>|; throws Separation on a timelike pair.
double spacelike_distance(const AdsPoint& x, const AdsPoint& y);
// arccos |<x,y>| on timelike pairs, 0 otherwise.
double timelike_distance(const AdsPoint& x, const AdsPoint& y);

// Rank-one matrix up to scale, a point of the boundary RP1 x RP1.
struct BoundaryPointAds {
    Mat2 m;

    // Throws Rank unless |det| < 1e-10 |m|^2 and m != 0.
    static BoundaryPointAds from(const Mat2& raw);
};

// ([Im m], [Ker m]).
std::pair<ProjectivePoint, ProjectivePoint> boundary_pair(const BoundaryPointAds& p);
BoundaryPointAds pair_to_boundary(const ProjectivePoint& im, const ProjectivePoint& ker);

// l(t) = e^t lp + e^-t lm with <lp, lm> = -1/2.
struct SpacelikeLine {
    Mat2 lp;
    Mat2 lm;

    // Rescales the two lifts; throws Degenerate if they are orthogonal.
    static SpacelikeLine through(const Mat2& plus, const Mat2& minus);
    AdsPoint at(double t) const;
};

struct LineProjection {
    AdsPoint foot;
    double m;      // min over the line of -<y, l(t)>
    double t;      // parameter of the foot
};

// Throws Degenerate when <y, lp> and <y, lm> do not share a sign.
LineProjection project_to_line(const AdsPoint& y, const SpacelikeLine& l);

// -<p, q> for p = cos t x + sin t v, q = cos t y + sin t w. Throws Orthogonality if v, w
// are not unit timelike normals of the segment, and Constraint if the closed form
// cos^2 t cosh d(x,y) + sin^2 t cosh d(v,w) is missed by more than 1e-10.
double move_endpoints(const AdsPoint& x, const AdsPoint& y, const Mat2& v, const Mat2& w, double t);

struct AnalysisConstants {
    double a0 = 0;
    double b0 = 0;
    double kappa = 0;
    double c0 = 0;
};

// kappa = -log(cos^2 b0 + sin^2 b0 / cosh a0), c0 = 1/cosh a0. Throws Domain.
AnalysisConstants analysis_constants(double a0, double b0);
double eta(double c);

// Smallest slack of the two inequalities on a grid (na x nb), divided by cosh a.
struct AnalysisSlack {
    double first;
    double second;
};
AnalysisSlack analysis_grid_slack(const AnalysisConstants& k, int na = 200, int nb = 50, double span = 10);

}  // namespace adslen
