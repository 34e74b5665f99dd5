#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "adslen/mat2.hpp"
#include "adslen/paracomplex.hpp"

namespace adslen {

// Element of PSL2(R): det 1, trace >= 0 representative.
struct MoebiusElement {
    Mat2 m = Mat2::identity();

    static MoebiusElement from(const Mat2& raw);
    double trace() const { return m.tr(); }
    MoebiusElement inverse() const { return {m.adj()}; }
};

MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h);
inline ProjectivePoint operator*(const MoebiusElement& g, const ProjectivePoint& p) { return g.m * p; }

enum class IsometryType { Identity, Elliptic, Parabolic, Hyperbolic };
const char* type_name(IsometryType t);

inline constexpr double kTraceTol = 1e-9;

IsometryType classify(const MoebiusElement& g);
// 2 arccosh(|tr|/2); throws Type unless hyperbolic.
double translation_length(const MoebiusElement& g);

struct FixedPoints {
    ProjectivePoint attracting;
    ProjectivePoint repelling;
};
// Parabolic input returns its fixed point twice; elliptic or identity throws Type.
FixedPoints fixed_points(const MoebiusElement& g);

// Oriented geodesic of H^2 by its endpoints.
struct Geodesic {
    ProjectivePoint from;
    ProjectivePoint to;
};
Geodesic axis(const MoebiusElement& g);

// Hyperbolic element with the axis of g translating by s toward its attracting end.
MoebiusElement axis_translation(const MoebiusElement& g, double s);

// Möbius map taking p1, p2, p3 to q1, q2, q3.
MoebiusElement map_triple(const std::array<ProjectivePoint, 3>& p, const std::array<ProjectivePoint, 3>& q);

// Freely reduced word in a, A = a^-1, b, B = b^-1.
class Word {
public:
    Word() = default;
    Word(std::string_view letters);
    Word(const char* letters) : Word(std::string_view(letters)) {}

    const std::string& str() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    Word inverse() const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word& u, const Word& v) { return u.s_ == v.s_; }

private:
    std::string s_;
};

// Homomorphism a -> ia, b -> ib.
Word substitute(const Word& w, const Word& ia, const Word& ib);
// g w g^-1
Word conjugate(const Word& g, const Word& w);
// Cyclically reduced representative.
Word cyclic_reduce(const Word& w);

struct Slope {
    long p = 0;
    long q = 1;
    static Slope make(long p, long q);
};
bool operator==(const Slope& s, const Slope& t);
std::string to_string(const Slope& s);

struct SurfaceGroupRep {
    MoebiusElement gen_a;
    MoebiusElement gen_b;

    // Throws Type (non-hyperbolic generator) or Constraint (non-parabolic commutator).
    void validate() const;
};

struct ShearCoordinates {
    double x = 0, y = 0, z = 0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    void validate() const;
};
ShearCoordinates operator+(const ShearCoordinates& s, const ShearCoordinates& t);
ShearCoordinates operator-(const ShearCoordinates& s, const ShearCoordinates& t);
ShearCoordinates operator*(double k, const ShearCoordinates& s);
double max_abs_diff(const ShearCoordinates& s, const ShearCoordinates& t);

Mat2 evaluate_matrix(const Mat2& a, const Mat2& b, const Word& w);
MoebiusElement evaluate_word(const SurfaceGroupRep& rep, const Word& w);
SurfaceGroupRep conjugate_rep(const SurfaceGroupRep& rep, const MoebiusElement& h);

SurfaceGroupRep modular_torus();

SurfaceGroupRep shears_to_holonomy(const ShearCoordinates& s);
ShearCoordinates holonomy_to_shears(const SurfaceGroupRep& rep);

// The four lifted puncture vertices of the fundamental quadrilateral, as words whose
// parabolic fixed points they are. Triangles (P0, P1, P3) and (P1, P2, P3).
std::array<Word, 4> quadrilateral_vertices();

// Vertex data of one triangulation edge: shear = log(-beta(lp, lm, u, u2)),
// with u, lm, u2, lp positively cyclically ordered.
struct EdgeQuad {
    Word u, lm, u2, lp;
};
std::array<EdgeQuad, 3> triangulation_edges();
// Lifts of the three edges, by vertex words.
std::array<std::array<Word, 2>, 3> triangulation_edge_lifts();

// Positive basis (curve, partner) of the free group with curve = slope_to_word(c).
// a_expr, b_expr express a, b in that basis (letter a = curve, b = partner).
struct SlopeBasis {
    Word curve, partner;
    Word a_expr, b_expr;
};
SlopeBasis slope_basis(const Slope& c);
Word slope_to_word(const Slope& c);

SurfaceGroupRep twist_deformation(const SurfaceGroupRep& rep, const Slope& c, double t);

long intersection_number(const Slope& c1, const Slope& c2);
// Geometric intersection of the curve c with triangulation edge k, |q|, |p|, |q - p|.
long edge_intersection(const Slope& c, int k);

// Angle in (0, pi) from g1 to g2 at their crossing; throws NoIntersection.
double intersection_angle(const Geodesic& g1, const Geodesic& g2);
// Signed cosine of the same angle.
double intersection_cos(const Geodesic& g1, const Geodesic& g2);

// Depth-first walk over reduced words of length <= radius (identity included).
void for_each_word(const SurfaceGroupRep& rep, int radius,
                   const std::function<void(const std::string&, const Mat2&)>& visit);

// Classes of translates h*g crossing the axis of w, modulo <w>. The optional stabilizer
// is a word fixing g (the curve itself when g is its axis).
struct AxisCrossing {
    double position;   // along the axis of w, in [0, L_w)
    double cos_angle;  // signed, axis of w to the translate
    double cos_transverse;  // same, with the translate oriented to cross from one fixed side
    int depth;         // shortest word length producing the class
    Geodesic translate;
};
std::vector<AxisCrossing> axis_crossings(const SurfaceGroupRep& rep, const Word& w, const Geodesic& g, int radius,
                                         const Word& stabilizer = Word());
// Class counts found at radius 0..radius.
std::vector<int> crossing_trajectory(const std::vector<AxisCrossing>& cs, int radius);

}  // namespace adslen
