#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adslen/adscore.hpp"
#include "adslen/hyperbolic.hpp"

namespace adslen {

// Pair of punctured-torus holonomies acting on H^{2,1} by X -> rho_x(g) X rho_y(g)^-1.
struct MessRep {
    SurfaceGroupRep rho_x;
    SurfaceGroupRep rho_y;

    static MessRep fuchsian(const SurfaceGroupRep& rep) { return {rep, rep}; }
    static MessRep from_shears(const ShearCoordinates& x, const ShearCoordinates& y);

    // Both factors valid, and type-preserving on the words up to length 3.
    void validate() const;
    MessRep swapped() const { return {rho_y, rho_x}; }
};

// Attracting fixed point of w in each factor, as a para-projective point.
ParaProjectivePoint fixed_pair(const MessRep& mess, const Word& w);

BoundaryPointAds limit_map(const MessRep& mess, const Word& w);
Mat2 lift(const ParaProjectivePoint& p);

struct LoxodromicData {
    SpacelikeLine axis;
    SpacelikeLine dual_axis;
    double length = 0;
    double torsion = 0;
    double length_x = 0;
    double length_y = 0;
};
LoxodromicData loxodromic_data(const MessRep& mess, const Word& w);

// Triangulation (three edges, two triangles) or the spin lamination of one weighted curve.
struct FiniteLamination {
    enum class Kind { Triangulation, Spin };
    Kind kind = Kind::Triangulation;
    std::vector<std::pair<Slope, double>> closed_leaves;

    static FiniteLamination triangulation() { return {}; }
    static FiniteLamination spin(const Slope& c, double weight);

    // At most one closed leaf with positive weight; Spin kind needs exactly one.
    void validate() const;
    Slope leaf() const;
    double weight() const;
};

// One plaque by vertex words (each vertex is the attracting fixed point of its word).
using PlaqueWords = std::array<Word, 3>;
// Plaques of the lamination modulo the group.
std::vector<PlaqueWords> base_plaques(const FiniteLamination& lam);

struct PleatedPoint {
    AdsPoint point;
    int plaque;        // index into base_plaques, -1 for a closed-leaf sample
    std::string word;  // translating element
};

struct PleatedSample {
    std::vector<PleatedPoint> points;
    int density = 0;
    int radius = 0;
    int translates = 0;
    int leaf_translates = 0;
    int collapsed = 0;
};

inline constexpr double kSampleSpan = 6;

// Deep translates whose vertices agree to within this (unit-norm lifts) carry no
// resolvable geometry in double precision and are skipped.
inline constexpr double kCollapseTol = 1e-12;
bool plaque_collapsed(const std::array<BoundaryPointAds, 3>& v);

// Lifts of the three vertices with pairwise form -1/2; throws Configuration if the
// triple is not acausal.
std::array<Mat2, 3> plaque_lifts(const std::array<BoundaryPointAds, 3>& v);

// s xa + e^alpha xb + e^beta xc with alpha, beta on the grid -R + 2R i/n, i < n.
void plaque_samples(const std::array<Mat2, 3>& lifts, int density, const std::function<void(const AdsPoint&)>& emit);

PleatedSample sample_pleated_set(const MessRep& mess, const FiniteLamination& lam, int radius, int density);

// Largest timelike distance between the two clouds (0 if none).
double max_timelike_gap(const std::vector<AdsPoint>& a, const std::vector<AdsPoint>& b);
std::vector<AdsPoint> sample_points(const PleatedSample& s);
// Points of the line at the given parameters.
std::vector<AdsPoint> line_grid(const SpacelikeLine& l, double t0, double t1, int n);

struct GapReport {
    double delta_hat = 0;
    long translates = 0;
    long pruned = 0;
    long collapsed = 0;
    long samples = 0;
};

// Largest timelike distance between a spacelike line and the sampled pleated set. For
// each sample point the distance to the whole line is exact (orthogonal projection);
// whole triangles that provably avoid timelike points are skipped.
GapReport line_gap(const MessRep& mess, const FiniteLamination& lam, const SpacelikeLine& line, int radius,
                   int density);

struct InequalityA {
    double margin = 0;
    double delta_hat = 0;
    double length_rho = 0;
    double torsion_rho = 0;
    double length_z = 0;
};
InequalityA check_inequality_A(const MessRep& mess, const FiniteLamination& lam, const Word& w, int radius,
                               int density);

// rho_t = (E_{-weight t c}(Z), E_{+weight t c}(Z)).
MessRep earthquake_family(const ShearCoordinates& Z, const Slope& c, double weight, double t);

// Geometric intersection of the curve c with the closed geodesic of w, by crossing count.
long curve_word_intersection(const SurfaceGroupRep& rep, const Slope& c, const Word& w, int radius = 10);

struct CombinedInequality {
    double margin = 0;
    double length_t = 0;
    double torsion_t = 0;
    double length_z = 0;
    long intersection = 0;
};
CombinedInequality check_combined_inequality(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                             double t, long intersection);
CombinedInequality check_combined_inequality(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                             double t);

}  // namespace adslen
