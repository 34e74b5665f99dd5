#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "adslen/hyperbolic.hpp"
#include "adslen/mess.hpp"

namespace adslen {

double length_on_shears(const ShearCoordinates& s, const Word& w);

// Crossings of the closed geodesic of w with the three triangulation edges.
std::array<long, 3> edge_crossings(const Word& w);
bool crosses_every_edge(const Word& w);

inline constexpr double kStrictMargin = 1e-6;

struct SweepRow {
    double s = 0;  // segment parameter in [0, 1]
    ShearCoordinates point;
    double length = 0;
    double margin = 0;       // smallest dyadic midpoint margin centred here
    double wide_margin = 0;  // margin of the widest check centred here
    int level = 0;           // half-width (in grid steps) of that check, 0 at the ends
    bool strict = false;     // wide_margin > kStrictMargin
};

struct SweepReport {
    std::vector<SweepRow> rows;
    int checks = 0;
    double min_margin = 0;
    // the widest checks (the segment midpoint when n - 1 is even) are strict
    bool strict() const;
};

// L_w along the straight segment from X to Y in the real cocycle coordinates of lam.
SweepReport convexity_sweep(const ShearCoordinates& X, const ShearCoordinates& Y, const Word& w, int n,
                            const FiniteLamination& lam = FiniteLamination::triangulation());

struct VariationRow {
    double t = 0;
    double length = 0;
    double ldot = 0;
    double lddot = 0;
    double bound = 0;
    double slack = 0;
};

struct VariationReport {
    std::vector<VariationRow> rows;  // rows[0] is t = 0
    long intersection = 0;           // i(c, w)
    double weight = 0;
    double h = 0;
    bool bound_ok = false;      // slack >= -1e-4 at t = 0
    bool variation_ok = false;  // |Ldot| <= weight i at t = 0
};

// L_w along t -> twist by weight t about c. Extra rows for the listed t values.
VariationReport second_variation_check(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                       double h, const std::vector<double>& ts = {});

// d/dt L_w(twist(Z, c, weight t)) at t = 0, central differences with h = 1e-5.
double length_derivative_fd(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w);

struct KerckhoffResult {
    double value = 0;
    long classes = 0;
    std::vector<int> trajectory;  // class counts found by radius 0..radius
    bool stable = false;          // count unchanged over the last two radii
    std::string warning;
};

KerckhoffResult kerckhoff_derivative(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                     int radius);
// Orientation sign of the cosine sum, fixed once against finite differences at the modular point.
double kerckhoff_sign();

using LengthObjective = std::vector<std::pair<Word, double>>;

double objective_value(const LengthObjective& f, const ShearCoordinates& s);
// Gradient within the plane x + y + z = 0 (five-point stencil, h = 1e-3).
ShearCoordinates objective_gradient(const LengthObjective& f, const ShearCoordinates& s);

inline constexpr double kFlatBound = 1e3;

struct MinimizeResult {
    ShearCoordinates argmin;
    double value = 0;
    double grad_norm = 0;
    int iterations = 0;
    bool converged = false;
    std::string warning;  // non-empty when the objective looks flat or unbounded below
};

MinimizeResult minimize_length(const LengthObjective& f, const ShearCoordinates& init, double tol);

}  // namespace adslen
