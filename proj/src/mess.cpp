#include "adslen/mess.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adslen/errors.hpp"
#include "adslen/shearbend.hpp"

namespace adslen {

MessRep MessRep::from_shears(const ShearCoordinates& x, const ShearCoordinates& y) {
    return {shears_to_holonomy(x), shears_to_holonomy(y)};
}

void MessRep::validate() const {
    rho_x.validate();
    rho_y.validate();
    for_each_word(rho_x, 3, [&](const std::string& s, const Mat2&) {
        if (s.empty()) return;
        Word w(s);
        auto tx = classify(evaluate_word(rho_x, w)), ty = classify(evaluate_word(rho_y, w));
        if (tx != ty) {
            std::ostringstream os;
            os << "word " << s << " is " << type_name(tx) << " in X but " << type_name(ty) << " in Y";
            throw Error(ErrorKind::Type, os.str());
        }
    });
}

ParaProjectivePoint fixed_pair(const MessRep& mess, const Word& w) {
    // w = h core h^-1: move the fixed point of the short core instead of evaluating the
    // long product, whose trace loses the parabolic/elliptic distinction to rounding
    Word core = cyclic_reduce(w);
    Word h(std::string_view(w.str()).substr(0, (w.size() - core.size()) / 2));
    auto gx = evaluate_word(mess.rho_x, core), gy = evaluate_word(mess.rho_y, core);
    for (auto [g, side] : {std::pair{gx, "X"}, std::pair{gy, "Y"}})
        if (classify(g) == IsometryType::Elliptic || classify(g) == IsometryType::Identity) {
            std::ostringstream os;
            os << "word " << w.str() << " has " << type_name(classify(g)) << " image in " << side;
            throw Error(ErrorKind::Type, os.str());
        }
    return {(evaluate_word(mess.rho_x, h) * fixed_points(gx).attracting).normalized(),
            (evaluate_word(mess.rho_y, h) * fixed_points(gy).attracting).normalized()};
}

Mat2 lift(const ParaProjectivePoint& p) { return pair_to_boundary(p.left, p.right).m; }

BoundaryPointAds limit_map(const MessRep& mess, const Word& w) {
    auto p = fixed_pair(mess, w);
    return pair_to_boundary(p.left, p.right);
}

LoxodromicData loxodromic_data(const MessRep& mess, const Word& w) {
    auto gx = evaluate_word(mess.rho_x, w), gy = evaluate_word(mess.rho_y, w);
    // translation_length throws Type on non-hyperbolic images
    double lx = translation_length(gx), ly = translation_length(gy);
    auto fx = fixed_points(gx), fy = fixed_points(gy);
    LoxodromicData d;
    d.axis = SpacelikeLine::through(pair_to_boundary(fx.attracting, fy.attracting).m,
                                    pair_to_boundary(fx.repelling, fy.repelling).m);
    d.dual_axis = SpacelikeLine::through(pair_to_boundary(fx.attracting, fy.repelling).m,
                                         pair_to_boundary(fx.repelling, fy.attracting).m);
    d.length_x = lx;
    d.length_y = ly;
    d.length = (lx + ly) / 2;
    d.torsion = std::fabs(lx - ly) / 2;
    return d;
}

FiniteLamination FiniteLamination::spin(const Slope& c, double weight) {
    FiniteLamination lam;
    lam.kind = Kind::Spin;
    lam.closed_leaves.push_back({Slope::make(c.p, c.q), weight});
    lam.validate();
    return lam;
}

void FiniteLamination::validate() const {
    if (closed_leaves.size() > 1) {
        for (std::size_t i = 0; i < closed_leaves.size(); ++i)
            for (std::size_t j = i + 1; j < closed_leaves.size(); ++j)
                if (intersection_number(closed_leaves[i].first, closed_leaves[j].first) != 0)
                    throw Error(ErrorKind::Configuration, "closed leaves " + to_string(closed_leaves[i].first) +
                                                              " and " + to_string(closed_leaves[j].first) +
                                                              " intersect");
        throw Error(ErrorKind::Configuration, "a punctured torus carries at most one closed leaf");
    }
    for (const auto& [c, wt] : closed_leaves)
        if (!(wt > 0)) throw Error(ErrorKind::Configuration, "closed leaf " + to_string(c) + " needs positive weight");
    if (kind == Kind::Spin && closed_leaves.size() != 1)
        throw Error(ErrorKind::Configuration, "spin lamination needs exactly one closed leaf");
    if (kind == Kind::Triangulation && !closed_leaves.empty())
        throw Error(ErrorKind::Configuration, "the triangulation has no closed leaves");
}

Slope FiniteLamination::leaf() const {
    if (closed_leaves.empty()) throw Error(ErrorKind::Support, "lamination has no closed leaf");
    return closed_leaves.front().first;
}

double FiniteLamination::weight() const {
    if (closed_leaves.empty()) throw Error(ErrorKind::Support, "lamination has no closed leaf");
    return closed_leaves.front().second;
}

std::vector<PlaqueWords> base_plaques(const FiniteLamination& lam) {
    lam.validate();
    if (lam.kind == FiniteLamination::Kind::Triangulation) {
        auto P = quadrilateral_vertices();
        return {PlaqueWords{P[0], P[1], P[3]}, PlaqueWords{P[1], P[2], P[3]}};
    }
    auto s = spin_frame(lam.leaf());
    std::vector<PlaqueWords> out;
    for (int k = 0; k < 2; ++k) out.push_back({s.vertex[k], conjugate(s.curve, s.vertex[k]), s.end[k]});
    return out;
}

namespace {

// Ideal point as unit vectors (im, ker) of the rank-one matrix im (J ker)^T. Forms between
// such points factor through 2x2 determinants, which keeps nearby vertices accurate.
struct Ideal {
    ProjectivePoint im, ker;
};

Ideal ideal_of(const BoundaryPointAds& b, double* scale = nullptr) {
    auto [im, ker] = boundary_pair(b);
    if (scale) {
        Mat2 u = pair_to_boundary(im, ker).m;
        double e[4] = {u.a, u.b, u.c, u.d}, m[4] = {b.m.a, b.m.b, b.m.c, b.m.d};
        int k = 0;
        for (int i = 1; i < 4; ++i)
            if (std::fabs(e[i]) > std::fabs(e[k])) k = i;
        *scale = m[k] / e[k];
    }
    return {im, ker};
}

double ideal_form(const Ideal& p, const Ideal& q) { return -0.5 * det(p.im, q.im) * det(p.ker, q.ker); }

std::array<double, 3> pair_forms(const std::array<Ideal, 3>& v) {
    return {ideal_form(v[0], v[1]), ideal_form(v[0], v[2]), ideal_form(v[1], v[2])};
}

bool collapsed(const std::array<double, 3>& g) {
    return std::min({std::fabs(g[0]), std::fabs(g[1]), std::fabs(g[2])}) < kCollapseTol;
}

// signed scale factors taking the unit lifts to pairwise form -1/2
std::array<double, 3> lift_scales(const std::array<double, 3>& g) {
    double g01 = g[0], g02 = g[1], g12 = g[2];
    if (!(g01 * g02 * g12 < 0)) {
        std::ostringstream os;
        os << "plaque vertices are not acausal (pairwise forms " << g01 << ", " << g02 << ", " << g12 << ")";
        throw Error(ErrorKind::Configuration, os.str());
    }
    double a01 = std::fabs(g01), a02 = std::fabs(g02), a12 = std::fabs(g12);
    double c0 = std::sqrt(a12 / (2 * a01 * a02));
    double c1 = 1 / (2 * a01 * c0), c2 = 1 / (2 * a02 * c0);
    return {c0, g01 < 0 ? c1 : -c1, g02 < 0 ? c2 : -c2};
}

std::array<Ideal, 3> ideals(const std::array<BoundaryPointAds, 3>& v) {
    return {ideal_of(v[0]), ideal_of(v[1]), ideal_of(v[2])};
}

}  // namespace

bool plaque_collapsed(const std::array<BoundaryPointAds, 3>& v) { return collapsed(pair_forms(ideals(v))); }

std::array<Mat2, 3> plaque_lifts(const std::array<BoundaryPointAds, 3>& v) {
    auto id = ideals(v);
    auto c = lift_scales(pair_forms(id));
    std::array<Mat2, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = c[i] * pair_to_boundary(id[i].im, id[i].ker).m;
    return out;
}

namespace {

double grid_weight(int i, int n) { return std::exp(-kSampleSpan + 2 * kSampleSpan * i / n); }

// Depth-first walk over reduced words evaluating both factors.
using PairVisitor = std::function<void(const std::string&, const Mat2&, const Mat2&)>;

void pair_walk(const Mat2 gx[4], const Mat2 gy[4], int radius, std::string& word, const Mat2& mx, const Mat2& my,
               int last, const PairVisitor& visit) {
    static const char letters[4] = {'a', 'A', 'b', 'B'};
    visit(word, mx, my);
    if (static_cast<int>(word.size()) == radius) return;
    for (int k = 0; k < 4; ++k) {
        if (last >= 0 && k == (last ^ 1)) continue;
        word.push_back(letters[k]);
        pair_walk(gx, gy, radius, word, mx * gx[k], my * gy[k], k, visit);
        word.pop_back();
    }
}

void for_each_pair(const MessRep& mess, int radius, const PairVisitor& visit) {
    const Mat2 gx[4] = {mess.rho_x.gen_a.m, mess.rho_x.gen_a.m.adj(), mess.rho_x.gen_b.m, mess.rho_x.gen_b.m.adj()};
    const Mat2 gy[4] = {mess.rho_y.gen_a.m, mess.rho_y.gen_a.m.adj(), mess.rho_y.gen_b.m, mess.rho_y.gen_b.m.adj()};
    std::string word;
    pair_walk(gx, gy, radius, word, Mat2::identity(), Mat2::identity(), -1, visit);
}

struct PlaqueVertices {
    std::array<ProjectivePoint, 3> x, y;
};

std::vector<PlaqueVertices> plaque_vertices(const MessRep& mess, const FiniteLamination& lam) {
    std::vector<PlaqueVertices> out;
    for (const auto& pw : base_plaques(lam)) {
        PlaqueVertices pv;
        for (int i = 0; i < 3; ++i) {
            auto p = fixed_pair(mess, pw[i]);
            pv.x[i] = p.left;
            pv.y[i] = p.right;
        }
        out.push_back(pv);
    }
    return out;
}

std::array<Ideal, 3> translate(const PlaqueVertices& pv, const Mat2& mx, const Mat2& my) {
    std::array<Ideal, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = {(mx * pv.x[i]).normalized(), (my * pv.y[i]).normalized()};
    return v;
}

}  // namespace

void plaque_samples(const std::array<Mat2, 3>& l, int density, const std::function<void(const AdsPoint&)>& emit) {
    for (int i = 0; i < density; ++i) {
        double s = grid_weight(i, density);
        for (int j = 0; j < density; ++j) {
            double u = grid_weight(j, density);
            double q = s + u + s * u;
            emit({(1 / std::sqrt(q)) * (l[0] + s * l[1] + u * l[2])});
        }
    }
}

PleatedSample sample_pleated_set(const MessRep& mess, const FiniteLamination& lam, int radius, int density) {
    PleatedSample out;
    out.density = density;
    out.radius = radius;
    auto pvs = plaque_vertices(mess, lam);
    std::optional<LoxodromicData> leaf;
    Word cw;
    if (lam.kind == FiniteLamination::Kind::Spin) {
        cw = slope_to_word(lam.leaf());
        leaf = loxodromic_data(mess, cw);
    }
    for_each_pair(mess, radius, [&](const std::string& word, const Mat2& mx, const Mat2& my) {
        for (std::size_t k = 0; k < pvs.size(); ++k) {
            auto v = translate(pvs[k], mx, my);
            auto g = pair_forms(v);
            if (collapsed(g)) {
                ++out.collapsed;
                continue;
            }
            auto c = lift_scales(g);
            std::array<Mat2, 3> lifts;
            for (int i = 0; i < 3; ++i) lifts[i] = c[i] * pair_to_boundary(v[i].im, v[i].ker).m;
            plaque_samples(lifts, density, [&](const AdsPoint& p) {
                out.points.push_back({p, static_cast<int>(k), word});
            });
            ++out.translates;
        }
        if (leaf) {
            SpacelikeLine l{ads_act(mx, leaf->axis.lp, my), ads_act(mx, leaf->axis.lm, my)};
            for (int i = 0; i < density; ++i) out.points.push_back({l.at(leaf->length * i / density), -1, word});
            ++out.leaf_translates;
        }
    });
    return out;
}

std::vector<AdsPoint> sample_points(const PleatedSample& s) {
    std::vector<AdsPoint> out;
    out.reserve(s.points.size());
    for (const auto& p : s.points) out.push_back(p.point);
    return out;
}

std::vector<AdsPoint> line_grid(const SpacelikeLine& l, double t0, double t1, int n) {
    std::vector<AdsPoint> out;
    for (int i = 0; i < n; ++i) out.push_back(l.at(t0 + (t1 - t0) * i / n));
    return out;
}

double max_timelike_gap(const std::vector<AdsPoint>& a, const std::vector<AdsPoint>& b) {
    double best = 0;
    for (const auto& x : a)
        for (const auto& y : b) best = std::max(best, timelike_distance(x, y));
    return best;
}

GapReport line_gap(const MessRep& mess, const FiniteLamination& lam, const SpacelikeLine& line, int radius,
                   int density) {
    GapReport rep;
    auto pvs = plaque_vertices(mess, lam);
    double sp = 0, sm = 0;
    Ideal P = ideal_of(BoundaryPointAds{line.lp}, &sp), M = ideal_of(BoundaryPointAds{line.lm}, &sm);
    std::vector<double> weights(density);
    for (int i = 0; i < density; ++i) weights[i] = grid_weight(i, density);

    for_each_pair(mess, radius, [&](const std::string&, const Mat2& mx, const Mat2& my) {
        for (const auto& pv : pvs) {
            ++rep.translates;
            auto v = translate(pv, mx, my);
            auto g = pair_forms(v);
            if (collapsed(g)) {
                ++rep.collapsed;
                continue;
            }
            auto c = lift_scales(g);
            std::array<double, 3> a, b;
            for (int i = 0; i < 3; ++i) {
                a[i] = c[i] * sp * ideal_form(v[i], P);
                b[i] = c[i] * sm * ideal_form(v[i], M);
            }
            // flip the triple so that the form values toward the line are non-positive
            double sa = a[0] + a[1] + a[2];
            if (sa > 0)
                for (int i = 0; i < 3; ++i) {
                    a[i] = -a[i];
                    b[i] = -b[i];
                }
            double scale = 0;
            for (int i = 0; i < 3; ++i) scale = std::max({scale, std::fabs(a[i]), std::fabs(b[i])});
            const double tol = 1e-12 * std::max(1.0, scale);
            for (int i = 0; i < 3; ++i)
                if (a[i] > tol || b[i] > tol) {
                    std::ostringstream os;
                    os << "plaque and line are not mutually acausal (<xi,l+> = " << a[i] << ", <xi,l-> = " << b[i]
                       << ")";
                    throw Error(ErrorKind::Configuration, os.str());
                }
            // 4AB >= Q holds for all positive weights once every pair has 4(a_i b_j + a_j b_i) >= 1
            bool clear = true;
            for (int i = 0; i < 3 && clear; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (4 * (a[i] * b[j] + a[j] * b[i]) < 1 + 1e-12) {
                        clear = false;
                        break;
                    }
            if (clear) {
                ++rep.pruned;
                continue;
            }
            for (int i = 0; i < density; ++i) {
                double s = weights[i];
                for (int j = 0; j < density; ++j) {
                    double u = weights[j];
                    double A = a[0] + s * a[1] + u * a[2];
                    double B = b[0] + s * b[1] + u * b[2];
                    double q = s + u + s * u;
                    double m = 2 * std::sqrt(A * B / q);
                    ++rep.samples;
                    if (m < 1) rep.delta_hat = std::max(rep.delta_hat, std::acos(m));
                }
            }
        }
    });
    return rep;
}

InequalityA check_inequality_A(const MessRep& mess, const FiniteLamination& lam, const Word& w, int radius,
                               int density) {
    auto lox = loxodromic_data(mess, w);
    auto Z = midpoint_structure(mess, lam);
    InequalityA r;
    r.length_rho = lox.length;
    r.torsion_rho = lox.torsion;
    r.length_z = translation_length(evaluate_word(Z, w));
    r.delta_hat = line_gap(mess, lam, lox.axis, radius, density).delta_hat;
    double c = std::cos(r.delta_hat), s = std::sin(r.delta_hat);
    r.margin = c * c * std::cosh(r.length_rho) + s * s * std::cosh(r.torsion_rho) - std::cosh(r.length_z);
    return r;
}

MessRep earthquake_family(const ShearCoordinates& Z, const Slope& c, double weight, double t) {
    auto rep = shears_to_holonomy(Z);
    return {twist_deformation(rep, c, -weight * t), twist_deformation(rep, c, weight * t)};
}

long curve_word_intersection(const SurfaceGroupRep& rep, const Slope& c, const Word& w, int radius) {
    Word cw = slope_to_word(c);
    auto g = axis(evaluate_word(rep, cw));
    return static_cast<long>(axis_crossings(rep, w, g, radius, cw).size());
}

CombinedInequality check_combined_inequality(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                             double t, long i) {
    auto mess = earthquake_family(Z, c, weight, t);
    auto lox = loxodromic_data(mess, w);
    CombinedInequality r;
    r.length_t = lox.length;
    r.torsion_t = lox.torsion;
    r.length_z = translation_length(evaluate_word(shears_to_holonomy(Z), w));
    r.intersection = i;
    r.margin = std::cosh(r.length_t) - std::cosh(r.length_z) - std::cosh(t * weight * static_cast<double>(i)) +
               std::cosh(r.torsion_t);
    return r;
}

CombinedInequality check_combined_inequality(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                             double t) {
    return check_combined_inequality(Z, c, weight, w, t, curve_word_intersection(shears_to_holonomy(Z), c, w));
}

}  // namespace adslen
