#include "adslen/varcalc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "adslen/errors.hpp"
#include "adslen/shearbend.hpp"

namespace adslen {

double length_on_shears(const ShearCoordinates& s, const Word& w) {
    return translation_length(evaluate_word(shears_to_holonomy(s), w));
}

std::array<long, 3> edge_crossings(const Word& w) {
    auto rep = modular_torus();
    auto lifts = triangulation_edge_lifts();
    std::array<long, 3> out{};
    int radius = static_cast<int>(cyclic_reduce(w).size()) + 4;
    for (int k = 0; k < 3; ++k) {
        Geodesic g{fixed_points(evaluate_word(rep, lifts[k][0])).attracting,
                   fixed_points(evaluate_word(rep, lifts[k][1])).attracting};
        out[k] = static_cast<long>(axis_crossings(rep, w, g, radius).size());
    }
    return out;
}

bool crosses_every_edge(const Word& w) {
    auto e = edge_crossings(w);
    return e[0] > 0 && e[1] > 0 && e[2] > 0;
}

bool SweepReport::strict() const {
    int top = 0;
    for (const auto& r : rows) top = std::max(top, r.level);
    for (const auto& r : rows)
        if (r.level == top && !r.strict) return false;
    return top > 0;
}

SweepReport convexity_sweep(const ShearCoordinates& X, const ShearCoordinates& Y, const Word& w, int n,
                            const FiniteLamination& lam) {
    X.validate();
    Y.validate();
    if (n < 3) throw Error(ErrorKind::Domain, "convexity sweep needs at least 3 grid points");

    SweepReport rep;
    rep.rows.resize(n);
    std::vector<SurfaceGroupRep> reps(n);
    if (lam.kind == FiniteLamination::Kind::Triangulation) {
        for (int i = 0; i < n; ++i) {
            double s = static_cast<double>(i) / (n - 1);
            rep.rows[i].s = s;
            rep.rows[i].point = (1 - s) * X + s * Y;
            rep.rows[i].point.z = -rep.rows[i].point.x - rep.rows[i].point.y;
            reps[i] = shears_to_holonomy(rep.rows[i].point);
        }
    } else {
        auto cx = real_cocycle(shears_to_holonomy(X), lam), cy = real_cocycle(shears_to_holonomy(Y), lam);
        ShearCoordinates init = X;
        for (int i = 0; i < n; ++i) {
            double s = static_cast<double>(i) / (n - 1);
            std::array<double, 3> target;
            for (int k = 0; k < 3; ++k) target[k] = (1 - s) * cx[k] + s * cy[k];
            reps[i] = structure_from_real_cocycle(lam, target, init);
            init = holonomy_to_shears(reps[i]);
            rep.rows[i].s = s;
            rep.rows[i].point = init;
        }
    }

    // rows in parallel, results land in their own slots
    unsigned nt = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i = static_cast<int>(t); i < n; i += static_cast<int>(nt))
                    rep.rows[i].length = translation_length(evaluate_word(reps[i], w));
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    rep.min_margin = INFINITY;
    for (int i = 1; i + 1 < n; ++i) {
        auto& row = rep.rows[i];
        row.margin = INFINITY;
        for (int s = 1; i - s >= 0 && i + s < n; s *= 2) {
            double m = (rep.rows[i - s].length + rep.rows[i + s].length) / 2 - row.length;
            row.margin = std::min(row.margin, m);
            row.wide_margin = m;
            row.level = s;
            ++rep.checks;
        }
        row.strict = row.wide_margin > kStrictMargin;
        rep.min_margin = std::min(rep.min_margin, row.margin);
    }
    return rep;
}

namespace {

double twisted_length(const SurfaceGroupRep& base, const Slope& c, double weight, const Word& w, double t) {
    return translation_length(evaluate_word(twist_deformation(base, c, weight * t), w));
}

}  // namespace

double length_derivative_fd(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w) {
    auto base = shears_to_holonomy(Z);
    const double h = 1e-5;
    return (twisted_length(base, c, weight, w, h) - twisted_length(base, c, weight, w, -h)) / (2 * h);
}

VariationReport second_variation_check(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                       double h, const std::vector<double>& ts) {
    if (!(h >= 1e-4 && h <= 1e-2)) {
        std::ostringstream os;
        os << "second-difference step " << h << " outside [1e-4, 1e-2]";
        throw Error(ErrorKind::Domain, os.str());
    }
    if (!(weight > 0)) throw Error(ErrorKind::Domain, "earthquake weight must be positive");
    auto base = shears_to_holonomy(Z);
    VariationReport rep;
    rep.weight = weight;
    rep.h = h;
    rep.intersection = curve_word_intersection(base, c, w);
    double i = weight * static_cast<double>(rep.intersection);

    auto L = [&](double t) { return twisted_length(base, c, weight, w, t); };
    auto row_at = [&](double t) {
        VariationRow r;
        r.t = t;
        r.length = L(t);
        const double h1 = 1e-5;
        r.ldot = (L(t + h1) - L(t - h1)) / (2 * h1);
        auto second = [&](double k) { return (L(t + k) - 2 * r.length + L(t - k)) / (k * k); };
        r.lddot = (4 * second(h / 2) - second(h)) / 3;
        double a = std::fabs(r.ldot);
        r.bound = a * (i - a) / std::sinh(r.length);
        r.slack = r.lddot - r.bound;
        return r;
    };
    rep.rows.push_back(row_at(0));
    for (double t : ts)
        if (t != 0) rep.rows.push_back(row_at(t));
    const auto& r0 = rep.rows[0];
    rep.bound_ok = r0.slack >= -1e-4;
    rep.variation_ok = std::fabs(r0.ldot) <= i + 1e-7;
    return rep;
}

namespace {

double crossing_cos_sum(const SurfaceGroupRep& rep, const Slope& c, const Word& w, int radius,
                        std::vector<AxisCrossing>* out) {
    Word cw = slope_to_word(c);
    auto cs = axis_crossings(rep, w, axis(evaluate_word(rep, cw)), radius, cw);
    double sum = 0;
    for (const auto& x : cs) sum += x.cos_transverse;
    if (out) *out = std::move(cs);
    return sum;
}

}  // namespace

double kerckhoff_sign() {
    static const double sign = [] {
        ShearCoordinates Z{0, 0, 0};
        auto c = Slope::make(0, 1);
        Word w("b");
        double raw = crossing_cos_sum(modular_torus(), c, w, 6, nullptr);
        double fd = length_derivative_fd(Z, c, 1, w);
        if (std::fabs(std::fabs(raw) - std::fabs(fd)) > 1e-6 || std::fabs(raw) < 1e-3) {
            std::ostringstream os;
            os << "cosine sum " << raw << " does not match the finite difference " << fd;
            throw Error(ErrorKind::Constraint, os.str());
        }
        return raw * fd > 0 ? 1.0 : -1.0;
    }();
    return sign;
}

KerckhoffResult kerckhoff_derivative(const ShearCoordinates& Z, const Slope& c, double weight, const Word& w,
                                     int radius) {
    if (radius < static_cast<int>(w.size()) || radius < static_cast<int>(slope_to_word(c).size()))
        throw Error(ErrorKind::Domain, "radius is shorter than the words involved");
    auto rep = shears_to_holonomy(Z);
    std::vector<AxisCrossing> cs;
    double sum = crossing_cos_sum(rep, c, w, radius, &cs);
    KerckhoffResult r;
    r.value = weight * kerckhoff_sign() * sum;
    r.classes = static_cast<long>(cs.size());
    r.trajectory = crossing_trajectory(cs, radius);
    r.stable = radius >= 2 && r.trajectory[radius] == r.trajectory[radius - 2];
    if (!r.stable) {
        std::ostringstream os;
        os << "crossing enumeration may be incomplete, counts by radius:";
        for (int k : r.trajectory) os << ' ' << k;
        r.warning = os.str();
    }
    return r;
}

namespace {

// orthonormal basis of x + y + z = 0
const ShearCoordinates kE1{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
const ShearCoordinates kE2{1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};

double norm(const ShearCoordinates& s) { return std::sqrt(s.x * s.x + s.y * s.y + s.z * s.z); }
double dot(const ShearCoordinates& s, const ShearCoordinates& t) { return s.x * t.x + s.y * t.y + s.z * t.z; }

ShearCoordinates on_plane(ShearCoordinates s) {
    double m = (s.x + s.y + s.z) / 3;
    return {s.x - m, s.y - m, s.z - m};
}

// objective value, NaN outside double range
double safe_value(const LengthObjective& f, const ShearCoordinates& s) {
    try {
        double v = objective_value(f, on_plane(s));
        return std::isfinite(v) ? v : NAN;
    } catch (const Error&) {
        return NAN;
    }
}

// F non-increasing along d out to kFlatBound (or to the end of double range)
bool flat_ray(const LengthObjective& f, const ShearCoordinates& s, const ShearCoordinates& d, double f0) {
    double tol = 1e-9 * (1 + std::fabs(f0));
    double reached = 0;
    for (double tau = 1; tau <= kFlatBound * 2; tau *= 2) {
        double v = safe_value(f, s + tau * d);
        if (std::isnan(v)) break;
        if (v > f0 + tol) return false;
        reached = tau;
    }
    return reached >= 64;
}

}  // namespace

double objective_value(const LengthObjective& f, const ShearCoordinates& s) {
    auto rep = shears_to_holonomy(s);
    double v = 0;
    for (const auto& [w, k] : f) v += k * translation_length(evaluate_word(rep, w));
    return v;
}

ShearCoordinates objective_gradient(const LengthObjective& f, const ShearCoordinates& s) {
    const double h = 1e-3;
    auto dir = [&](const ShearCoordinates& e) {
        return (-objective_value(f, s + 2 * h * e) + 8 * objective_value(f, s + h * e) -
                8 * objective_value(f, s - h * e) + objective_value(f, s - 2 * h * e)) /
               (12 * h);
    };
    return dir(kE1) * kE1 + dir(kE2) * kE2;
}

// Newton step on the plane with a finite-difference Hessian; nullopt unless it is positive definite.
static std::optional<ShearCoordinates> newton_step(const LengthObjective& f, const ShearCoordinates& s,
                                                   const ShearCoordinates& g) {
    const double h = 1e-4;
    const ShearCoordinates e[2] = {kE1, kE2};
    double H[2][2];
    for (int j = 0; j < 2; ++j) {
        auto d = objective_gradient(f, s + h * e[j]) - objective_gradient(f, s - h * e[j]);
        for (int i = 0; i < 2; ++i) H[i][j] = dot(d, e[i]) / (2 * h);
    }
    double a = H[0][0], b = 0.5 * (H[0][1] + H[1][0]), d = H[1][1];
    double det = a * d - b * b;
    if (!(a > 0) || !(det > 0)) return std::nullopt;
    double g0 = dot(g, e[0]), g1 = dot(g, e[1]);
    double x0 = (d * g0 - b * g1) / det, x1 = (a * g1 - b * g0) / det;
    return on_plane(s - x0 * e[0] - x1 * e[1]);
}

MinimizeResult minimize_length(const LengthObjective& f, const ShearCoordinates& init, double tol) {
    if (f.empty()) throw Error(ErrorKind::Domain, "empty objective");
    for (const auto& [w, k] : f)
        if (!(k > 0)) throw Error(ErrorKind::Domain, "objective weights must be positive");
    init.validate();
    std::array<long, 3> crossed{};
    for (const auto& [w, k] : f) {
        auto e = edge_crossings(w);
        for (int i = 0; i < 3; ++i) crossed[i] += e[i];
    }

    MinimizeResult r;
    ShearCoordinates s = init;
    double F = objective_value(f, s);
    ShearCoordinates g = objective_gradient(f, s);
    double alpha = 1 / std::max(1.0, norm(g));
    ShearCoordinates last_dir = -1.0 * g;
    bool fills = crossed[0] > 0 && crossed[1] > 0 && crossed[2] > 0;
    const int max_iter = fills ? 20000 : 2000;
    bool stalled = false;
    for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
        double gn = norm(g);
        if (gn < tol) {
            r.converged = true;
            break;
        }
        // near the minimum the gradient sits close to the rounding level of F; polish with Newton
        if (gn < 1e-5) {
            if (auto n = newton_step(f, s, g)) {
                auto gt = objective_gradient(f, *n);
                if (norm(gt) < gn) {
                    last_dir = *n - s;
                    s = *n;
                    F = objective_value(f, s);
                    g = gt;
                    continue;
                }
            }
        }
        // Armijo backtracking
        ShearCoordinates trial;
        double Ft = NAN;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            trial = on_plane(s - alpha * g);
            Ft = safe_value(f, trial);
            if (!std::isnan(Ft) && Ft <= F - 1e-4 * alpha * gn * gn) {
                accepted = true;
                break;
            }
            alpha /= 2;
        }
        if (!accepted) {
            stalled = true;
            break;
        }
        ShearCoordinates gt = objective_gradient(f, trial);
        ShearCoordinates sd = trial - s, yd = gt - g;
        last_dir = sd;
        s = trial;
        F = Ft;
        g = gt;
        // Barzilai-Borwein trial step for the next search
        double sy = dot(sd, yd);
        alpha = sy > 0 ? dot(sd, sd) / sy : 2 * alpha;
    }
    r.argmin = s;
    r.value = F;
    r.grad_norm = norm(g);

    std::vector<ShearCoordinates> probes = {kE1, -1.0 * kE1, kE2, -1.0 * kE2};
    if (norm(last_dir) > 0) probes.push_back((1 / norm(last_dir)) * last_dir);
    for (const auto& d : probes)
        if (flat_ray(f, s, d, F)) {
            std::ostringstream os;
            os << "objective is unbounded below or flat: non-increasing along (" << d.x << ", " << d.y << ", "
               << d.z << ") beyond distance " << kFlatBound;
            r.warning = os.str();
            break;
        }
    for (int i = 0; i < 3 && r.warning.empty(); ++i)
        if (crossed[i] == 0) {
            std::ostringstream os;
            os << "objective does not fill (edge " << i << " is crossed by no word): flat along a twist direction "
               << "or unbounded below";
            r.warning = os.str();
        }
    if (r.warning.empty() && (stalled || !r.converged)) {
        std::ostringstream os;
        os << (stalled ? "line search stalled" : "iteration limit reached") << " with gradient norm " << r.grad_norm;
        r.warning = os.str();
    }
    return r;
}

}  // namespace adslen
