#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "adslen/adscore.hpp"
#include "adslen/errors.hpp"
#include "adslen/mess.hpp"
#include "adslen/paracomplex.hpp"
#include "adslen/shearbend.hpp"
#include "adslen/varcalc.hpp"

namespace adslen::cli {

namespace {

using Rng = std::mt19937_64;

std::uint64_t seed_of(const Config::Section& sec, const Overrides& ov) {
    if (ov.seed) return *ov.seed;
    long s = sec.integer("seed", 1);
    if (s < 0) sec.fail("seed", "must be non-negative");
    return static_cast<std::uint64_t>(s);
}

long positive(const Config::Section& sec, const std::string& key, long fallback) {
    long v = sec.integer(key, fallback);
    if (v <= 0) sec.fail(key, "must be positive");
    return v;
}

// uniform on [-r, r]^3 intersected with x + y + z = 0
ShearCoordinates random_shear(Rng& rng, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    for (;;) {
        double x = u(rng), y = u(rng);
        if (std::fabs(x + y) <= r) return {x, y, -x - y};
    }
}

std::string show(const ShearCoordinates& s) {
    std::ostringstream os;
    os.precision(17);
    os << s.x << ' ' << s.y << ' ' << s.z;
    return os.str();
}

std::string show(const Slope& s) { return to_string(s); }

struct ShearPair {
    ShearCoordinates x, y;
};

// X/Y keys, or `pairs` random pairs in [-range, range]^3.
std::vector<ShearPair> shear_pairs(const Config::Section& sec, Rng& rng, long fallback_count) {
    if (sec.has("X") || sec.has("Y")) return {{sec.shear("X"), sec.shear("Y")}};
    long n = positive(sec, "pairs", fallback_count);
    double r = sec.real("range", 1.5);
    if (!(r > 0)) sec.fail("range", "must be positive");
    std::vector<ShearPair> out;
    for (long i = 0; i < n; ++i) {
        auto a = random_shear(rng, r);
        auto b = random_shear(rng, r);
        out.push_back({a, b});
    }
    return out;
}

std::string row_tag(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

// ---------------------------------------------------------------------------

Outcome run_convexity(const Config::Section& sec, const Overrides& ov) {
    Outcome out;
    out.table.columns = {"segment", "word", "s", "x", "y", "z", "L", "margin", "wide_margin", "level", "strict"};
    out.x_column = "s";
    out.series = "word";
    auto words = sec.words("words");
    long n = positive(sec, "n", 33);
    if (n < 3) sec.fail("n", "needs at least 3 grid points");
    auto lam = sec.lamination("lamination");
    std::string expect = sec.str("expect", "auto");
    if (expect != "auto" && expect != "nonnegative" && expect != "strict" && expect != "flat")
        sec.fail("expect", "one of auto, nonnegative, strict, flat");
    Rng rng(seed_of(sec, ov));

    std::vector<ShearPair> segs;
    if (sec.has("twist_slope")) {
        auto X = sec.shear("X");
        double t = sec.real("twist");
        auto Y = holonomy_to_shears(twist_deformation(shears_to_holonomy(X), sec.slope("twist_slope"), t));
        segs.push_back({X, Y});
    } else {
        segs = shear_pairs(sec, rng, 1);
    }

    for (std::size_t k = 0; k < segs.size(); ++k) {
        const auto& [X, Y] = segs[k];
        for (const auto& w : words) {
            auto rep = convexity_sweep(X, Y, w, static_cast<int>(n), lam);
            bool want_strict = expect == "strict" ||
                               (expect == "auto" && lam.kind == FiniteLamination::Kind::Triangulation &&
                                max_abs_diff(X, Y) > 1e-9 && crosses_every_edge(w));
            for (std::size_t i = 0; i < rep.rows.size(); ++i) {
                const auto& r = rep.rows[i];
                out.table.add({static_cast<long>(k), w.str(), r.s, r.point.x, r.point.y, r.point.z, r.length, r.margin,
                               r.wide_margin, static_cast<long>(r.level), static_cast<long>(r.strict)});
                std::string tag = row_tag({"segment", std::to_string(k), "word", w.str(), "row", std::to_string(i)});
                std::ostringstream os;
                os.precision(6);
                if (r.margin < -1e-9) {
                    os << tag << ": midpoint margin " << r.margin << " < -1e-9";
                    out.failures.push_back(os.str());
                } else if (r.level > 0 && expect == "flat" && std::fabs(r.margin) > kStrictMargin) {
                    os << tag << ": margin " << r.margin << " is not flat";
                    out.failures.push_back(os.str());
                }
            }
            if (want_strict && !rep.strict()) {
                std::ostringstream os;
                os << "segment " << k << " word " << w.str() << ": widest midpoint margins are not strict (> "
                   << kStrictMargin << ")";
                out.failures.push_back(os.str());
            }
        }
    }
    return out;
}

Outcome run_earthquake(const Config::Section& sec, const Overrides&) {
    Outcome out;
    out.table.columns = {"slope", "word", "weight", "i", "t", "L", "Ldot", "Lddot", "bound", "slack"};
    out.x_column = "t";
    out.series = "word";
    ShearCoordinates Z = sec.has("Z") ? sec.shear("Z") : ShearCoordinates{};
    auto slopes = sec.slopes("slopes");
    auto words = sec.words("words");
    std::vector<double> weights = sec.has("weights") ? sec.reals("weights") : std::vector<double>{1.0};
    for (double k : weights)
        if (!(k > 0)) sec.fail("weights", "must be positive");
    double h = sec.real("h", 1e-3);
    if (!(h >= 1e-4 && h <= 1e-2)) sec.fail("h", "must lie in [1e-4, 1e-2]");
    std::vector<double> ts = sec.has("t") ? sec.grid("t") : std::vector<double>{};

    for (const auto& c : slopes)
        for (const auto& w : words)
            for (double k : weights) {
                auto rep = second_variation_check(Z, c, k, w, h, ts);
                for (const auto& r : rep.rows)
                    out.table.add({show(c), w.str(), k, rep.intersection, r.t, r.length, r.ldot, r.lddot, r.bound,
                                   r.slack});
                std::ostringstream wt;
                wt << k;
                std::string tag = row_tag({"slope", show(c), "word", w.str(), "weight", wt.str()});
                std::ostringstream os;
                os.precision(6);
                if (!rep.bound_ok)
                    os << tag << ": second-variation slack " << rep.rows[0].slack << " < -1e-4";
                else if (!rep.variation_ok)
                    os << tag << ": |Ldot| = " << std::fabs(rep.rows[0].ldot) << " exceeds weight * i = "
                       << k * static_cast<double>(rep.intersection);
                if (!os.str().empty()) out.failures.push_back(os.str());
                for (std::size_t j = 1; j < rep.rows.size(); ++j)
                    if (rep.rows[j].slack < -1e-4) {
                        std::ostringstream o2;
                        o2 << tag << " t " << rep.rows[j].t << ": slack " << rep.rows[j].slack << " < -1e-4";
                        out.failures.push_back(o2.str());
                    }
            }
    return out;
}

Outcome run_kerckhoff(const Config::Section& sec, const Overrides& ov) {
    Outcome out;
    out.table.columns = {"slope", "word", "weight", "i", "classes", "analytic", "fd", "diff", "stable"};
    out.x_column = "weight";
    out.series = "word";
    ShearCoordinates Z = sec.has("Z") ? sec.shear("Z") : ShearCoordinates{};
    auto slopes = sec.slopes("slopes");
    auto words = sec.words("words");
    std::vector<double> weights = sec.has("weights") ? sec.reals("weights") : std::vector<double>{1.0};
    for (double k : weights)
        if (!(k > 0)) sec.fail("weights", "must be positive");
    int radius = ov.radius ? *ov.radius : static_cast<int>(positive(sec, "radius", 12));

    for (const auto& c : slopes)
        for (const auto& w : words) {
            long i = curve_word_intersection(shears_to_holonomy(Z), c, w);
            for (double k : weights) {
                auto kr = kerckhoff_derivative(Z, c, k, w, radius);
                double fd = length_derivative_fd(Z, c, k, w);
                double diff = kr.value - fd;
                out.table.add({show(c), w.str(), k, i, kr.classes, kr.value, fd, diff, static_cast<long>(kr.stable)});
                std::ostringstream wt;
                wt << k;
                std::string tag = row_tag({"slope", show(c), "word", w.str(), "weight", wt.str()});
                if (!kr.warning.empty()) out.warnings.push_back(tag + ": " + kr.warning);
                std::ostringstream os;
                os.precision(6);
                double bound = k * static_cast<double>(i);
                if (!(std::fabs(diff) < 1e-5))
                    os << tag << ": cosine sum " << kr.value << " differs from finite difference " << fd;
                else if (std::fabs(kr.value) > bound + 1e-9)
                    os << tag << ": |Ldot| = " << std::fabs(kr.value) << " exceeds weight * i = " << bound;
                else if (i > 0 && !(std::fabs(kr.value) < bound))
                    os << tag << ": |Ldot| = " << std::fabs(kr.value) << " is not strictly below weight * i";
                if (!os.str().empty()) out.failures.push_back(os.str());
            }
        }
    return out;
}

// ---------------------------------------------------------------------------

Outcome shearbend_midpoint(const Config::Section& sec, Rng& rng) {
    Outcome out;
    out.table.columns = {"pair", "label", "re", "ta", "want_re", "want_ta", "err_re", "err_ta"};
    out.x_column = "pair";
    out.series = "label";
    auto lam = sec.lamination("lamination");
    double tol = sec.real("tolerance", 1e-8);
    auto pairs = shear_pairs(sec, rng, 200);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [X, Y] = pairs[k];
        auto co = shear_bend_cocycle(MessRep::from_shears(X, Y), lam);
        auto cx = real_cocycle(shears_to_holonomy(X), lam), cy = real_cocycle(shears_to_holonomy(Y), lam);
        // real cocycle entries against cocycle values
        std::vector<int> idx = lam.kind == FiniteLamination::Kind::Triangulation ? std::vector<int>{0, 1, 2}
                                                                                  : std::vector<int>{0, 2, 3};
        for (int j = 0; j < 3; ++j) {
            const auto& v = co.values[idx[j]];
            double wr = (cx[j] + cy[j]) / 2, wt = (cx[j] - cy[j]) / 2;
            double er = v.re - wr, et = v.ta - wt;
            out.table.add({static_cast<long>(k), co.labels[idx[j]], v.re, v.ta, wr, wt, er, et});
            if (!(std::fabs(er) < tol && std::fabs(et) < tol)) {
                std::ostringstream os;
                os << "pair " << k << " (" << show(X) << " / " << show(Y) << ") " << co.labels[idx[j]]
                   << ": errors " << er << ", " << et << " exceed " << tol;
                out.failures.push_back(os.str());
            }
        }
    }
    return out;
}

Outcome shearbend_roundtrip(const Config::Section& sec, Rng& rng) {
    Outcome out;
    out.table.columns = {"point", "x", "y", "z", "err"};
    out.x_column = "point";
    long n = positive(sec, "points", 100);
    double r = sec.real("range", 1.5);
    double tol = sec.real("tolerance", 1e-9);
    auto check = [&](long k, const ShearCoordinates& s, double err) {
        out.table.add({k, s.x, s.y, s.z, err});
        if (!(err < tol)) {
            std::ostringstream os;
            os << "point " << k << " (" << show(s) << "): round-trip error " << err << " exceeds " << tol;
            out.failures.push_back(os.str());
        }
    };
    check(-1, holonomy_to_shears(modular_torus()), max_abs_diff(holonomy_to_shears(modular_torus()), {}));
    for (long k = 0; k < n; ++k) {
        auto s = random_shear(rng, r);
        check(k, s, max_abs_diff(holonomy_to_shears(shears_to_holonomy(s)), s));
    }
    return out;
}

Outcome shearbend_pairing(const Config::Section& sec, Rng& rng) {
    Outcome out;
    out.table.columns = {"config", "slope", "L_X", "L_Y", "pairing_re", "pairing_ta", "want_re", "want_ta", "err_ta"};
    out.x_column = "config";
    auto c = sec.slope("slope");
    double weight = sec.real("weight", 1);
    if (!(weight > 0)) sec.fail("weight", "must be positive");
    double tol = sec.real("tolerance", 1e-6);
    auto pairs = shear_pairs(sec, rng, 20);
    auto mu = FiniteLamination::spin(c, weight);
    Word cw = slope_to_word(c);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [X, Y] = pairs[k];
        auto mess = MessRep::from_shears(X, Y);
        auto co = shear_bend_cocycle(mess, mu);
        auto p = thurston_pairing_para(co, mu);
        double lx = translation_length(evaluate_word(mess.rho_x, cw));
        double ly = translation_length(evaluate_word(mess.rho_y, cw));
        double wr = weight * (lx + ly) / 2, wt = weight * (lx - ly) / 2;
        out.table.add({static_cast<long>(k), show(c), lx, ly, p.re, p.ta, wr, wt, p.ta - wt});
        if (!(std::fabs(p.ta - wt) < tol) || !(std::fabs(p.re - wr) < tol)) {
            std::ostringstream os;
            os << "config " << k << " (" << show(X) << " / " << show(Y) << "): pairing " << p << " vs expected ("
               << wr << ", " << wt << ")";
            out.failures.push_back(os.str());
        }
    }
    return out;
}

Mat2 random_matrix(Rng& rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng), n(rng), n(rng)};
}

AdsPoint random_point(Rng& rng) {
    for (;;) {
        Mat2 m = random_matrix(rng);
        if (m.det() > 0.05) return AdsPoint::normalize(m);
    }
}

// unit timelike normal pair for the spacelike segment x, y
bool segment_normals(Rng& rng, const AdsPoint& x, const AdsPoint& y, Mat2& v, Mat2& w) {
    Mat2 u = y.m + ads_form(x.m, y.m) * x.m;  // y - <y,x>/<x,x> x
    double uu = ads_form(u, u);
    if (!(uu > 1e-6)) return false;
    u = (1 / std::sqrt(uu)) * u;
    auto perp = [&](Mat2 m) { return m + ads_form(m, x.m) * x.m - ads_form(m, u) * u; };
    Mat2 n1 = perp(random_matrix(rng)), n2 = perp(random_matrix(rng));
    // the complement has signature (1, 1): find its timelike direction
    double a = ads_form(n1, n1), b = ads_form(n1, n2), c = ads_form(n2, n2);
    // e = n1 + s n2 with a + 2 b s + c s^2 < 0
    Mat2 e;
    if (a < -1e-6) e = n1;
    else if (c < -1e-6) e = n2;
    else {
        double disc = b * b - a * c;
        if (!(disc > 1e-9) || std::fabs(c) < 1e-9) return false;
        double s = -b / c;
        e = n1 + s * n2;
        if (!(ads_form(e, e) < -1e-6)) return false;
    }
    e = (1 / std::sqrt(-ads_form(e, e))) * e;
    Mat2 f = perp(random_matrix(rng));
    f = f + ads_form(f, e) * e;  // spacelike, orthogonal to e
    double ff = ads_form(f, f);
    if (!(ff > 1e-6)) return false;
    f = (1 / std::sqrt(ff)) * f;
    std::uniform_real_distribution<double> sd(-1.5, 1.5);
    double s1 = sd(rng), s2 = sd(rng);
    v = std::cosh(s1) * e + std::sinh(s1) * f;
    w = std::cosh(s2) * e + std::sinh(s2) * f;
    return true;
}

Outcome shearbend_identities(const Config::Section& sec, Rng& rng) {
    Outcome out;
    out.table.columns = {"identity", "samples", "max_error", "tolerance"};
    long n = positive(sec, "samples", 1000);
    std::uniform_real_distribution<double> u(-3, 3);
    auto record = [&](const std::string& name, long samples, double err, double tol) {
        out.table.add({name, samples, err, tol});
        if (!(err <= tol)) {
            std::ostringstream os;
            os << name << ": max error " << err << " exceeds " << tol;
            out.failures.push_back(os.str());
        }
    };

    double e_exp = 0, e_norm = 0, e_pol = 0;
    for (long k = 0; k < n; ++k) {
        ParaComplex z{u(rng), u(rng)};
        auto back = pc_log(pc_exp(z));
        e_exp = std::max(e_exp, std::max(std::fabs(back.re - z.re), std::fabs(back.ta - z.ta)));
        ParaComplex w{u(rng), u(rng)};
        double lhs = norm_sq(z * w), rhs = norm_sq(z) * norm_sq(w);
        e_norm = std::max(e_norm, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
        Mat2 X = random_matrix(rng), Y = random_matrix(rng);
        double pol = (ads_form(X + Y, X + Y) - ads_form(X, X) - ads_form(Y, Y)) / 2;
        double scale = std::max(1.0, X.frobenius() * Y.frobenius());
        e_pol = std::max(e_pol, std::fabs(pol - ads_form(X, Y)) / scale);
        e_pol = std::max(e_pol, std::fabs(ads_form(X, X) + X.det()) / std::max(1.0, X.frobenius() * X.frobenius()));
    }
    record("exp_log_round_trip", n, e_exp, 1e-12);
    record("norm_multiplicativity", n, e_norm, 1e-10);
    record("polarization", n, e_pol, 1e-10);

    double e_move = 0;
    long moved = 0;
    std::uniform_real_distribution<double> ut(0, std::acos(-1.0) / 2);
    while (moved < std::min(n, 200L)) {
        AdsPoint x = random_point(rng), y = random_point(rng);
        if (ads_form(x.m, y.m) > 0) y.m = -y.m;
        if (-ads_form(x.m, y.m) < 1 + 1e-3) continue;
        Mat2 v, w;
        if (!segment_normals(rng, x, y, v, w)) continue;
        if (-ads_form(v, w) < 1) w = -w;
        double t = ut(rng);
        Mat2 p = std::cos(t) * x.m + std::sin(t) * v, q = std::cos(t) * y.m + std::sin(t) * w;
        double direct = -ads_form(p, q);
        double closed = std::cos(t) * std::cos(t) * -ads_form(x.m, y.m) + std::sin(t) * std::sin(t) * -ads_form(v, w);
        double got = move_endpoints(x, y, v, w, t);
        e_move = std::max({e_move, std::fabs(direct - closed) / std::max(1.0, closed),
                           std::fabs(got - closed) / std::max(1.0, closed)});
        ++moved;
    }
    record("move_orthogonally", moved, e_move, 1e-10);

    // argmin of -<y, l(t)> against a 10^4-point grid around the foot
    double e_line = 0;
    long lines = 0;
    while (lines < std::min(n, 100L)) {
        auto ray = [&] { return ProjectivePoint{std::cos(u(rng)), std::sin(u(rng))}; };
        auto a = pair_to_boundary(ray(), ray()), b = pair_to_boundary(ray(), ray());
        SpacelikeLine l;
        try {
            l = SpacelikeLine::through(a.m, b.m);
        } catch (const Error&) {
            continue;
        }
        AdsPoint y = random_point(rng);
        double ga = ads_form(y.m, l.lp), gb = ads_form(y.m, l.lm);
        if (!(ga * gb > 1e-6)) continue;
        auto proj = project_to_line(y, l);
        const int N = 10000;
        double best = INFINITY, best_t = 0;
        for (int i = 0; i < N; ++i) {
            double t = proj.t - 5 + 10.0 * i / (N - 1);
            double v = std::fabs(ads_form(y.m, l.at(t).m));
            if (v < best) best = v, best_t = t;
        }
        // grid minimum within one cell of the foot, and never below the exact minimum
        double cell = 10.0 / (N - 1);
        e_line = std::max(e_line, std::max(0.0, std::fabs(best_t - proj.t) - cell));
        e_line = std::max(e_line, std::max(0.0, proj.m - best - 1e-12 * proj.m));
        ++lines;
    }
    record("point_line_argmin", lines, e_line, 1e-12);

    double worst = INFINITY;
    long grids = 0;
    std::uniform_real_distribution<double> ua(0.05, 3), ub(0.05, std::acos(-1.0) / 2);
    for (long k = 0; k < std::min(n, 20L); ++k) {
        auto s = analysis_grid_slack(analysis_constants(ua(rng), ub(rng)));
        worst = std::min({worst, s.first, s.second});
        ++grids;
    }
    out.table.add({std::string("analysis_grid_slack"), grids, worst, 0.0});
    if (!(worst >= -1e-12)) {
        std::ostringstream os;
        os << "analysis grid: smallest slack " << worst << " is negative";
        out.failures.push_back(os.str());
    }
    return out;
}

Outcome run_shearbend(const Config::Section& sec, const Overrides& ov) {
    Rng rng(seed_of(sec, ov));
    std::string mode = sec.str("mode", "midpoint");
    if (mode == "midpoint") return shearbend_midpoint(sec, rng);
    if (mode == "roundtrip") return shearbend_roundtrip(sec, rng);
    if (mode == "pairing") return shearbend_pairing(sec, rng);
    if (mode == "identities") return shearbend_identities(sec, rng);
    sec.fail("mode", "one of midpoint, roundtrip, pairing, identities");
}

// ---------------------------------------------------------------------------

Outcome ineq_A(const Config::Section& sec, const Overrides& ov, Rng& rng) {
    Outcome out;
    out.table.columns = {"pair", "word", "fuchsian", "crosses_all", "margin", "delta_hat", "L", "theta", "L_Z"};
    out.x_column = "pair";
    out.series = "word";
    auto words = sec.words("words");
    auto lam = sec.lamination("lamination");
    int radius = ov.radius ? *ov.radius : static_cast<int>(positive(sec, "radius", 8));
    int density = ov.density ? *ov.density : static_cast<int>(positive(sec, "density", 16));
    auto pairs = shear_pairs(sec, rng, 20);
    long flats = sec.integer("fuchsian", 0);
    if (flats < 0) sec.fail("fuchsian", "must be non-negative");
    for (long k = 0; k < flats; ++k) {
        auto s = random_shear(rng, sec.real("range", 1.5));
        pairs.push_back({s, s});
    }
    bool strict = sec.flag("strict", true);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [X, Y] = pairs[k];
        bool fuchsian = max_abs_diff(X, Y) == 0;
        auto mess = MessRep::from_shears(X, Y);
        for (const auto& w : words) {
            bool all = crosses_every_edge(w);
            auto r = check_inequality_A(mess, lam, w, radius, density);
            out.table.add({static_cast<long>(k), w.str(), static_cast<long>(fuchsian), static_cast<long>(all), r.margin,
                           r.delta_hat, r.length_rho, r.torsion_rho, r.length_z});
            std::ostringstream os;
            os.precision(6);
            std::string tag = "pair " + std::to_string(k) + " (" + show(X) + " / " + show(Y) + ") word " + w.str();
            if (r.margin < -1e-9)
                os << tag << ": margin " << r.margin << " < -1e-9";
            else if (fuchsian && std::fabs(r.margin) > 1e-9)
                os << tag << ": Fuchsian margin " << r.margin << " is not flat";
            else if (strict && !fuchsian && all && lam.kind == FiniteLamination::Kind::Triangulation &&
                     !(r.margin > 1e-4))
                os << tag << ": margin " << r.margin << " is not strictly positive";
            if (!os.str().empty()) out.failures.push_back(os.str());
        }
    }
    return out;
}

Outcome ineq_combined(const Config::Section& sec) {
    Outcome out;
    out.table.columns = {"slope", "word", "t", "i", "margin", "L_t", "theta_t", "L_Z"};
    out.x_column = "t";
    out.series = "word";
    ShearCoordinates Z = sec.has("Z") ? sec.shear("Z") : ShearCoordinates{};
    auto slopes = sec.slopes("slopes");
    auto words = sec.words("words");
    double weight = sec.real("weight", 1);
    if (!(weight > 0)) sec.fail("weight", "must be positive");
    auto ts = sec.grid("t");
    auto base = shears_to_holonomy(Z);
    for (const auto& c : slopes)
        for (const auto& w : words) {
            long i = curve_word_intersection(base, c, w);
            for (double t : ts) {
                auto r = check_combined_inequality(Z, c, weight, w, t, i);
                out.table.add({show(c), w.str(), t, i, r.margin, r.length_t, r.torsion_t, r.length_z});
                if (r.margin < -1e-9) {
                    std::ostringstream os;
                    os << "slope " << show(c) << " word " << w.str() << " t " << t << ": margin " << r.margin
                       << " < -1e-9";
                    out.failures.push_back(os.str());
                }
            }
        }
    return out;
}

Outcome run_ineq(const Config::Section& sec, const Overrides& ov) {
    Rng rng(seed_of(sec, ov));
    std::string mode = sec.str("mode", "A");
    if (mode == "A") return ineq_A(sec, ov, rng);
    if (mode == "combined") return ineq_combined(sec);
    sec.fail("mode", "one of A, combined");
}

Outcome run_minimize(const Config::Section& sec, const Overrides& ov) {
    Outcome out;
    out.table.columns = {"run",   "x0",        "y0",         "z0",        "x",      "y",
                         "z",     "value",     "grad_norm",  "iterations", "converged", "warning"};
    out.x_column = "run";
    auto f = sec.weighted_words("objective");
    for (const auto& [w, k] : f)
        if (!(k > 0)) sec.fail("objective", "weights must be positive");
    double tol = sec.real("tol", 1e-8);
    if (!(tol > 0)) sec.fail("tol", "must be positive");
    std::string expect = sec.str("expect", "converged");
    if (expect != "converged" && expect != "flat") sec.fail("expect", "one of converged, flat");
    std::vector<ShearCoordinates> inits = {sec.has("init") ? sec.shear("init") : ShearCoordinates{0.5, -0.2, -0.3}};
    Rng rng(seed_of(sec, ov));
    long restarts = sec.integer("restarts", 0);
    if (restarts < 0) sec.fail("restarts", "must be non-negative");
    for (long k = 0; k < restarts; ++k) inits.push_back(random_shear(rng, sec.real("range", 1.5)));

    std::vector<MinimizeResult> runs;
    for (std::size_t k = 0; k < inits.size(); ++k) {
        auto r = minimize_length(f, inits[k], tol);
        const auto& s0 = inits[k];
        out.table.add({static_cast<long>(k), s0.x, s0.y, s0.z, r.argmin.x, r.argmin.y, r.argmin.z, r.value,
                       r.grad_norm, static_cast<long>(r.iterations), static_cast<long>(r.converged), r.warning});
        if (!r.warning.empty()) out.warnings.push_back("run " + std::to_string(k) + ": " + r.warning);
        std::ostringstream os;
        if (expect == "converged" && (!r.converged || !r.warning.empty()))
            os << "run " << k << " from (" << show(s0) << "): no certified minimum (gradient norm " << r.grad_norm
               << ")";
        else if (expect == "flat" && r.warning.empty())
            os << "run " << k << " from (" << show(s0) << "): expected a flat or unbounded objective";
        if (!os.str().empty()) out.failures.push_back(os.str());
        runs.push_back(r);
    }
    if (expect == "converged")
        for (std::size_t k = 1; k < runs.size(); ++k)
            if (max_abs_diff(runs[k].argmin, runs[0].argmin) > 1e-6) {
                std::ostringstream os;
                os << "run " << k << ": argmin (" << show(runs[k].argmin) << ") differs from run 0 ("
                   << show(runs[0].argmin) << ")";
                out.failures.push_back(os.str());
            }
    return out;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"convexity", "earthquake", "kerckhoff",
                                                   "shearbend", "ineq",       "minimize"};
    return names;
}

Outcome run_scenario(const std::string& name, const Config::Section& sec, const Overrides& ov) {
    if (name == "convexity") return run_convexity(sec, ov);
    if (name == "earthquake") return run_earthquake(sec, ov);
    if (name == "kerckhoff") return run_kerckhoff(sec, ov);
    if (name == "shearbend") return run_shearbend(sec, ov);
    if (name == "ineq") return run_ineq(sec, ov);
    if (name == "minimize") return run_minimize(sec, ov);
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace adslen::cli
