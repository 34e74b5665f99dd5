#include "adslen/shearbend.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adslen/errors.hpp"

namespace adslen {

namespace {

int both_orient(const ParaProjectivePoint& p, const ParaProjectivePoint& q, const ParaProjectivePoint& r) {
    int l = cyclic_orientation(p.left, q.left, r.left), s = cyclic_orientation(p.right, q.right, r.right);
    return l == s ? l : 0;
}

ParaComplex checked_log(ParaComplex z, const char* what) {
    if (!in_b_plus(z)) {
        std::ostringstream os;
        os << what << ": " << z << " is not in B+";
        throw Error(ErrorKind::Configuration, os.str());
    }
    return pc_log(z);
}

Word power(const Word& w, int k) {
    Word r;
    Word step = k >= 0 ? w : w.inverse();
    for (int i = 0; i < std::abs(k); ++i) r = r * step;
    return r;
}

}  // namespace

ParaComplex elementary_shear_para(const ParaProjectivePoint& u, const ParaProjectivePoint& lm,
                                  const ParaProjectivePoint& u2, const ParaProjectivePoint& lp) {
    if (both_orient(u, lm, u2) != 1 || both_orient(u2, lp, u) != 1) {
        std::ostringstream os;
        os << "vertices are not in the order u < l- < u' < l+ in both factors (X: "
           << cyclic_orientation(u.left, lm.left, u2.left) << cyclic_orientation(u2.left, lp.left, u.left)
           << ", Y: " << cyclic_orientation(u.right, lm.right, u2.right)
           << cyclic_orientation(u2.right, lp.right, u.right) << ")";
        throw Error(ErrorKind::Configuration, os.str());
    }
    return checked_log(-cross_ratio_para(lp, lm, u, u2), "elementary shear");
}

ParaComplex elementary_shear_para(const MessRep& mess, const Word& u, const Word& lm, const Word& u2, const Word& lp) {
    return elementary_shear_para(fixed_pair(mess, u), fixed_pair(mess, lm), fixed_pair(mess, u2), fixed_pair(mess, lp));
}

ParaComplex adjacent_shear_para(const MessRep& mess, const Word& v, const Word& e1, const Word& e2, const Word& v2) {
    auto pv = fixed_pair(mess, v), p1 = fixed_pair(mess, e1), p2 = fixed_pair(mess, e2), pv2 = fixed_pair(mess, v2);
    if (cyclic_orientation(pv.left, p1.left, pv2.left) > 0) return elementary_shear_para(pv, p1, pv2, p2);
    return elementary_shear_para(pv, p2, pv2, p1);
}

ParaComplex asymptotic_shear_para(const ParaProjectivePoint& lp, const ParaProjectivePoint& lm,
                                  const ParaProjectivePoint& u, const ParaProjectivePoint& v,
                                  const ParaProjectivePoint& u2, const ParaProjectivePoint& v2) {
    ParaComplex prod = cross_ratio_para(lp, u, v, lm) * cross_ratio_para(lm, lp, u2, u) * cross_ratio_para(lm, u2, v2, lp);
    return checked_log(-prod, "asymptotic shear");
}

SpinFrame spin_frame(const Slope& c) {
    auto basis = slope_basis(c);
    SpinFrame s;
    s.curve = basis.curve;
    s.partner = basis.partner;
    auto P = quadrilateral_vertices();
    s.vertex = {substitute(P[2], s.curve, s.partner), substitute(P[3], s.curve, s.partner)};
    // sides are topological; read them off one Fuchsian point
    auto rep = modular_torus();
    auto f = fixed_points(evaluate_word(rep, s.curve));
    for (int k = 0; k < 2; ++k) {
        auto v = fixed_points(evaluate_word(rep, s.vertex[k])).attracting;
        s.left[k] = cyclic_orientation(v, f.repelling, f.attracting) > 0;
        s.end[k] = s.left[k] ? s.curve : s.curve.inverse();
    }
    if (s.left[0] == s.left[1]) throw Error(ErrorKind::Configuration, "spin vertex families on one side of the leaf");
    return s;
}

std::array<Word, 3> spin_plaque(const SpinFrame& s, int family, int k) {
    return {conjugate(power(s.curve, k), s.vertex[family]), conjugate(power(s.curve, k + 1), s.vertex[family]),
            s.end[family]};
}

ParaComplex spin_asymptotic_shear(const MessRep& mess, const SpinFrame& s, int k, int j) {
    int L = s.left[0] ? 0 : 1, R = 1 - L;
    auto lp = fixed_pair(mess, s.curve), lm = fixed_pair(mess, s.curve.inverse());
    auto P = spin_plaque(s, L, k), Q = spin_plaque(s, R, j);
    // left plaque: u = C^k V faces the leaf; right plaque: u' = C^{j+1} V'
    return asymptotic_shear_para(lp, lm, fixed_pair(mess, P[0]), fixed_pair(mess, P[1]), fixed_pair(mess, Q[1]),
                                 fixed_pair(mess, Q[0]));
}

ParaComplex spin_spiral_shear(const MessRep& mess, const SpinFrame& s, int family, int k) {
    auto P = spin_plaque(s, family, k), Q = spin_plaque(s, family, k + 1);
    // shared edge (C^{k+1} V, end); opposite vertices C^k V and C^{k+2} V
    return adjacent_shear_para(mess, P[0], P[1], P[2], Q[1]);
}

ParaCocycle shear_bend_cocycle(const MessRep& mess, const FiniteLamination& lam) {
    lam.validate();
    ParaCocycle out;
    out.lam = lam;
    if (lam.kind == FiniteLamination::Kind::Triangulation) {
        auto edges = triangulation_edges();
        const char* names[3] = {"x", "y", "z"};
        for (int k = 0; k < 3; ++k) {
            out.values.push_back(elementary_shear_para(mess, edges[k].u, edges[k].lm, edges[k].u2, edges[k].lp));
            out.labels.push_back(names[k]);
        }
        return out;
    }
    auto s = spin_frame(lam.leaf());
    int L = s.left[0] ? 0 : 1, R = 1 - L;
    out.values.push_back(spin_spiral_shear(mess, s, L, 0));
    out.labels.push_back("spiral_left");
    out.values.push_back(spin_spiral_shear(mess, s, R, 0));
    out.labels.push_back("spiral_right");
    // (V0, C V0, end0) against partner . (V1, C V1, end1) = (V0, C V0, partner . end1)
    auto P = spin_plaque(s, 0, 0);
    Word across = conjugate(s.partner, s.end[1]);
    out.values.push_back(adjacent_shear_para(mess, P[2], P[0], P[1], across));
    out.labels.push_back("isolated");
    out.values.push_back(spin_asymptotic_shear(mess, s, 0, 0));
    out.labels.push_back("closed_leaf");
    return out;
}

std::array<double, 3> real_cocycle(const SurfaceGroupRep& rep, const FiniteLamination& lam) {
    if (lam.kind == FiniteLamination::Kind::Triangulation) {
        auto s = holonomy_to_shears(rep);
        return {s.x, s.y, s.z};
    }
    auto c = shear_bend_cocycle(MessRep::fuchsian(rep), lam);
    return {c.values[0].re, c.values[2].re, c.values[3].re};
}

SurfaceGroupRep structure_from_real_cocycle(const FiniteLamination& lam, const std::array<double, 3>& target,
                                            const ShearCoordinates& init) {
    if (lam.kind == FiniteLamination::Kind::Triangulation) return shears_to_holonomy({target[0], target[1], target[2]});

    // Gauss-Newton on the completeness plane
    double p[2] = {init.x, init.y};
    auto at = [&](double x, double y) { return shears_to_holonomy({x, y, -x - y}); };
    auto residual = [&](double x, double y) {
        auto f = real_cocycle(at(x, y), lam);
        return std::array<double, 3>{f[0] - target[0], f[1] - target[1], f[2] - target[2]};
    };
    auto sup = [](const std::array<double, 3>& r) { return std::max({std::fabs(r[0]), std::fabs(r[1]), std::fabs(r[2])}); };
    auto r = residual(p[0], p[1]);
    for (int it = 0; it < 50; ++it) {
        double norm = sup(r);
        if (norm < 1e-13) break;
        const double h = 1e-6;
        std::array<double, 3> J[2];
        for (int k = 0; k < 2; ++k) {
            double q[2] = {p[0], p[1]};
            q[k] += h;
            auto rp = residual(q[0], q[1]);
            q[k] -= 2 * h;
            auto rm = residual(q[0], q[1]);
            for (int i = 0; i < 3; ++i) J[k][i] = (rp[i] - rm[i]) / (2 * h);
        }
        double a = 0, b = 0, d = 0, g0 = 0, g1 = 0;
        for (int i = 0; i < 3; ++i) {
            a += J[0][i] * J[0][i];
            b += J[0][i] * J[1][i];
            d += J[1][i] * J[1][i];
            g0 += J[0][i] * r[i];
            g1 += J[1][i] * r[i];
        }
        double det = a * d - b * b;
        if (!(std::fabs(det) > 0)) throw Error(ErrorKind::Degenerate, "spin cocycle Jacobian is singular");
        double dx = -(d * g0 - b * g1) / det, dy = -(a * g1 - b * g0) / det;
        // halve until the residual drops
        double step = 1;
        for (int k = 0; k < 30; ++k) {
            auto rn = residual(p[0] + step * dx, p[1] + step * dy);
            if (sup(rn) < norm || k == 29) {
                p[0] += step * dx;
                p[1] += step * dy;
                r = rn;
                break;
            }
            step /= 2;
        }
    }
    if (sup(r) > 1e-10) {
        std::ostringstream os;
        os << "no structure realizes the real cocycle (residual " << sup(r) << ")";
        throw Error(ErrorKind::Constraint, os.str());
    }
    return at(p[0], p[1]);
}

SurfaceGroupRep midpoint_structure(const MessRep& mess, const FiniteLamination& lam) {
    auto cocycle = shear_bend_cocycle(mess, lam);
    if (lam.kind == FiniteLamination::Kind::Triangulation)
        return shears_to_holonomy({cocycle.values[0].re, cocycle.values[1].re, cocycle.values[2].re});
    // start from the triangulation midpoint
    auto tri = shear_bend_cocycle(mess, FiniteLamination::triangulation());
    ShearCoordinates init{tri.values[0].re, tri.values[1].re, tri.values[2].re};
    return structure_from_real_cocycle(lam, {cocycle.values[0].re, cocycle.values[2].re, cocycle.values[3].re}, init);
}

MidpointErrors check_midpoint_theorem(const ShearCoordinates& x, const ShearCoordinates& y) {
    x.validate();
    y.validate();
    auto c = shear_bend_cocycle(MessRep::from_shears(x, y), FiniteLamination::triangulation());
    MidpointErrors e;
    for (int k = 0; k < 3; ++k) {
        e.re = std::max(e.re, std::fabs(c.values[k].re - (x[k] + y[k]) / 2));
        e.ta = std::max(e.ta, std::fabs(c.values[k].ta - (x[k] - y[k]) / 2));
    }
    return e;
}

double thurston_sign() {
    static const double sign = [] {
        auto rep = modular_torus();
        auto lam = FiniteLamination::spin(Slope::make(0, 1), 1.0);
        double raw = shear_bend_cocycle(MessRep::fuchsian(rep), lam).values[0].re;
        double L = translation_length(evaluate_word(rep, slope_to_word(lam.leaf())));
        if (std::fabs(std::fabs(raw) - L) > 1e-9) {
            std::ostringstream os;
            os << "spiral shear " << raw << " does not match the leaf length " << L;
            throw Error(ErrorKind::Constraint, os.str());
        }
        return raw > 0 ? 1.0 : -1.0;
    }();
    return sign;
}

ParaComplex thurston_pairing_para(const ParaCocycle& cocycle, const FiniteLamination& mu) {
    mu.validate();
    if (mu.closed_leaves.size() != 1) throw Error(ErrorKind::Support, "pairing needs a single weighted curve");
    if (cocycle.lam.kind != FiniteLamination::Kind::Spin || !(cocycle.lam.leaf() == mu.leaf()))
        throw Error(ErrorKind::Support, "curve " + to_string(mu.leaf()) + " is not a leaf of the cocycle's lamination");
    return (mu.weight() * thurston_sign()) * cocycle.values[0];
}

}  // namespace adslen
