#pragma once

#include <array>
#include <string>
#include <vector>

#include "adslen/mess.hpp"
#include "adslen/paracomplex.hpp"

namespace adslen {

// log(-beta^B(lp, lm, u, u2)) for plaques (u, lm, lp) and (u2, lp, lm). Each factor must
// see u, lm, u2, lp in positive cyclic order; throws Configuration otherwise or when
// -beta^B leaves B+.
ParaComplex elementary_shear_para(const ParaProjectivePoint& u, const ParaProjectivePoint& lm,
                                  const ParaProjectivePoint& u2, const ParaProjectivePoint& lp);
ParaComplex elementary_shear_para(const MessRep& mess, const Word& u, const Word& lm, const Word& u2, const Word& lp);

// Plaques P = (v, e1, e2) and P' = (v2, e1, e2) sharing the edge e1 e2; the edge is
// oriented from the X factor so that P lies on its left.
ParaComplex adjacent_shear_para(const MessRep& mess, const Word& v, const Word& e1, const Word& e2, const Word& v2);

// Plaques on either side of the leaf lm -> lp: P = (u, v, lp) on the left, P' = (u2, v2, lm)
// on the right, with u, u2 the vertices of the sides facing the leaf.
// log(-beta(lp,u,v,lm) beta(lm,lp,u2,u) beta(lm,u2,v2,lp)).
ParaComplex asymptotic_shear_para(const ParaProjectivePoint& lp, const ParaProjectivePoint& lm,
                                  const ParaProjectivePoint& u, const ParaProjectivePoint& v,
                                  const ParaProjectivePoint& u2, const ParaProjectivePoint& v2);

// Words describing the spin lamination of a slope: closed leaf = axis of curve, plaques
// (C^k V, C^{k+1} V, end) for the two vertex families V. vertex[0] is conjugate to the
// vertex[1] family by the partner: partner . vertex[1] = vertex[0].
struct SpinFrame {
    Word curve;
    Word partner;
    std::array<Word, 2> vertex;
    std::array<Word, 2> end;   // curve or its inverse: the leaf end the family spirals to
    std::array<bool, 2> left;  // family lies left of the leaf oriented toward curve's attractor
};
SpinFrame spin_frame(const Slope& c);

// Plaque (C^k V, C^{k+1} V, end) of family f as vertex words.
std::array<Word, 3> spin_plaque(const SpinFrame& s, int family, int k);

// Asymptotic shear between the left plaque number k and the right plaque number j.
ParaComplex spin_asymptotic_shear(const MessRep& mess, const SpinFrame& s, int k, int j);
// Elementary shear between consecutive plaques k, k+1 of one family.
ParaComplex spin_spiral_shear(const MessRep& mess, const SpinFrame& s, int family, int k);

struct ParaCocycle {
    FiniteLamination lam;
    std::vector<ParaComplex> values;
    std::vector<std::string> labels;
};

// Triangulation: the three edge shears. Spin: spiral shear on each side, the shear across
// the isolated leaf between the two families, and the asymptotic shear across the leaf.
ParaCocycle shear_bend_cocycle(const MessRep& mess, const FiniteLamination& lam);

// Real coordinates of a Fuchsian structure: the edge shears, or for a spin lamination the
// real parts of (spiral_left, isolated, closed_leaf).
std::array<double, 3> real_cocycle(const SurfaceGroupRep& rep, const FiniteLamination& lam);
// Inverse of real_cocycle; Gauss-Newton from init for spin laminations. Throws Constraint
// if the target is not reached.
SurfaceGroupRep structure_from_real_cocycle(const FiniteLamination& lam, const std::array<double, 3>& target,
                                            const ShearCoordinates& init);

// Fuchsian structure whose real cocycle is Re of the shear-bend cocycle.
SurfaceGroupRep midpoint_structure(const MessRep& mess, const FiniteLamination& lam);

struct MidpointErrors {
    double re = 0;
    double ta = 0;
};
MidpointErrors check_midpoint_theorem(const ShearCoordinates& x, const ShearCoordinates& y);

// Sign making the Fuchsian pairing equal +L_X; computed once at the modular torus.
double thurston_sign();
// weight(mu) * sign * spiral shear of the curve; throws Support unless mu is the closed leaf.
ParaComplex thurston_pairing_para(const ParaCocycle& cocycle, const FiniteLamination& mu);

}  // namespace adslen
