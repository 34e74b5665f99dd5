#include <cmath>

#include "adslen/errors.hpp"
#include "adslen/paracomplex.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adslen;
using testing::uniform;

namespace {

ParaComplex random_pc(testing::Rng& rng, double r = 3) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

double dist(ParaComplex z, ParaComplex w) { return std::fmax(std::fabs(z.re - w.re), std::fabs(z.ta - w.ta)); }

ProjectivePoint pt(double t) { return ProjectivePoint::from_real(t); }

// (a-c)(b-d) / ((a-d)(b-c)) on finite rationals, cleared by hand
double naive_cross_ratio(double a, double b, double c, double d) { return (a - c) * (b - d) / ((a - d) * (b - c)); }

}  // namespace

TEST_CASE("idempotents are orthogonal") {
    CHECK(e_l * e_r == ParaComplex{0, 0});
    CHECK(e_l * e_l == e_l);
    CHECK(e_r * e_r == e_r);
    CHECK(tau * tau == ParaComplex{1, 0});
}

TEST_CASE("conjugate, norm and inverse") {
    ParaComplex z{3, 2};
    CHECK(conj(z) == ParaComplex{3, -2});
    CHECK(norm_sq(z) == 5);
    auto inv = inverse(ParaComplex{2, 1});
    CHECK(inv.re == doctest::Approx(2.0 / 3));
    CHECK(inv.ta == doctest::Approx(-1.0 / 3));
    CHECK(dist(ParaComplex{2, 1} * inv, 1) < 1e-15);
}

TEST_CASE("zero divisors are not invertible") {
    for (auto z : {e_l, e_r, ParaComplex{2, -2}, ParaComplex{0, 0}}) {
        try {
            inverse(z);
            FAIL("inverse of a zero divisor returned");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonInvertible);
        }
    }
    CHECK_THROWS_AS(ParaComplex(1) / e_l, Error);
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto x = random_pc(rng), y = random_pc(rng), z = random_pc(rng);
        CHECK(dist((x * y) * z, x * (y * z)) < 1e-12);
        CHECK(dist(x * (y + z), x * y + x * z) < 1e-12);
        CHECK(dist(x * y, y * x) == 0);
        CHECK(dist(conj(x * y), conj(x) * conj(y)) < 1e-12);
        double n = norm_sq(x * y), m = norm_sq(x) * norm_sq(y);
        CHECK(std::fabs(n - m) <= 1e-10 * std::fmax(1, std::fabs(m)));
        // idempotent splitting is a ring map to R x R
        CHECK(std::fabs((x * y).l() - x.l() * y.l()) < 1e-12);
        CHECK(std::fabs((x * y).r() - x.r() * y.r()) < 1e-12);
        if (std::fabs(norm_sq(x)) > 1e-3) {
            auto q = conj(x);
            ParaComplex want{q.re / norm_sq(x), q.ta / norm_sq(x)};
            CHECK(dist(inverse(x), want) < 1e-12 * std::fmax(1, std::fabs(want.re) + std::fabs(want.ta)));
        }
    }
}

TEST_CASE("exponential") {
    CHECK(dist(pc_exp(0), 1) == 0);
    auto e = pc_exp(tau);
    CHECK(e.re == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(e.ta == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    auto s = pc_exp(1 * e_l + (-1) * e_r);
    CHECK(dist(s, std::exp(1.0) * e_l + std::exp(-1.0) * e_r) < 1e-14);
    testing::Rng rng(2);
    for (int i = 0; i < 200; ++i) CHECK(in_b_plus(pc_exp(random_pc(rng, 5))));
}

TEST_CASE("logarithm") {
    CHECK(dist(pc_log(1), 0) == 0);
    CHECK(dist(pc_log(pc_exp({0.3, -0.7})), {0.3, -0.7}) < 1e-14);
    testing::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        auto z = random_pc(rng, 3);
        CHECK(dist(pc_log(pc_exp(z)), z) < 1e-12);
        // B+ points with idempotent components anywhere in [e^-10, e^10]
        auto w = ParaComplex::from_idempotent(std::exp(uniform(rng, -10, 10)), std::exp(uniform(rng, -10, 10)));
        CHECK(dist(pc_exp(pc_log(w)), w) < 1e-12 * (std::fabs(w.re) + std::fabs(w.ta)));
    }
}

TEST_CASE("logarithm outside B+") {
    for (auto z : {ParaComplex{-1, 0}, ParaComplex{1, 1}, ParaComplex{1, -2}, ParaComplex{0, 0}}) {
        CHECK_FALSE(in_b_plus(z));
        try {
            pc_log(z);
            FAIL("log outside B+ returned");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Domain);
        }
    }
}

TEST_CASE("real cross-ratio") {
    CHECK(cross_ratio_real(pt(2), pt(0), pt(1), ProjectivePoint::infinity()) == doctest::Approx(-1));
    CHECK(cross_ratio_real(pt(2), pt(5), pt(2), pt(-1)) == 0);
    CHECK(std::isinf(cross_ratio_real(pt(2), pt(5), pt(5), pt(-1))));
    // scale invariance of homogeneous coordinates
    ProjectivePoint a{6, 3};
    CHECK(cross_ratio_real(a, pt(0), pt(1), {-4, 0}) == doctest::Approx(-1));
}

TEST_CASE("real cross-ratio against a direct evaluation") {
    testing::Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        double a = uniform(rng, -5, 5), b = uniform(rng, -5, 5), c = uniform(rng, -5, 5), d = uniform(rng, -5, 5);
        if (std::fabs(a - d) < 0.1 || std::fabs(b - c) < 0.1) continue;
        double want = naive_cross_ratio(a, b, c, d);
        CHECK(cross_ratio_real(pt(a), pt(b), pt(c), pt(d)) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("real cross-ratio is Moebius invariant") {
    testing::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        auto g = testing::random_sl2(rng);
        ProjectivePoint p[4];
        for (auto& x : p) x = pt(uniform(rng, -3, 3));
        double before = cross_ratio_real(p[0], p[1], p[2], p[3]);
        double after = cross_ratio_real(g * p[0], g * p[1], g * p[2], g * p[3]);
        CHECK(std::fabs(after - before) <= 1e-10 * std::fmax(1, std::fabs(before)));
    }
}

TEST_CASE("para cross-ratio splits into components") {
    ParaProjectivePoint a{pt(2), pt(3)}, b{pt(0), pt(0)}, c{pt(1), pt(1)};
    ParaProjectivePoint d{ProjectivePoint::infinity(), ProjectivePoint::infinity()};
    auto z = cross_ratio_para(a, b, c, d);
    CHECK(z.re == doctest::Approx(-1.5));
    CHECK(z.ta == doctest::Approx(0.5));

    ParaProjectivePoint x{pt(4), pt(4)}, y{pt(-1), pt(-1)}, u{pt(0.5), pt(0.5)}, v{pt(7), pt(7)};
    auto diag = cross_ratio_para(x, y, u, v);
    CHECK(diag.ta == 0);
    CHECK(diag.re == doctest::Approx(naive_cross_ratio(4, -1, 0.5, 7)));

    ParaProjectivePoint bad{pt(0), pt(1)};
    CHECK_THROWS_AS(cross_ratio_para(a, bad, bad, a), Error);
}

TEST_CASE("para cross-ratio is equivariant under pairs of Moebius maps") {
    testing::Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        auto g = testing::random_sl2(rng), h = testing::random_sl2(rng);
        ParaProjectivePoint p[4];
        for (auto& x : p) x = {pt(uniform(rng, -3, 3)), pt(uniform(rng, -3, 3))};
        auto before = cross_ratio_para(p[0], p[1], p[2], p[3]);
        ParaProjectivePoint q[4];
        for (int k = 0; k < 4; ++k) q[k] = {g * p[k].left, h * p[k].right};
        auto after = cross_ratio_para(q[0], q[1], q[2], q[3]);
        CHECK(dist(after, before) <= 1e-10 * std::fmax(1, std::fabs(before.re) + std::fabs(before.ta)));
        double l = naive_cross_ratio(p[0].left.x, p[1].left.x, p[2].left.x, p[3].left.x);
        double r = naive_cross_ratio(p[0].right.x, p[1].right.x, p[2].right.x, p[3].right.x);
        CHECK(dist(before, ParaComplex::from_idempotent(l, r)) <= 1e-10 * std::fmax(1, std::fabs(l) + std::fabs(r)));
    }
}

TEST_CASE("cyclic orientation") {
    CHECK(cyclic_orientation(pt(0), pt(1), pt(2)) == 1);
    CHECK(cyclic_orientation(pt(1), pt(2), pt(0)) == 1);
    CHECK(cyclic_orientation(pt(2), pt(1), pt(0)) == -1);
    CHECK(cyclic_orientation(pt(0), pt(1), ProjectivePoint::infinity()) == 1);
    CHECK(cyclic_orientation(pt(0), pt(0), pt(2)) == 0);
}
