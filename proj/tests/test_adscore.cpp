#include <cmath>
#include <numbers>

#include "adslen/adscore.hpp"
#include "adslen/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adslen;
using testing::uniform;

namespace {

const Mat2 I = Mat2::identity();
const Mat2 E{1, 0, 0, -1};   // unit spacelike at I
const Mat2 F{0, 1, 1, 0};    // unit spacelike, orthogonal to I and E
const Mat2 T{0, 1, -1, 0};   // unit timelike, orthogonal to I, E, F

AdsPoint point(const Mat2& m) { return AdsPoint::normalize(m); }

// Random point with a random unit spacelike direction through it.
AdsVector random_vector(testing::Rng& rng, bool timelike) {
    auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
    return AdsVector::make(point(ads_act(A, I, B)), ads_act(A, timelike ? T : E, B));
}

}  // namespace

TEST_CASE("ads form") {
    CHECK(ads_form(I, I) == -1);
    CHECK(ads_form(E, E) == 1);
    CHECK(ads_form(T, T) == -1);
    CHECK(ads_form(I, E) == 0);
    testing::Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        auto X = testing::random_mat(rng), Y = testing::random_mat(rng);
        CHECK(std::fabs(ads_form(X, X) + X.det()) < 1e-12);
        CHECK(ads_form(X, Y) == doctest::Approx(ads_form(Y, X)));
        // det X + det Y - det(X + Y) = -tr(X adj Y)
        CHECK(std::fabs(X.det() + Y.det() - (X + Y).det() + (X * Y.adj()).tr()) < 1e-10);
        auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
        CHECK(std::fabs(ads_form(ads_act(A, X, B), ads_act(A, Y, B)) - ads_form(X, Y)) < 1e-10);
    }
}

TEST_CASE("normalization") {
    auto p = point(3 * I);
    CHECK(ads_form(p.m, p.m) == doctest::Approx(-1));
    CHECK_THROWS_AS(point(E), Error);
    CHECK_THROWS_AS(AdsVector::make(point(I), 2 * E), Error);
    CHECK_THROWS_AS(AdsVector::make(point(I), I + E), Error);
}

TEST_CASE("causal separation") {
    auto x = point(I);
    CHECK(classify_separation(x, x) == Separation::LightlikeOrEqual);
    auto ys = point(std::cosh(1.0) * I + std::sinh(1.0) * E);
    CHECK(classify_separation(x, ys) == Separation::Spacelike);
    CHECK(std::fabs(ads_form(x.m, ys.m)) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    auto yt = point(std::cos(0.5) * I + std::sin(0.5) * T);
    CHECK(classify_separation(x, yt) == Separation::Timelike);
    CHECK(std::fabs(ads_form(x.m, yt.m)) == doctest::Approx(std::cos(0.5)).epsilon(1e-14));
    auto yl = point(I + 0.5 * (E + T));
    CHECK(classify_separation(x, yl) == Separation::LightlikeOrEqual);
}

TEST_CASE("geodesics and distances") {
    auto x = point(I);
    auto sv = AdsVector::make(x, E), tv = AdsVector::make(x, T);
    CHECK_FALSE(sv.timelike());
    CHECK(tv.timelike());
    CHECK(testing::mat_dist(geodesic_point(sv, 0).m, I) < 1e-15);
    CHECK(std::fabs(ads_form(x.m, geodesic_point(sv, 1).m)) == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
    CHECK(ads_form(x.m, geodesic_point(sv, 0.7).m) == doctest::Approx(-std::cosh(0.7)));
    CHECK(ads_form(x.m, geodesic_point(tv, 0.7).m) == doctest::Approx(-std::cos(0.7)));
    CHECK(testing::pm_dist(geodesic_point(tv, std::numbers::pi).m, I) < 1e-15);

    CHECK(spacelike_distance(x, geodesic_point(sv, 1)) == doctest::Approx(1).epsilon(1e-12));
    CHECK(timelike_distance(x, geodesic_point(tv, 0.5)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(timelike_distance(x, x) == 0);
    CHECK(timelike_distance(x, geodesic_point(sv, 1)) == 0);
    try {
        spacelike_distance(x, geodesic_point(tv, 0.5));
        FAIL("spacelike distance of a timelike pair");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Separation);
    }
}

TEST_CASE("distances are invariant under the isometric action") {
    testing::Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        auto sv = random_vector(rng, false), tv = random_vector(rng, true);
        double s = uniform(rng, 0.1, 3), t = uniform(rng, 0.1, 1.4);
        auto ps = geodesic_point(sv, s), pt = geodesic_point(tv, t);
        CHECK(spacelike_distance(sv.base, ps) == doctest::Approx(s).epsilon(1e-9));
        CHECK(timelike_distance(tv.base, pt) == doctest::Approx(t).epsilon(1e-9));
        auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
        auto move = [&](const AdsPoint& p) { return point(ads_act(A, p.m, B)); };
        CHECK(std::fabs(spacelike_distance(move(sv.base), move(ps)) - s) < 1e-10 * std::cosh(s));
        CHECK(std::fabs(timelike_distance(move(tv.base), move(pt)) - t) < 1e-7);
    }
}

TEST_CASE("boundary points") {
    auto origin = boundary_pair(BoundaryPointAds::from({0, 0, 1, 0}));
    CHECK(origin.first.affine() == 0);
    CHECK(origin.second.affine() == 0);
    auto inf = boundary_pair(BoundaryPointAds::from({0, 1, 0, 0}));
    CHECK(std::isinf(inf.first.affine()));
    CHECK(std::isinf(inf.second.affine()));
    auto one = boundary_pair(BoundaryPointAds::from({1, -1, 1, -1}));
    CHECK(one.first.affine() == doctest::Approx(1));
    CHECK(one.second.affine() == doctest::Approx(1));
    try {
        BoundaryPointAds::from(I);
        FAIL("rank two accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Rank);
    }

    testing::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto u = ProjectivePoint::from_real(uniform(rng, -4, 4)), k = ProjectivePoint::from_real(uniform(rng, -4, 4));
        auto [im, ker] = boundary_pair(pair_to_boundary(u, k));
        CHECK(same_point(im, u));
        CHECK(same_point(ker, k));
        auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
        auto moved = boundary_pair(BoundaryPointAds::from(ads_act(A, pair_to_boundary(u, k).m, B)));
        CHECK(same_point(moved.first, A * u));
        CHECK(same_point(moved.second, B * k));
    }
}

TEST_CASE("projection to a spacelike line") {
    auto line = SpacelikeLine::through({1, 0, 0, 0}, {0, 0, 0, 1});
    CHECK(ads_form(line.lp, line.lm) == doctest::Approx(-0.5));
    CHECK(testing::mat_dist(line.at(0.3).m, std::cosh(0.3) * I + std::sinh(0.3) * E) < 1e-14);

    auto on = project_to_line(line.at(0.8), line);
    CHECK(on.m == doctest::Approx(1).epsilon(1e-14));
    CHECK(on.t == doctest::Approx(0.8));
    CHECK(testing::pm_dist(on.foot.m, line.at(0.8).m) < 1e-12);

    auto y = point(std::cos(0.4) * line.at(-0.6).m + std::sin(0.4) * T);
    auto pr = project_to_line(y, line);
    CHECK(std::fabs(pr.m - std::cos(0.4)) < 1e-10);
    CHECK(pr.t == doctest::Approx(-0.6));

    // <y, lp> = 0: y sees the end of the line along a light ray
    CHECK_THROWS_AS(project_to_line(point({1, 1, -1, 0}), line), Error);
}

TEST_CASE("projection foot is the grid argmin") {
    testing::Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
        auto line = SpacelikeLine::through(ads_act(A, {1, 0, 0, 0}, B), ads_act(A, {0, 0, 0, 1}, B));
        double t0 = uniform(rng, -2, 2), d = uniform(rng, 0, 1.2);
        auto y = point(std::cos(d) * line.at(t0).m + std::sin(d) * ads_act(A, T, B));
        auto pr = project_to_line(y, line);
        double best = INFINITY, best_t = 0;
        for (int j = 0; j < 10000; ++j) {
            double t = pr.t - 5 + 10.0 * j / 9999;
            double v = -ads_form(y.m, line.at(t).m);
            if (v < best) best = v, best_t = t;
            CHECK(v >= pr.m - 1e-12);
        }
        CHECK(best - pr.m < 1e-6);
        CHECK(std::fabs(best_t - pr.t) < 2e-3);
    }
}

TEST_CASE("moving a segment along its normals") {
    auto x = point(I);
    double d = 0.9, s = 0.6;
    auto y = point(std::cosh(d) * I + std::sinh(d) * E);
    Mat2 v = T, w = std::cosh(s) * T + std::sinh(s) * F;
    CHECK(move_endpoints(x, y, v, w, 0) == doctest::Approx(std::cosh(d)));
    CHECK(move_endpoints(x, y, v, w, std::numbers::pi / 2) == doctest::Approx(std::cosh(s)));
    CHECK_THROWS_AS(move_endpoints(x, y, E, w, 0.3), Error);

    testing::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        double dd = uniform(rng, 0.1, 2), ss = uniform(rng, -1, 1), t = uniform(rng, -1.5, 1.5);
        auto A = testing::random_sl2(rng), B = testing::random_sl2(rng);
        auto mv = [&](const Mat2& m) { return ads_act(A, m, B); };
        auto xx = point(mv(I)), yy = point(mv(std::cosh(dd) * I + std::sinh(dd) * E));
        Mat2 vv = mv(T), ww = mv(std::cosh(ss) * T + std::sinh(ss) * F);
        double want = std::cos(t) * std::cos(t) * std::cosh(dd) + std::sin(t) * std::sin(t) * std::cosh(ss);
        CHECK(std::fabs(move_endpoints(xx, yy, vv, ww, t) - want) < 1e-10 * want);
    }
}

TEST_CASE("analysis constants") {
    auto k = analysis_constants(1, std::numbers::pi / 2);
    CHECK(k.kappa == doctest::Approx(std::log(std::cosh(1.0))));
    CHECK(k.kappa == doctest::Approx(0.4337808304830271));
    CHECK(k.c0 == doctest::Approx(1 / std::cosh(1.0)));
    CHECK(eta(1) == 0);
    CHECK(eta(k.c0) == doctest::Approx(1));
    CHECK_THROWS_AS(eta(1.5), Error);
    CHECK_THROWS_AS(analysis_constants(0, 1), Error);
    CHECK_THROWS_AS(analysis_constants(1, 2), Error);
    for (double a0 : {0.2, 1.0, 3.0})
        for (double b0 : {0.1, 0.7, std::numbers::pi / 2}) {
            auto slack = analysis_grid_slack(analysis_constants(a0, b0));
            CHECK(slack.first >= -1e-12);
            CHECK(slack.second >= -1e-12);
        }
}
