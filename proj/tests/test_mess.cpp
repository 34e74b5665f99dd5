#include <cmath>

#include "adslen/errors.hpp"
#include "adslen/mess.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adslen;
using testing::uniform;

namespace {

const ShearCoordinates kX{0.4, -0.9, 0.5};
const ShearCoordinates kY{-0.3, 0.2, 0.1};

MessRep generic() { return MessRep::from_shears(kX, kY); }

Word random_word(testing::Rng& rng, int len) {
    static const char letters[] = "aAbB";
    std::string s;
    while (static_cast<int>(Word(s).size()) < len) s += letters[rng() % 4];
    return Word(s);
}

// Primitive hyperbolic words whose attractors are well spread.
const char* kLoxodromic[] = {"a", "b", "ab", "aB", "aab", "abb", "aBB", "AAb", "aabab"};

}  // namespace

TEST_CASE("limit map of a Fuchsian pair is diagonal") {
    auto mess = MessRep::fuchsian(shears_to_holonomy(kX));
    for (const char* w : kLoxodromic) {
        auto [im, ker] = boundary_pair(limit_map(mess, w));
        CHECK(same_point(im, ker));
    }
}

TEST_CASE("limit map is equivariant") {
    auto mess = generic();
    testing::Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Word v = random_word(rng, 1 + static_cast<int>(rng() % 3));
        Word w = kLoxodromic[rng() % 9];
        auto [im, ker] = boundary_pair(limit_map(mess, conjugate(v, w)));
        auto base = fixed_pair(mess, w);
        CHECK(same_point(im, evaluate_word(mess.rho_x, v) * base.left, 1e-9));
        CHECK(same_point(ker, evaluate_word(mess.rho_y, v) * base.right, 1e-9));
    }
}

TEST_CASE("limit map preserves cyclic order") {
    auto mess = generic();
    testing::Rng rng(2);
    int checked = 0;
    while (checked < 100) {
        Word w[3];
        for (auto& x : w) x = conjugate(random_word(rng, 2), kLoxodromic[rng() % 9]);
        auto p0 = fixed_pair(mess, w[0]), p1 = fixed_pair(mess, w[1]), p2 = fixed_pair(mess, w[2]);
        int ox = cyclic_orientation(p0.left, p1.left, p2.left);
        if (ox == 0) continue;
        CHECK(cyclic_orientation(p0.right, p1.right, p2.right) == ox);
        ++checked;
    }
}

TEST_CASE("loxodromic data") {
    auto fu = MessRep::fuchsian(shears_to_holonomy(kX));
    auto d = loxodromic_data(fu, "ab");
    CHECK(d.torsion == 0);
    CHECK(d.length == doctest::Approx(translation_length(evaluate_word(fu.rho_x, "ab"))));

    double e = std::exp(1.0);
    auto diag = [](double s) { return MoebiusElement::from({std::exp(s / 2), 0, 0, std::exp(-s / 2)}); };
    MessRep two_four{{diag(2), MoebiusElement::from({2, 1, 1, 1})}, {diag(4), MoebiusElement::from({2, 1, 1, 1})}};
    auto l = loxodromic_data(two_four, "a");
    CHECK(l.length == doctest::Approx(3));
    CHECK(l.torsion == doctest::Approx(1));
    (void)e;

    auto mess = generic();
    for (const char* w : kLoxodromic) {
        auto dd = loxodromic_data(mess, w);
        CHECK(dd.length == doctest::Approx((dd.length_x + dd.length_y) / 2));
        // the element moves the dual axis by its torsion
        auto p = dd.dual_axis.at(0).m;
        Mat2 gp = ads_act(evaluate_word(mess.rho_x, w).m, p, evaluate_word(mess.rho_y, w).m);
        CHECK(std::fabs(std::fabs(ads_form(p, gp)) - std::cosh(dd.torsion)) < 1e-9 * std::cosh(dd.torsion));
        // and translates along the axis by its length
        auto q = dd.axis.at(0.3).m;
        Mat2 gq = ads_act(evaluate_word(mess.rho_x, w).m, q, evaluate_word(mess.rho_y, w).m);
        CHECK(std::fabs(std::fabs(ads_form(q, gq)) - std::cosh(dd.length)) < 1e-9 * std::cosh(dd.length));
        // class function and swap symmetry
        auto conj = loxodromic_data(mess, conjugate("bA", w));
        CHECK(std::fabs(conj.length - dd.length) < 1e-10);
        CHECK(std::fabs(conj.torsion - dd.torsion) < 1e-10);
        auto sw = loxodromic_data(mess.swapped(), w);
        CHECK(std::fabs(sw.length - dd.length) < 1e-10);
        CHECK(std::fabs(sw.torsion - dd.torsion) < 1e-10);
    }
}

TEST_CASE("powers of a word converge to its attractor") {
    auto mess = generic();
    auto target = fixed_pair(mess, "ab");
    Word v = "b", p = "ab";
    double prev = INFINITY;
    for (int n = 1; n <= 6; ++n) {
        Word w = p;
        for (int k = 1; k < n; ++k) w = w * p;
        auto moved = fixed_pair(mess, w * v);
        double d = std::fabs(det(moved.left.normalized(), target.left.normalized()));
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("pleated set of a Fuchsian pair is a plane") {
    auto mess = MessRep::fuchsian(shears_to_holonomy(kX));
    auto s = sample_pleated_set(mess, FiniteLamination::triangulation(), 3, 4);
    CHECK(s.points.size() == static_cast<std::size_t>((s.translates - s.collapsed) * 16));
    CHECK(s.points.size() > 0);
    for (const auto& p : s.points) CHECK(std::fabs(ads_form(p.point.m, Mat2::identity())) < 1e-9);
}

TEST_CASE("pleated set samples are acausal") {
    auto mess = generic();
    auto s = sample_pleated_set(mess, FiniteLamination::triangulation(), 4, 6);
    auto pts = sample_points(s);
    REQUIRE(pts.size() > 100);
    testing::Rng rng(3);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto& a = pts[rng() % pts.size()];
        const auto& b = pts[rng() % pts.size()];
        bad += std::fabs(ads_form(a.m, b.m)) < 1 - 1e-9;
    }
    CHECK(bad == 0);
}

TEST_CASE("timelike gap") {
    auto line = SpacelikeLine::through({1, 0, 0, 0}, {0, 0, 0, 1});
    auto cloud = line_grid(line, -1, 1, 11);
    CHECK(max_timelike_gap(cloud, cloud) == 0);
    Mat2 T{0, 1, -1, 0};
    std::vector<AdsPoint> lifted{AdsPoint::normalize(std::cos(0.3) * line.at(0.5).m + std::sin(0.3) * T)};
    CHECK(max_timelike_gap(cloud, lifted) >= 0.29);
    CHECK(max_timelike_gap(cloud, lifted) <= 0.3 + 1e-12);
}

TEST_CASE("line gap grows under refinement") {
    auto mess = generic();
    for (const char* w : {"a", "ab", "aab"}) {
        auto axis = loxodromic_data(mess, w).axis;
        double coarse = line_gap(mess, FiniteLamination::triangulation(), axis, 6, 8).delta_hat;
        double fine = line_gap(mess, FiniteLamination::triangulation(), axis, 6, 16).delta_hat;
        CHECK(coarse <= fine + 1e-12);
        CHECK(fine > 0);
    }
}

TEST_CASE("axis inside the lamination has no gap") {
    auto mess = generic();
    for (auto c : {Slope::make(0, 1), Slope::make(1, 1)}) {
        auto lam = FiniteLamination::spin(c, 1);
        auto axis = loxodromic_data(mess, slope_to_word(c)).axis;
        CHECK(line_gap(mess, lam, axis, 6, 8).delta_hat < 1e-9);
    }
}

TEST_CASE("inequality A") {
    auto fu = MessRep::fuchsian(shears_to_holonomy(kX));
    for (const char* w : {"a", "ab", "aab"}) {
        auto r = check_inequality_A(fu, FiniteLamination::triangulation(), w, 6, 8);
        CHECK(std::fabs(r.margin) < 1e-9);
        CHECK(r.delta_hat < 1e-9);
    }
    auto mess = generic();
    for (const char* w : {"ab", "aab", "aBB"}) {
        auto coarse = check_inequality_A(mess, FiniteLamination::triangulation(), w, 6, 8);
        auto fine = check_inequality_A(mess, FiniteLamination::triangulation(), w, 6, 16);
        CHECK(fine.margin > 1e-4);
        // a larger gap estimate can only lower the right-hand side
        CHECK(fine.margin <= coarse.margin + 1e-12);
    }
    for (auto c : {Slope::make(0, 1), Slope::make(1, 1)}) {
        auto r = check_inequality_A(mess, FiniteLamination::spin(c, 1), slope_to_word(c), 6, 8);
        CHECK(r.delta_hat < 1e-9);
        CHECK(r.margin == doctest::Approx(std::cosh(r.length_rho) - std::cosh(r.length_z)));
        CHECK(r.margin >= -1e-9);
    }
}

TEST_CASE("earthquake family") {
    auto c = Slope::make(0, 1);
    auto at0 = earthquake_family(kX, c, 1, 0);
    for (const char* w : kLoxodromic) CHECK(loxodromic_data(at0, w).torsion < 1e-12);
    double lc = translation_length(evaluate_word(shears_to_holonomy(kX), "a"));
    for (double t : {-0.5, 0.2, 0.5}) {
        auto d = loxodromic_data(earthquake_family(kX, c, 1.5, t), "a");
        CHECK(std::fabs(d.length_x - lc) < 1e-10);
        CHECK(std::fabs(d.length_y - lc) < 1e-10);
    }
    // theta_t / t tends to |dL/dt| for a crossing word
    auto rep = shears_to_holonomy(kX);
    double h = 1e-5;
    double ldot = (translation_length(evaluate_word(twist_deformation(rep, c, h), "b")) -
                   translation_length(evaluate_word(twist_deformation(rep, c, -h), "b"))) / (2 * h);
    double ratio = loxodromic_data(earthquake_family(kX, c, 1, 1e-4), "b").torsion / 1e-4;
    CHECK(ratio == doctest::Approx(std::fabs(ldot)).epsilon(1e-6));
}

TEST_CASE("combined inequality") {
    auto c = Slope::make(0, 1);
    auto self = check_combined_inequality(kX, c, 1, "a", 0.3);
    CHECK(self.intersection == 0);
    CHECK(std::fabs(self.margin) < 1e-9);
    CHECK(self.torsion_t < 1e-12);

    auto anchor = check_combined_inequality({}, c, 1, "b", 0.3);
    CHECK(anchor.intersection == 1);
    CHECK(anchor.margin > 0);
    CHECK(anchor.margin == doctest::Approx(0.03627081130308718).epsilon(1e-9));

    for (const char* w : {"b", "ab", "aBB"}) {
        double m1 = check_combined_inequality(kX, c, 1, w, 0.01).margin;
        double m2 = check_combined_inequality(kX, c, 1, w, 0.02).margin;
        CHECK(m1 >= -1e-9);
        CHECK(std::fabs(m1) <= 0.5 * std::fabs(m2) + 1e-9);
        CHECK(std::fabs(m2) / (0.02 * 0.02) < 100);
    }
}

TEST_CASE("crossing counts of curves and words") {
    auto rep = shears_to_holonomy(kX);
    CHECK(curve_word_intersection(rep, Slope::make(0, 1), "b") == 1);
    CHECK(curve_word_intersection(rep, Slope::make(0, 1), "a") == 0);
    CHECK(curve_word_intersection(rep, Slope::make(0, 1), "abb") == 2);
    CHECK(curve_word_intersection(rep, Slope::make(1, 1), "aB") == 2);
}
