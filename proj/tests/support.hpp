#pragma once

#include <cmath>
#include <random>

#include "adslen/hyperbolic.hpp"
#include "adslen/mat2.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline adslen::Mat2 random_mat(Rng& rng, double r = 2) {
    return {uniform(rng, -r, r), uniform(rng, -r, r), uniform(rng, -r, r), uniform(rng, -r, r)};
}

// det 1, entries moderate
inline adslen::Mat2 random_sl2(Rng& rng) {
    for (;;) {
        auto m = random_mat(rng);
        double d = m.det();
        if (std::fabs(d) < 0.2) continue;
        if (d < 0) m = {m.b, m.a, m.d, m.c}, d = -d;
        return (1 / std::sqrt(d)) * m;
    }
}

inline adslen::ShearCoordinates random_shear(Rng& rng, double r) {
    for (;;) {
        double x = uniform(rng, -r, r), y = uniform(rng, -r, r);
        if (std::fabs(x + y) <= r) return {x, y, -x - y};
    }
}

inline double mat_dist(const adslen::Mat2& x, const adslen::Mat2& y) { return (x - y).max_abs(); }

// Equal up to sign.
inline double pm_dist(const adslen::Mat2& x, const adslen::Mat2& y) {
    return std::fmin(mat_dist(x, y), mat_dist(x, -y));
}

}  // namespace testing
