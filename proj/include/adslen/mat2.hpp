#pragma once

#include <cmath>
#include <ostream>

namespace adslen {

// Plain 2x2 real matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

    constexpr double det() const { return a * d - b * c; }
    constexpr double tr() const { return a + d; }

    // Adjugate [[d, -b], [-c, a]]; equals the inverse when det = 1.
    constexpr Mat2 adj() const { return {d, -b, -c, a}; }

    Mat2 inverse() const {
        double k = 1.0 / det();
        return {d * k, -b * k, -c * k, a * k};
    }

    constexpr Mat2 transpose() const { return {a, c, b, d}; }

    double max_abs() const {
        return std::fmax(std::fmax(std::fabs(a), std::fabs(b)), std::fmax(std::fabs(c), std::fabs(d)));
    }
    double frobenius() const { return std::sqrt(a * a + b * b + c * c + d * d); }
};

constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
constexpr Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
constexpr Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
constexpr Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
constexpr Mat2 operator*(double k, const Mat2& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }
constexpr Mat2 operator*(const Mat2& x, double k) { return k * x; }

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace adslen
