#include "adslen/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "adslen/errors.hpp"

namespace adslen {

MoebiusElement MoebiusElement::from(const Mat2& raw) {
    double dt = raw.det();
    if (!(dt > 0)) {
        std::ostringstream os;
        os << "matrix " << raw << " has non-positive determinant " << dt;
        throw Error(ErrorKind::Type, os.str());
    }
    Mat2 m = (1.0 / std::sqrt(dt)) * raw;
    if (m.tr() < 0) m = -m;
    return {m};
}

MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h) {
    Mat2 m = g.m * h.m;
    if (m.tr() < 0) m = -m;
    return {m};
}

const char* type_name(IsometryType t) {
    switch (t) {
        case IsometryType::Identity: return "identity";
        case IsometryType::Elliptic: return "elliptic";
        case IsometryType::Parabolic: return "parabolic";
        case IsometryType::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

IsometryType classify(const MoebiusElement& g) {
    Mat2 m = g.m.tr() < 0 ? -g.m : g.m;
    if ((m - Mat2::identity()).max_abs() < 1e-12) return IsometryType::Identity;
    double t = std::fabs(m.tr());
    if (t > 2 + kTraceTol) return IsometryType::Hyperbolic;
    if (std::fabs(t - 2) <= kTraceTol) return IsometryType::Parabolic;
    return IsometryType::Elliptic;
}

double translation_length(const MoebiusElement& g) {
    auto t = classify(g);
    if (t != IsometryType::Hyperbolic)
        throw Error(ErrorKind::Type, std::string("translation length of a ") + type_name(t) + " element");
    return 2 * std::acosh(std::fabs(g.m.tr()) / 2);
}

namespace {

// Null vector of the singular matrix n, taken from its larger row.
ProjectivePoint kernel_of(const Mat2& n) {
    double r1 = std::hypot(n.a, n.b), r2 = std::hypot(n.c, n.d);
    ProjectivePoint v = r1 >= r2 ? ProjectivePoint{n.b, -n.a} : ProjectivePoint{n.d, -n.c};
    return v.normalized();
}

}  // namespace

FixedPoints fixed_points(const MoebiusElement& g) {
    auto type = classify(g);
    Mat2 m = g.m.tr() < 0 ? -g.m : g.m;
    if (type == IsometryType::Parabolic) {
        auto p = kernel_of(m - (m.tr() / 2) * Mat2::identity());
        return {p, p};
    }
    if (type != IsometryType::Hyperbolic)
        throw Error(ErrorKind::Type, std::string("fixed points of a ") + type_name(type) + " element");
    double t = m.tr();
    double big = (t + std::sqrt(t * t - 4)) / 2;
    double small = 1 / big;
    return {kernel_of(m - big * Mat2::identity()), kernel_of(m - small * Mat2::identity())};
}

Geodesic axis(const MoebiusElement& g) {
    auto f = fixed_points(g);
    return {f.repelling, f.attracting};
}

MoebiusElement axis_translation(const MoebiusElement& g, double s) {
    Mat2 m = g.m.tr() < 0 ? -g.m : g.m;
    double h = m.tr() / 2;
    if (!(h > 1 + kTraceTol / 2))
        throw Error(ErrorKind::Type, "axis translation needs a hyperbolic element");
    Mat2 k = (1.0 / std::sqrt(h * h - 1)) * (m - h * Mat2::identity());
    return MoebiusElement::from(std::cosh(s / 2) * Mat2::identity() + std::sinh(s / 2) * k);
}

namespace {

// Map sending p1 -> 0, p2 -> inf, p3 -> 1.
Mat2 to_standard(const std::array<ProjectivePoint, 3>& p) {
    auto p1 = p[0].normalized(), p2 = p[1].normalized(), p3 = p[2].normalized();
    double k1 = det(p3, p2), k2 = det(p3, p1);
    return {k1 * p1.y, -k1 * p1.x, k2 * p2.y, -k2 * p2.x};
}

}  // namespace

MoebiusElement map_triple(const std::array<ProjectivePoint, 3>& p, const std::array<ProjectivePoint, 3>& q) {
    Mat2 m = to_standard(q).adj() * to_standard(p);
    if (!(m.det() > 0)) throw Error(ErrorKind::Degenerate, "triples have opposite cyclic orientation");
    return MoebiusElement::from(m);
}

namespace {

char inv_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    return '?';
}

void push_reduced(std::string& s, char c) {
    if (!s.empty() && s.back() == inv_letter(c))
        s.pop_back();
    else
        s.push_back(c);
}

}  // namespace

Word::Word(std::string_view letters) {
    for (char c : letters) {
        if (c == ' ' || c == '1') continue;
        if (inv_letter(c) == '?') {
            std::string msg = "letter '";
            msg += c;
            msg += "' in word \"" + std::string(letters) + "\" (allowed: a A b B)";
            throw Error(ErrorKind::Configuration, msg);
        }
        push_reduced(s_, c);
    }
}

Word Word::inverse() const {
    Word r;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) r.s_.push_back(inv_letter(*it));
    return r;
}

Word operator*(const Word& u, const Word& v) {
    Word r = u;
    for (char c : v.s_) push_reduced(r.s_, c);
    return r;
}

Word substitute(const Word& w, const Word& ia, const Word& ib) {
    Word r;
    Word iA = ia.inverse(), iB = ib.inverse();
    for (char c : w.str()) {
        switch (c) {
            case 'a': r = r * ia; break;
            case 'A': r = r * iA; break;
            case 'b': r = r * ib; break;
            case 'B': r = r * iB; break;
        }
    }
    return r;
}

Word conjugate(const Word& g, const Word& w) { return g * w * g.inverse(); }

Word cyclic_reduce(const Word& w) {
    std::string s = w.str();
    std::size_t i = 0, j = s.size();
    while (j - i >= 2 && s[i] == inv_letter(s[j - 1])) {
        ++i;
        --j;
    }
    return Word(s.substr(i, j - i));
}

Slope Slope::make(long p, long q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::Domain, "slope 0/0");
    if (std::gcd(p, q) != 1) {
        std::ostringstream os;
        os << "slope " << p << "/" << q << " is not reduced";
        throw Error(ErrorKind::Domain, os.str());
    }
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

bool operator==(const Slope& s, const Slope& t) { return s.p == t.p && s.q == t.q; }

std::string to_string(const Slope& s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

void SurfaceGroupRep::validate() const {
    for (auto [g, name] : {std::pair{gen_a, "a"}, std::pair{gen_b, "b"}}) {
        if (std::fabs(g.m.det() - 1) > 1e-12) throw Error(ErrorKind::Constraint, std::string("det of ") + name + " is not 1");
        if (classify(g) != IsometryType::Hyperbolic)
            throw Error(ErrorKind::Type, std::string("generator ") + name + " is not hyperbolic");
    }
    Mat2 k = gen_a.m * gen_b.m * gen_a.m.adj() * gen_b.m.adj();
    if (std::fabs(std::fabs(k.tr()) - 2) > kTraceTol) {
        std::ostringstream os;
        os << "commutator trace " << k.tr() << " is not +-2";
        throw Error(ErrorKind::Constraint, os.str());
    }
}

void ShearCoordinates::validate() const {
    double s = x + y + z;
    if (!(std::fabs(s) <= 1e-10)) {
        std::ostringstream os;
        os << "x + y + z = " << s << " (completeness needs 0)";
        throw Error(ErrorKind::Constraint, os.str());
    }
}

ShearCoordinates operator+(const ShearCoordinates& s, const ShearCoordinates& t) { return {s.x + t.x, s.y + t.y, s.z + t.z}; }
ShearCoordinates operator-(const ShearCoordinates& s, const ShearCoordinates& t) { return {s.x - t.x, s.y - t.y, s.z - t.z}; }
ShearCoordinates operator*(double k, const ShearCoordinates& s) { return {k * s.x, k * s.y, k * s.z}; }
double max_abs_diff(const ShearCoordinates& s, const ShearCoordinates& t) {
    return std::max({std::fabs(s.x - t.x), std::fabs(s.y - t.y), std::fabs(s.z - t.z)});
}

Mat2 evaluate_matrix(const Mat2& a, const Mat2& b, const Word& w) {
    Mat2 A = a.adj(), B = b.adj();
    Mat2 m = Mat2::identity();
    for (char c : w.str()) {
        switch (c) {
            case 'a': m = m * a; break;
            case 'A': m = m * A; break;
            case 'b': m = m * b; break;
            case 'B': m = m * B; break;
        }
    }
    return m;
}

MoebiusElement evaluate_word(const SurfaceGroupRep& rep, const Word& w) {
    Mat2 m = evaluate_matrix(rep.gen_a.m, rep.gen_b.m, w);
    if (m.tr() < 0) m = -m;
    return {m};
}

SurfaceGroupRep conjugate_rep(const SurfaceGroupRep& rep, const MoebiusElement& h) {
    auto hi = h.inverse();
    return {h * rep.gen_a * hi, h * rep.gen_b * hi};
}

SurfaceGroupRep modular_torus() { return {{Mat2{1, 1, 1, 2}}, {Mat2{1, -1, -1, 2}}}; }

std::array<Word, 4> quadrilateral_vertices() { return {Word("aBAb"), Word("baBA"), Word("AbaB"), Word("BAba")}; }

std::array<EdgeQuad, 3> triangulation_edges() {
    auto P = quadrilateral_vertices();
    Word aP1 = conjugate(Word("a"), P[1]);
    Word bP1 = conjugate(Word("b"), P[1]);
    return {EdgeQuad{aP1, P[0], P[3], P[1]},
            EdgeQuad{bP1, P[1], P[3], P[2]},
            EdgeQuad{P[2], P[1], P[0], P[3]}};
}

std::array<std::array<Word, 2>, 3> triangulation_edge_lifts() {
    auto P = quadrilateral_vertices();
    return {std::array<Word, 2>{P[0], P[1]}, {P[1], P[2]}, {P[1], P[3]}};
}

namespace {

ProjectivePoint vertex_point(const SurfaceGroupRep& rep, const Word& w) {
    return fixed_points(evaluate_word(rep, w)).attracting;
}

}  // namespace

SurfaceGroupRep shears_to_holonomy(const ShearCoordinates& s) {
    s.validate();
    // Quadrilateral P0 = e^z, P1 = 0, P2 = -1, P3 = inf with diagonal P1P3.
    ProjectivePoint P0 = ProjectivePoint::from_real(std::exp(s.z));
    ProjectivePoint P1 = ProjectivePoint::from_real(0);
    ProjectivePoint P2 = ProjectivePoint::from_real(-1);
    ProjectivePoint P3 = ProjectivePoint::infinity();
    // a: P3 -> P0, P2 -> P1, P1 -> q in (P1, P0); b: P0 -> P1, P3 -> P2, P1 -> r in (P2, P1).
    double ex = std::exp(s.x), ey = std::exp(s.y);
    ProjectivePoint q{std::exp(s.z) * ex, 1 + ex};
    ProjectivePoint r{-1, 1 + ey};
    auto a = map_triple({P3, P2, P1}, {P0, P1, q});
    auto b = map_triple({P0, P3, P1}, {P1, P2, r});
    return {a, b};
}

ShearCoordinates holonomy_to_shears(const SurfaceGroupRep& rep) {
    rep.validate();
    ShearCoordinates out;
    auto edges = triangulation_edges();
    for (int k = 0; k < 3; ++k) {
        const auto& e = edges[k];
        double beta = cross_ratio_real(vertex_point(rep, e.lp), vertex_point(rep, e.lm),
                                       vertex_point(rep, e.u), vertex_point(rep, e.u2));
        if (!(beta < 0) || std::isinf(beta)) {
            std::ostringstream os;
            os << "edge " << k << " cross-ratio " << beta << " outside (-inf, 0)";
            throw Error(ErrorKind::NonFuchsian, os.str());
        }
        out[k] = std::log(-beta);
    }
    return out;
}

SlopeBasis slope_basis(const Slope& c0) {
    Slope c = Slope::make(c0.p, c0.q);
    Word U, V, ae, be;
    long nu, nv;
    if (c.p >= 0) {
        U = "a"; V = "b"; ae = "a"; be = "b";
        nu = c.q; nv = c.p;
    } else {
        U = "B"; V = "a"; ae = "b"; be = "A";
        nu = -c.p; nv = c.q;
    }
    auto subst = [&](const Word& ia, const Word& ib) {
        ae = substitute(ae, ia, ib);
        be = substitute(be, ia, ib);
    };
    if (nu == 1 && nv == 0) return {U, V, ae, be};
    if (nu == 0 && nv == 1) {
        subst("B", "a");
        return {V, U.inverse(), ae, be};
    }
    long lu = 1, lv = 0, ru = 0, rv = 1;
    while (true) {
        long mu = lu + ru, mv = lv + rv;
        if (mu == nu && mv == nv) {
            subst("aB", "b");
            return {U * V, V, ae, be};
        }
        if (nv * mu < mv * nu) {
            ru = mu; rv = mv;
            V = U * V;
            subst("a", "Ab");
        } else {
            lu = mu; lv = mv;
            U = U * V;
            subst("aB", "b");
        }
    }
}

Word slope_to_word(const Slope& c) { return slope_basis(c).curve; }

SurfaceGroupRep twist_deformation(const SurfaceGroupRep& rep, const Slope& c, double t) {
    auto basis = slope_basis(c);
    auto C = evaluate_word(rep, basis.curve);
    auto D = evaluate_word(rep, basis.partner);
    auto D2 = D * axis_translation(C, t);
    auto a = MoebiusElement::from(evaluate_matrix(C.m, D2.m, basis.a_expr));
    auto b = MoebiusElement::from(evaluate_matrix(C.m, D2.m, basis.b_expr));
    return {a, b};
}

long intersection_number(const Slope& c1, const Slope& c2) { return std::labs(c1.p * c2.q - c2.p * c1.q); }

long edge_intersection(const Slope& c, int k) {
    switch (k) {
        case 0: return std::labs(c.q);
        case 1: return std::labs(c.p);
        default: return std::labs(c.q - c.p);
    }
}

double intersection_cos(const Geodesic& g1, const Geodesic& g2) {
    double beta = cross_ratio_real(g1.to, g1.from, g2.from, g2.to);
    if (!(beta < 0) || std::isinf(beta)) throw Error(ErrorKind::NoIntersection, "geodesic endpoints do not link");
    return (1 + beta) / (beta - 1);
}

double intersection_angle(const Geodesic& g1, const Geodesic& g2) {
    return std::acos(std::clamp(intersection_cos(g1, g2), -1.0, 1.0));
}

namespace {

using Visitor = std::function<bool(const std::string&, const Mat2&)>;

void walk(const Mat2 gens[4], const char letters[4], int radius, std::string& word, const Mat2& m, int last,
          const Visitor& visit) {
    if (!visit(word, m)) return;
    if (static_cast<int>(word.size()) == radius) return;
    for (int k = 0; k < 4; ++k) {
        if (last >= 0 && k == (last ^ 1)) continue;
        word.push_back(letters[k]);
        walk(gens, letters, radius, word, m * gens[k], k, visit);
        word.pop_back();
    }
}

void walk_all(const SurfaceGroupRep& rep, int radius, const Visitor& visit) {
    // Index pairs (0,1), (2,3) are mutually inverse.
    const Mat2 gens[4] = {rep.gen_a.m, rep.gen_a.m.adj(), rep.gen_b.m, rep.gen_b.m.adj()};
    const char letters[4] = {'a', 'A', 'b', 'B'};
    std::string word;
    walk(gens, letters, radius, word, Mat2::identity(), -1, visit);
}

}  // namespace

void for_each_word(const SurfaceGroupRep& rep, int radius,
                   const std::function<void(const std::string&, const Mat2&)>& visit) {
    walk_all(rep, radius, [&](const std::string& w, const Mat2& m) {
        visit(w, m);
        return true;
    });
}

std::vector<AxisCrossing> axis_crossings(const SurfaceGroupRep& rep, const Word& w, const Geodesic& g, int radius,
                                         const Word& stabilizer) {
    auto W = evaluate_word(rep, w);
    double L = translation_length(W);
    auto f = fixed_points(W);
    ProjectivePoint att = f.attracting, rp = f.repelling;
    if (att.x * rp.y - att.y * rp.x < 0) rp = {-rp.x, -rp.y};
    // normalizer sends the repelling end to 0 and the attracting end to inf
    Mat2 N = Mat2{att.x, rp.x, att.y, rp.y}.inverse();

    struct Key {
        double lp, lq;  // log(-p), log(q) after moving into one period
        double tol;
    };
    std::vector<AxisCrossing> out;
    std::vector<Key> keys;
    auto same = [&](const Key& u, const Key& v) {
        double tol = std::max(u.tol, v.tol);
        for (int k = -1; k <= 1; ++k)
            if (std::fabs(u.lp - v.lp - k * L) < tol && std::fabs(u.lq - v.lq - k * L) < tol) return true;
        return false;
    };
    // Words with a prefix w^{+-1} or a suffix stab^{+-1} repeat a class found at smaller
    // depth, with worse conditioning; skip them.
    Word wc = cyclic_reduce(w);
    const std::string pre[2] = {wc == w ? w.str() : std::string(), wc == w ? w.inverse().str() : std::string()};
    const std::string suf[2] = {stabilizer.str(), stabilizer.inverse().str()};
    auto starts = [](const std::string& s, const std::string& p) { return !p.empty() && s.compare(0, p.size(), p) == 0; };
    auto ends = [](const std::string& s, const std::string& p) {
        return !p.empty() && s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
    };
    walk_all(rep, radius, [&](const std::string& word, const Mat2& m) {
        if (starts(word, pre[0]) || starts(word, pre[1])) return false;
        if (ends(word, suf[0]) || ends(word, suf[1])) return true;
        ProjectivePoint s = N * (m * g.from), e = N * (m * g.to);
        if (std::fabs(s.y) < 1e-300 || std::fabs(e.y) < 1e-300) return true;
        double p = s.x / s.y, q = e.x / e.y;
        if (!(p * q < 0)) return true;
        // An endpoint close to an end of the axis loses relative precision, and so does a
        // long word; the tolerance tracks both.
        double fm = m.frobenius();
        double spread = std::max(std::fabs(p), 1 / std::fabs(p)) + std::max(std::fabs(q), 1 / std::fabs(q));
        double tol = std::max(1e-9, 1e-15 * fm * fm * spread);
        // an endpoint indistinguishable from an end of the axis (the axis itself, say)
        if (tol > 1e-2) return true;
        double pos = 0.5 * std::log(-p * q);
        double k = std::floor(pos / L);
        double lp = std::log(std::fabs(p)) - k * L, lq = std::log(std::fabs(q)) - k * L;
        // keep the key orientation-independent: order by sign of p
        Key key = p < 0 ? Key{lp, lq, tol} : Key{lq, lp, tol};
        double cs = (p + q) / (q - p);
        AxisCrossing c{pos - k * L, cs, p < 0 ? cs : -cs, static_cast<int>(word.size()), {m * g.from, m * g.to}};
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (same(keys[i], key)) {
                int depth = std::min(out[i].depth, c.depth);
                if (tol < keys[i].tol) {
                    keys[i] = key;
                    out[i] = c;
                }
                out[i].depth = depth;
                return true;
            }
        keys.push_back(key);
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end(), [](const AxisCrossing& x, const AxisCrossing& y) { return x.position < y.position; });
    return out;
}

std::vector<int> crossing_trajectory(const std::vector<AxisCrossing>& cs, int radius) {
    std::vector<int> counts(radius + 1, 0);
    for (const auto& c : cs)
        for (int r = c.depth; r <= radius; ++r) ++counts[r];
    return counts;
}

}  // namespace adslen
