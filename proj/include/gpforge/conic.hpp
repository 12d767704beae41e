#pragma once

// The auxiliary conic R^2 = -t^2(t^4+1) U^2 + (1+t^2+t^4) V^2 that carries the
// five-point stage of the construction: coefficient recovery from two points,
// the chord parametrization through the base point (1 : t : t^2), and its
// inverse.
//
// The parametrization here is the chord construction re-derived from scratch;
// it differs from the source's printed one, which does not satisfy the conic
// identity (see the conformance module, entry EQ2_PARAM).

#include <gpforge/rational.hpp>

#include <cassert>
#include <stdexcept>
#include <utility>

namespace gpforge {

struct ConicModel {
    Rational t;
    Rational A;  // t^2 (t^4 + 1)
    Rational B;  // 1 + t^2 + t^4

    explicit ConicModel(const Rational& ratio) : t(ratio) {
        if (t.is_zero() || t == Rational(1) || t == Rational(-1))
            throw std::domain_error("degenerate ratio");
        Rational t2 = t * t;
        Rational t4 = t2 * t2;
        A = t2 * (t4 + Rational(1));
        B = Rational(1) + t2 + t4;
        // base point (1, t, t^2): -A + B t^2 = t^4
        assert(-A + B * t2 == t4);
    }
};

struct ConicPoint {
    Rational U, V, R;
};

inline bool on_conic(const ConicModel& m, const ConicPoint& pt) {
    return -m.A * pt.U * pt.U + m.B * pt.V * pt.V == pt.R * pt.R;
}

// Projective equality: one triple is a nonzero rational multiple of the other.
inline bool proj_equal(const ConicPoint& a, const ConicPoint& b) {
    return a.U * b.V == a.V * b.U && a.U * b.R == a.R * b.U && a.V * b.R == a.R * b.V;
}

inline ConicPoint conic_base_point(const ConicModel& m) {
    return ConicPoint{Rational(1), m.t, m.t * m.t};
}

// Unique exact solution of U^2 = a(t^2+1) + b t, V^2 = a(t^6+1) + b t^3.
// Note the sign of the numerator of a: the printed form in the source has it
// reversed; this is the system's actual solution (re-substituted and checked).
inline std::pair<Rational, Rational> solve_ab(const Rational& t, const Rational& U,
                                              const Rational& V) {
    if (t.is_zero() || t == Rational(1) || t == Rational(-1))
        throw std::domain_error("degenerate ratio");
    Rational t2 = t * t;
    Rational U2 = U * U, V2 = V * V;
    Rational d2 = (t2 - Rational(1)) * (t2 - Rational(1));
    Rational a = (V2 - t2 * U2) / (d2 * (t2 + Rational(1)));
    Rational b = ((t2 * t2 - t2 + Rational(1)) * U2 - V2) / (t * d2);
    assert(a * (t2 + Rational(1)) + b * t == U2);
    assert(a * (pow(t, 6) + Rational(1)) + b * pow(t, 3) == V2);
    return {a, b};
}

// Second intersection of the conic with the line through the base point in
// direction (p, q, 0), cleared of denominators:
//   U = A p^2 + B q^2 - 2 B t p q
//   V = -t (A p^2 + B q^2) + 2 A p q
//   R = t^2 (B q^2 - A p^2)
inline ConicPoint conic_param(const ConicModel& m, const Rational& p, const Rational& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("direction (0,0) is not projective");
    Rational s = m.A * p * p + m.B * q * q;
    ConicPoint pt;
    pt.U = s - Rational(2) * m.B * m.t * p * q;
    pt.V = -m.t * s + Rational(2) * m.A * p * q;
    pt.R = m.t * m.t * (m.B * q * q - m.A * p * p);
    assert(on_conic(m, pt));
    return pt;
}

// Chord direction recovering (p : q) from a conic point; inverse of
// conic_param up to projective scale. Undefined at the base point itself.
inline std::pair<Rational, Rational> conic_param_inverse(const ConicModel& m,
                                                         const ConicPoint& pt) {
    if (!on_conic(m, pt)) throw std::invalid_argument("point not on conic");
    if (proj_equal(pt, conic_base_point(m)))
        throw std::domain_error("tangent direction undefined");
    Rational t2 = m.t * m.t;
    return {t2 * pt.U - pt.R, t2 * pt.V - m.t * pt.R};
}

// Scale factor kappa with conic_param(conic_param_inverse(pt)) = kappa * pt.
inline Rational conic_rescale_factor(const ConicModel& m, const ConicPoint& pt) {
    Rational t2 = m.t * m.t;
    return Rational(2) * t2 * t2 * (m.A * pt.U - m.B * m.t * pt.V + t2 * pt.R);
}

// Palindromic symmetry at conic level: (x, y) -> (1/x, y/x) preserves
// y^2 = a x^2 + b x + a.
inline std::pair<Rational, Rational> reflect_point(const Rational& x, const Rational& y) {
    if (x.is_zero()) throw std::domain_error("reflection undefined at x = 0");
    return {Rational(1) / x, y / x};
}

}  // namespace gpforge
