#pragma once

// The 7th- and 9th-point square conditions as exact binary quartics in (p, q),
// derived by composing the conic parametrization forms into the coefficient
// solution — never transcribed from the source. Also the classical binary
// quartic invariants I, J and the j-invariant.

#include <gpforge/binary_form.hpp>
#include <gpforge/conic.hpp>
#include <gpforge/rational.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace gpforge {

struct QuarticModel {
    struct MarkedPoint {
        Rational p, q, S;  // S^2 = F(p, q)
    };

    Rational t;
    BinaryForm F;                        // degree 4, denominators cleared
    Rational clearing;                   // F = clearing^2 * (raw condition)
    std::optional<MarkedPoint> marked_point;
};

// U(p,q), V(p,q): the quadratic forms of the chord parametrization.
inline std::pair<BinaryForm, BinaryForm> conic_param_forms(const ConicModel& m) {
    BinaryForm U(2, {m.A, Rational(-2) * m.B * m.t, m.B});
    BinaryForm V(2, {-m.t * m.A, Rational(2) * m.A, -m.t * m.B});
    return {U, V};
}

// a(p,q), b(p,q): solve_ab closed forms with U, V substituted, via quadratic
// form composition.
inline std::pair<BinaryForm, BinaryForm> quartic_ab_forms(const Rational& t) {
    ConicModel m(t);
    auto [U, V] = conic_param_forms(m);
    Rational t2 = t * t;
    Rational d2 = (t2 - Rational(1)) * (t2 - Rational(1));
    Rational Da = d2 * (t2 + Rational(1));
    Rational Db = t * d2;
    // a = (V^2 - t^2 U^2)/Da
    BinaryForm a_form = form_compose_quadratic(-t2 / Da, Rational(0), Rational(1) / Da, U, V);
    // b = ((t^4 - t^2 + 1) U^2 - V^2)/Db
    BinaryForm b_form = form_compose_quadratic((t2 * t2 - t2 + Rational(1)) / Db, Rational(0),
                                               Rational(-1) / Db, U, V);
    return {a_form, b_form};
}

namespace detail {

// Clears denominators by the square of their lcm, so squareness of the stored
// form is equivalent to squareness of the raw condition.
inline QuarticModel make_condition(const Rational& t, const BinaryForm& raw) {
    mpz_class l(1);
    for (const auto& c : raw.coefficients)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    Rational clearing{l};
    QuarticModel model;
    model.t = t;
    model.clearing = clearing;
    model.F = form_scale(raw, clearing * clearing);
    return model;
}

}  // namespace detail

// F(p,q) = a(p,q) (t^14 + 1) + b(p,q) t^7, cleared. A rational square value
// F(p,q) = S^2 certifies the point (t^7, S/clearing-adjusted) on the curve
// with coefficients solve_ab(t, U(p,q), V(p,q)).
inline QuarticModel seventh_condition(const Rational& t) {
    auto [a_form, b_form] = quartic_ab_forms(t);
    BinaryForm raw = form_add(form_scale(a_form, pow(t, 14) + Rational(1)),
                              form_scale(b_form, pow(t, 7)));
    return detail::make_condition(t, raw);
}

// Same at x = t^9: G(p,q) = a(p,q) (t^18 + 1) + b(p,q) t^9.
inline QuarticModel ninth_condition(const Rational& t) {
    auto [a_form, b_form] = quartic_ab_forms(t);
    BinaryForm raw = form_add(form_scale(a_form, pow(t, 18) + Rational(1)),
                              form_scale(b_form, pow(t, 9)));
    return detail::make_condition(t, raw);
}

// Marks (p0, q0) on the model; F(p0, q0) must be a rational square.
inline void attach_marked_point(QuarticModel& model, const Rational& p0, const Rational& q0) {
    auto root = is_square(form_eval(model.F, p0, q0));
    if (!root) throw std::domain_error("marked point value is not a square");
    model.marked_point = QuarticModel::MarkedPoint{p0, q0, *root};
}

struct QuarticInvariants {
    Rational I, J;
    std::optional<Rational> j;  // absent when 4I^3 = J^2 (degenerate quartic)
};

// Classical invariants of F = a p^4 + b p^3 q + c p^2 q^2 + d p q^3 + e q^4:
//   I = 12ae - 3bd + c^2
//   J = 72ace - 27ad^2 - 27b^2 e + 9bcd - 2c^3
//   j = 6912 I^3 / (4I^3 - J^2)
// The j normalization matches the Jacobian convention 1728·4α³/(4α³+27β²).
inline QuarticInvariants quartic_invariants(const BinaryForm& F) {
    if (F.degree != 4) throw std::invalid_argument("invariants need a degree-4 form");
    const Rational &a = F.coefficients[0], &b = F.coefficients[1], &c = F.coefficients[2],
                   &d = F.coefficients[3], &e = F.coefficients[4];
    QuarticInvariants inv;
    inv.I = Rational(12) * a * e - Rational(3) * b * d + c * c;
    inv.J = Rational(72) * a * c * e - Rational(27) * a * d * d - Rational(27) * b * b * e +
            Rational(9) * b * c * d - Rational(2) * c * c * c;
    Rational disc = Rational(4) * pow(inv.I, 3) - inv.J * inv.J;
    if (!disc.is_zero()) inv.j = Rational(6912) * pow(inv.I, 3) / disc;
    return inv;
}

}  // namespace gpforge
