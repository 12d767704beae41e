#pragma once

// End-to-end generation of hyperelliptic curves y^2 = a x^(2n) + b x^n + a
// carrying 8-term geometric progressions at x = T^{±1,±3,±5,±7}: the direct
// closed-form family and the pipeline that walks multiples of the Jacobian
// point to produce new members.

#include <gpforge/conic.hpp>
#include <gpforge/elliptic.hpp>
#include <gpforge/quartic.hpp>
#include <gpforge/rational.hpp>

#include <array>
#include <stdexcept>
#include <vector>

namespace gpforge {

struct TrinomialCurve {
    int n = 1;          // y^2 = a x^(2n) + b x^n + a
    Rational a, b;

    Rational rhs(const Rational& x) const {
        Rational xn = pow(x, n);
        return a * xn * xn + b * xn + a;
    }
};

struct CurvePoint {
    Rational x, y;
};

struct GPSequence {
    Rational base;    // p: x_i = p * ratio^i
    Rational ratio;   // tau
    std::vector<CurvePoint> points;
};

struct FamilyRecord {
    Rational T;
    int n = 1;
    long m = 1;
    TrinomialCurve curve;
    GPSequence sequence;
    struct Provenance {
        Rational t;           // = T^n, the conic-level ratio
        Rational U, V, R, S;  // conic y-values at w = t, t^3, t^5, t^7 (signed)
        Rational p, q;        // chord coordinates of this member
    } provenance;
};

class degenerate_member_error : public std::runtime_error {
public:
    explicit degenerate_member_error(const std::string& what) : std::runtime_error(what) {}
};

// true iff a != 0 and b^2 != 4a^2; cross-checked against gcd(f, f') being
// constant for f = a x^(2n) + b x^n + a (the two routes must agree).
inline bool smoothness_check(const TrinomialCurve& c) {
    bool algebraic = !c.a.is_zero() && c.b * c.b != Rational(4) * c.a * c.a;
    std::vector<Rational> coeffs(static_cast<size_t>(2 * c.n) + 1);
    coeffs[0] = c.a;
    coeffs[static_cast<size_t>(c.n)] = c.b;
    coeffs[static_cast<size_t>(2 * c.n)] = c.a;
    UniPoly f(std::move(coeffs));
    bool gcd_route;
    if (f.is_zero()) {
        gcd_route = false;
    } else {
        UniPoly g = poly_gcd(f, poly_derivative(f));
        gcd_route = g.degree() == 0;
    }
    if (algebraic != gcd_route) throw std::logic_error("smoothness routes disagree");
    return algebraic;
}

namespace detail {

inline void require_ratio(const Rational& T) {
    if (T.is_zero() || T == Rational(1) || T == Rational(-1))
        throw std::domain_error("degenerate ratio");
}

}  // namespace detail

// a(t), b(t) of the closed-form family, t = T^n.
inline std::pair<Rational, Rational> closed_form_ab(const Rational& t) {
    detail::require_ratio(t);
    Rational t2 = t * t, t4 = pow(t, 4), t8 = pow(t, 8);
    Rational w = Rational(-1) + t2 - t4 + pow(t, 6) - t8 + pow(t, 10);
    Rational a = t4 * (Rational(1) + t2) * (Rational(1) + t8) /
                 (Rational(2) * (Rational(1) + t4) * w * w);
    static constexpr long kBNum[] = {1, -2, -1, -12, -3, -14, -13, -40, -13, -14, -3, -12, -1, -2, 1};
    Rational num(0);
    for (int k = 0; k <= 14; ++k) num += Rational(kBNum[k]) * pow(t, 2 * k);
    Rational den = Rational(16) * pow(t, 3) * pow(t2 - Rational(1), 2) *
                   pow(Rational(1) + t4, 2) * pow(Rational(1) - t2 + t4, 2) *
                   pow(Rational(1) + t2 + t4, 2);
    return {a, num / den};
}

// The four closed-form y-values at w = t, t^3, t^5, t^7 (conic level), with
// the signs the formulas produce; callers wanting curve points take |y|.
inline std::array<Rational, 4> closed_form_y(const Rational& t) {
    detail::require_ratio(t);
    Rational t2 = t * t, t4 = pow(t, 4), t6 = pow(t, 6), t8 = pow(t, 8);
    Rational t10 = pow(t, 10), t12 = pow(t, 12);
    Rational D = Rational(4) * (Rational(1) + Rational(2) * t4 + Rational(2) * t8 + t12);
    std::array<Rational, 4> y;
    y[0] = (Rational(-1) + t4 + Rational(4) * t6 + t8 - t12) / (t * D);
    y[1] = (Rational(1) + Rational(3) * t4 + Rational(4) * t6 + Rational(3) * t8 + t12) / D;
    y[2] = t * (Rational(1) + Rational(4) * t2 + Rational(3) * t4 + Rational(4) * t6 +
                Rational(3) * t8 + Rational(4) * t10 + t12) / D;
    y[3] = t2 * (Rational(3) + Rational(4) * t2 + Rational(5) * t4 + Rational(4) * t6 +
                 Rational(5) * t8 + Rational(4) * t10 + Rational(3) * t12) / D;
    return y;
}

namespace detail {

// Assembles the 8 points at x = T^{±1,±3,±5,±7} from the conic y-values at
// w = t^{1,3,5,7}; negative exponents via the palindromic reflection, all
// y taken as the non-negative root.
inline FamilyRecord assemble_record(const Rational& T, int n, long m, const Rational& a,
                                    const Rational& b,
                                    const std::array<Rational, 4>& conic_y,
                                    const FamilyRecord::Provenance& prov) {
    if (a.is_zero() || b * b == Rational(4) * a * a)
        throw degenerate_member_error("degenerate member: singular trinomial curve");
    FamilyRecord rec;
    rec.T = T;
    rec.n = n;
    rec.m = m;
    rec.curve = TrinomialCurve{n, a, b};
    rec.provenance = prov;
    Rational t = prov.t;
    std::vector<CurvePoint> pts(8);
    for (int k = 0; k < 4; ++k) {
        int i = 2 * k + 1;  // exponent 1, 3, 5, 7
        Rational y = abs(conic_y[static_cast<size_t>(k)]);
        pts[static_cast<size_t>(4 + k)] = CurvePoint{pow(T, i), y};
        pts[static_cast<size_t>(3 - k)] = CurvePoint{pow(T, -i), abs(y / pow(t, i))};
    }
    for (const auto& pt : pts)
        if (pt.y * pt.y != rec.curve.rhs(pt.x))
            throw std::runtime_error("paper formula violation: point off curve");
    rec.sequence.base = pow(T, -7);
    rec.sequence.ratio = T * T;
    rec.sequence.points = std::move(pts);
    return rec;
}

}  // namespace detail

// Direct evaluation of the closed-form family; the golden anchor every
// pipeline run is compared against.
inline FamilyRecord closed_form_family(const Rational& T, int n) {
    detail::require_ratio(T);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rational t = pow(T, n);
    detail::require_ratio(t);
    auto [a, b] = closed_form_ab(t);
    auto y = closed_form_y(t);
    ConicModel conic(t);
    ConicPoint base{y[0], y[1], y[2]};
    auto [p0, q0] = conic_param_inverse(conic, base);
    FamilyRecord::Provenance prov{t, y[0], y[1], y[2], y[3], p0, q0};
    return detail::assemble_record(T, n, 1, a, b, y, prov);
}

struct BaseImport {
    Rational U0, V0, R0, S0;  // closed-form conic data at w = t, t^3, t^5, t^7
    Rational p0, q0;          // chord coordinates of the base solution
    Rational lambda0;         // conic_param(p0, q0) = lambda0 * (U0, V0, R0)
};

inline BaseImport base_import(const ConicModel& conic) {
    auto y = closed_form_y(conic.t);
    BaseImport imp;
    imp.U0 = y[0];
    imp.V0 = y[1];
    imp.R0 = y[2];
    imp.S0 = y[3];
    ConicPoint base{imp.U0, imp.V0, imp.R0};
    auto [p0, q0] = conic_param_inverse(conic, base);
    imp.p0 = p0;
    imp.q0 = q0;
    imp.lambda0 = conic_rescale_factor(conic, base);
    ConicPoint round = conic_param(conic, p0, q0);
    if (round.U != imp.lambda0 * imp.U0 || round.V != imp.lambda0 * imp.V0 ||
        round.R != imp.lambda0 * imp.R0)
        throw std::logic_error("base import scale factor mismatch");
    return imp;
}

inline long default_multiple_cap() { return 5; }

// The full Corollary pipeline: base import, 7th-point quartic with marked
// point, Jacobian walk to the m-th multiple, and reassembly of the member
// curve with its verified 8-term progression. m = 1 reproduces
// closed_form_family(T, n) exactly.
inline FamilyRecord gp8_family(const Rational& T, int n, long m) {
    detail::require_ratio(T);
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (m == 0) throw std::invalid_argument("multiple must be nonzero");
    Rational t = pow(T, n);
    detail::require_ratio(t);
    ConicModel conic(t);
    BaseImport imp = base_import(conic);

    QuarticModel cond = seventh_condition(t);
    attach_marked_point(cond, imp.p0, imp.q0);
    QuarticBridge bridge(cond);
    QuarticPoint qpt = bridge_pull_multiple(bridge, m);

    ConicPoint raw = conic_param(conic, qpt.p, qpt.q);
    Rational Un = raw.U / imp.lambda0;
    Rational Vn = raw.V / imp.lambda0;
    Rational Rn = raw.R / imp.lambda0;
    auto [a, b] = solve_ab(t, Un, Vn);
    Rational Sn = qpt.S / (cond.clearing * imp.lambda0);
    if (Sn * Sn != a * (pow(t, 14) + Rational(1)) + b * pow(t, 7))
        throw std::logic_error("seventh-point square does not match the member curve");

    FamilyRecord::Provenance prov{t, Un, Vn, Rn, Sn, qpt.p, qpt.q};
    return detail::assemble_record(T, n, m, a, b, {Un, Vn, Rn, Sn}, prov);
}

// Re-checks every invariant of a generated record; used by tests and the CLI
// before anything is emitted.
inline bool verify_record(const FamilyRecord& rec) {
    if (rec.sequence.points.size() != 8) return false;
    if (!smoothness_check(rec.curve)) return false;
    for (int k = 0; k < 8; ++k) {
        const auto& pt = rec.sequence.points[static_cast<size_t>(k)];
        if (pt.x != rec.sequence.base * pow(rec.sequence.ratio, k)) return false;
        if (pt.y * pt.y != rec.curve.rhs(pt.x)) return false;
    }
    // palindromic symmetry: y(T^-i) = y(T^i) / T^(i n) up to sign
    Rational t = pow(rec.T, rec.n);
    for (int k = 0; k < 4; ++k) {
        const auto& neg = rec.sequence.points[static_cast<size_t>(3 - k)];
        const auto& pos = rec.sequence.points[static_cast<size_t>(4 + k)];
        if (abs(neg.y) != abs(pos.y / pow(t, 2 * k + 1))) return false;
    }
    return true;
}

}  // namespace gpforge
