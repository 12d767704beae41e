#pragma once

// Short Weierstrass curves y^2 = x^3 + alpha x + beta over the rationals:
// chord-tangent group law, scalar multiplication, Mazur-bound non-torsion
// certification, and the birational bridge between a marked binary quartic
// S^2 = F(p, q) and its Jacobian.

#include <gpforge/quartic.hpp>
#include <gpforge/rational.hpp>

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpforge {

struct WeierstrassCurve {
    Rational alpha, beta;

    WeierstrassCurve(const Rational& a, const Rational& b) : alpha(a), beta(b) {
        if ((Rational(4) * pow(alpha, 3) + Rational(27) * beta * beta).is_zero())
            throw std::domain_error("singular curve");
    }

    std::optional<Rational> j() const {
        Rational den = Rational(4) * pow(alpha, 3) + Rational(27) * beta * beta;
        if (den.is_zero()) return std::nullopt;
        return Rational(1728) * Rational(4) * pow(alpha, 3) / den;
    }
};

struct ECPoint {
    bool infinity = true;
    Rational x, y;

    static ECPoint at_infinity() { return ECPoint{}; }
    static ECPoint affine(Rational px, Rational py) {
        return ECPoint{false, std::move(px), std::move(py)};
    }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
};

inline bool on_curve(const WeierstrassCurve& C, const ECPoint& P) {
    if (P.infinity) return true;
    return P.y * P.y == pow(P.x, 3) + C.alpha * P.x + C.beta;
}

inline ECPoint ec_neg(const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint::affine(P.x, -P.y);
}

inline ECPoint ec_add(const WeierstrassCurve& C, const ECPoint& P, const ECPoint& Q) {
    if (!on_curve(C, P) || !on_curve(C, Q)) throw std::domain_error("point not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return ECPoint::at_infinity();
        lambda = (Rational(3) * P.x * P.x + C.alpha) / (Rational(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = lambda * lambda - P.x - Q.x;
    Rational y3 = lambda * (P.x - x3) - P.y;
    ECPoint R = ECPoint::affine(std::move(x3), std::move(y3));
    assert(on_curve(C, R));
    return R;
}

inline ECPoint ec_mul(const WeierstrassCurve& C, long k, const ECPoint& P) {
    if (!on_curve(C, P)) throw std::domain_error("point not on curve");
    if (k < 0) return ec_neg(ec_mul(C, -k, P));
    ECPoint acc = ECPoint::at_infinity();
    ECPoint base = P;
    while (k > 0) {
        if (k & 1) acc = ec_add(C, acc, base);
        if (k >>= 1) base = ec_add(C, base, base);
    }
    return acc;
}

struct NontorsionCertificate {
    bool nontorsion = false;
    // the computed multiples k*P for k in {1..10, 12}
    std::vector<std::pair<int, ECPoint>> multiples;
};

// Mazur: rational torsion order lies in {1,...,10, 12}; if none of those
// multiples is the identity, P has infinite order.
inline NontorsionCertificate is_nontorsion(const WeierstrassCurve& C, const ECPoint& P) {
    if (P.infinity) throw std::invalid_argument("identity has order 1");
    NontorsionCertificate cert;
    cert.nontorsion = true;
    ECPoint acc = ECPoint::at_infinity();
    for (int k = 1; k <= 12; ++k) {
        acc = ec_add(C, acc, P);
        if (k == 11) continue;
        cert.multiples.emplace_back(k, acc);
        if (acc.infinity) cert.nontorsion = false;
    }
    return cert;
}

struct QuarticPoint {
    Rational p, q, S;  // S^2 = F(p, q)
};

class exceptional_multiple_error : public std::runtime_error {
public:
    explicit exceptional_multiple_error(long m)
        : std::runtime_error("exceptional multiple m=" + std::to_string(m) +
                             ", retry with next m"),
          multiple(m) {}
    long multiple;
};

// Birational bridge between the marked quartic S^2 = F(p,q) and its Jacobian.
//
// Construction: a unimodular chart M sends (0:1) to the marked (p0:q0), so the
// chart quartic g(u) = F(M(u,1)) has constant term S0^2. With Q = -S0 the
// classical maps
//   x = (2Q(v+Q) + g3 u)/u^2
//   y = (4Q^2(v+Q) + 2Q(g3 u + g2 u^2) - g3^2 u^2/(2Q))/u^3
// land on y^2 + (g3/Q) x y + 2Q g1 y = x^3 + (g2 - g3^2/4Q^2) x^2 - 4Q^2 g0 x
// + g0(g3^2 - 4Q^2 g2), completed to the short model y^2 = x^3 - (I/3) x -
// (J/27). The sign choice Q = -S0 makes the marked point itself (v = -Q) map
// to a finite point instead of the identity.
class QuarticBridge {
public:
    explicit QuarticBridge(const QuarticModel& model)
        : quartic_(model),
          curve_(make_curve(model)) {
        const auto& mp = *quartic_.marked_point;
        p0_ = mp.p;
        q0_ = mp.q;
        // chart M(P,Q) = (aM P + p0 Q, bM P + q0 Q), det = aM q0 - bM p0 = 1
        if (!p0_.is_zero()) {
            aM_ = Rational(0);
            bM_ = Rational(-1) / p0_;
        } else {
            aM_ = Rational(1) / q0_;
            bM_ = Rational(0);
        }
        chart_coeffs();
        if (g_[4] != mp.S * mp.S) throw std::logic_error("chart constant term is not S0^2");
        Q_ = -mp.S;
        const Rational &c = g_[2], &d = g_[3];
        a1_ = d / Q_;
        a3_ = Rational(2) * Q_ * g_[1];
        Rational a2 = c - d * d / (Rational(4) * Q_ * Q_);
        b2_ = a1_ * a1_ + Rational(4) * a2;
        // image of (0, -Q): the marked point's side of the double cover
        special_x_ = d * d / (Rational(4) * Q_ * Q_) - c;
        special_y_ = d * c / Q_ - pow(d, 3) / (Rational(4) * pow(Q_, 3)) -
                     Rational(2) * Q_ * g_[1];
        // mandatory postconditions: j-match and marked round trip
        auto jq = quartic_invariants(quartic_.F).j;
        auto jc = curve_.j();
        if (!jq || !jc || *jq != *jc) throw std::logic_error("bridge j-invariant mismatch");
        ECPoint img = forward(QuarticPoint{p0_, q0_, mp.S});
        QuarticPoint back = inverse(img);
        if (img.infinity || back.p != p0_ || back.q != q0_ || back.S != mp.S)
            throw std::logic_error("bridge marked-point round trip failed");
    }

    const WeierstrassCurve& curve() const { return curve_; }
    const QuarticModel& quartic() const { return quartic_; }

    ECPoint forward(const QuarticPoint& pt) const {
        if (pt.S * pt.S != form_eval(quartic_.F, pt.p, pt.q))
            throw std::domain_error("point not on quartic");
        // chart coordinates: (P,Q) = M^{-1}(p,q); u = P/Q, v = S/Q^2
        Rational Pc = q0_ * pt.p - p0_ * pt.q;
        Rational Qc = -bM_ * pt.p + aM_ * pt.q;
        if (Qc.is_zero()) throw std::domain_error("chart pole: point at chart infinity");
        Rational u = Pc / Qc;
        Rational v = pt.S / (Qc * Qc);
        return forward_uv(u, v);
    }

    QuarticPoint inverse(const ECPoint& P) const {
        if (P.infinity)  // preimage is the negated marked point
            return chart_point(Rational(0), Q_);
        if (!on_curve(curve_, P)) throw std::domain_error("point not on curve");
        const Rational &c = g_[2], &d = g_[3];
        Rational xm = P.x - b2_ / Rational(12);
        Rational ym = P.y - (a1_ * xm + a3_) / Rational(2);
        if (ym.is_zero()) {
            if (Rational(4) * Q_ * Q_ * (xm + c) == d * d) {
                // the 0/0 point -P2 (same x as the marked image); resolve the
                // limit along the curve branch: u = -2Q y2 / cubic'(x2)
                Rational a2 = c - d * d / (Rational(4) * Q_ * Q_);
                Rational a4 = Rational(-4) * Q_ * Q_ * g_[0];
                Rational slope = Rational(3) * special_x_ * special_x_ +
                                 Rational(2) * a2 * special_x_ + a4;
                if (slope.is_zero())
                    throw std::domain_error("inverse undefined: ramified marked image");
                Rational u = Rational(-2) * Q_ * special_y_ / slope;
                Rational v = (special_x_ * u * u - d * u) / (Rational(2) * Q_) - Q_;
                return chart_point(u, v);
            }
            // u blows up: the preimage lies at chart infinity, which is the
            // honest weighted-projective point (aM : bM : sqrt(g0)) when the
            // chart leading coefficient is a square
            auto s = is_square(g_[0]);
            if (s) return QuarticPoint{aM_, bM_, *s};
            throw std::domain_error("inverse undefined: point at infinity of the quartic");
        }
        Rational u = (Rational(4) * Q_ * Q_ * (xm + c) - d * d) / (Rational(2) * Q_ * ym);
        Rational v = (xm * u * u - d * u) / (Rational(2) * Q_) - Q_;
        return chart_point(u, v);
    }

private:
    static WeierstrassCurve make_curve(const QuarticModel& model) {
        if (!model.marked_point) throw std::domain_error("degenerate marked point");
        if (model.marked_point->S.is_zero()) throw std::domain_error("degenerate marked point");
        auto inv = quartic_invariants(model.F);
        if (!inv.j) throw std::domain_error("degenerate quartic");
        return WeierstrassCurve(-inv.I / Rational(3), -inv.J / Rational(27));
    }

    void chart_coeffs() {
        // g(u) = F(aM u + p0, bM u + q0), descending powers of u
        const BinaryForm& F = quartic_.F;
        for (auto& c : g_) c = Rational(0);
        for (int i = 0; i <= 4; ++i) {
            // F.coeff[i] * (aM u + p0)^(4-i) * (bM u + q0)^i
            std::vector<Rational> xs = binom_pow(aM_, p0_, 4 - i);
            std::vector<Rational> ys = binom_pow(bM_, q0_, i);
            for (size_t k = 0; k < xs.size(); ++k)
                for (size_t l = 0; l < ys.size(); ++l)
                    g_[k + l] += F.coefficients[static_cast<size_t>(i)] * xs[k] * ys[l];
        }
    }

    // coefficients of (s u + t)^n, descending powers of u
    static std::vector<Rational> binom_pow(const Rational& s, const Rational& t, int n) {
        std::vector<Rational> out{Rational(1)};
        for (int k = 0; k < n; ++k) {
            std::vector<Rational> next(out.size() + 1);
            for (size_t i = 0; i < out.size(); ++i) {
                next[i] += out[i] * s;
                next[i + 1] += out[i] * t;
            }
            out = std::move(next);
        }
        return out;
    }

    ECPoint forward_uv(const Rational& u, const Rational& v) const {
        const Rational &c = g_[2], &d = g_[3];
        Rational xm, ym;
        if (u.is_zero()) {
            if (v == Q_) return ECPoint::at_infinity();
            assert(v == -Q_);
            xm = special_x_;
            ym = special_y_;
        } else {
            Rational u2 = u * u;
            xm = (Rational(2) * Q_ * (v + Q_) + d * u) / u2;
            ym = (Rational(4) * Q_ * Q_ * (v + Q_) + Rational(2) * Q_ * (d * u + c * u2) -
                  d * d * u2 / (Rational(2) * Q_)) /
                 (u2 * u);
        }
        ECPoint P = ECPoint::affine(xm + b2_ / Rational(12), ym + (a1_ * xm + a3_) / Rational(2));
        assert(on_curve(curve_, P));
        return P;
    }

    // lifts a chart-affine (u, v) back to original (p, q, S) coordinates
    QuarticPoint chart_point(const Rational& u, const Rational& v) const {
        QuarticPoint pt{aM_ * u + p0_, bM_ * u + q0_, v};
        assert(pt.S * pt.S == form_eval(quartic_.F, pt.p, pt.q));
        return pt;
    }

    QuarticModel quartic_;
    WeierstrassCurve curve_;
    Rational p0_, q0_, aM_, bM_;
    Rational g_[5];  // chart quartic, descending powers of u
    Rational Q_;     // = -S0
    Rational a1_, a3_, b2_;
    Rational special_x_, special_y_;  // image of (0, -Q), a1-model coords
};

inline QuarticBridge quartic_to_weierstrass(const QuarticModel& model) {
    return QuarticBridge(model);
}

// m * forward(marked point), pulled back through the inverse map.
inline QuarticPoint bridge_pull_multiple(const QuarticBridge& bridge, long m) {
    if (m == 0) throw std::invalid_argument("multiple must be nonzero");
    const auto& mp = *bridge.quartic().marked_point;
    ECPoint P = bridge.forward(QuarticPoint{mp.p, mp.q, mp.S});
    ECPoint mP = ec_mul(bridge.curve(), m, P);
    try {
        return bridge.inverse(mP);
    } catch (const std::domain_error&) {
        throw exceptional_multiple_error(m);
    }
}

}  // namespace gpforge
