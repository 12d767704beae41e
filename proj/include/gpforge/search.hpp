#pragma once

// Brute-force companions to the constructive pipeline: GP detection on given
// curves, the even-powers reduction curve behind the finiteness theorem, and
// the bounded-height simultaneous-square search for length-10 progressions.

#include <gpforge/family.hpp>
#include <gpforge/quartic.hpp>
#include <gpforge/rational.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gpforge {

// y^2 = f(x), coefficients descending degree; f nonzero, deg >= 1.
struct GeneralCurve {
    std::vector<Rational> coefficients;

    explicit GeneralCurve(std::vector<Rational> coeffs) : coefficients(std::move(coeffs)) {
        bool nonzero = false;
        for (const auto& c : coefficients) nonzero |= !c.is_zero();
        if (coefficients.empty() || !nonzero)
            throw std::invalid_argument("curve polynomial must be nonzero");
    }

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (const auto& c : coefficients) acc = acc * x + c;
        return acc;
    }
};

inline GeneralCurve trinomial_as_general(const TrinomialCurve& c) {
    std::vector<Rational> coeffs(static_cast<size_t>(2 * c.n) + 1);
    coeffs[0] = c.a;
    coeffs[static_cast<size_t>(c.n)] = c.b;
    coeffs[static_cast<size_t>(2 * c.n)] = c.a;
    return GeneralCurve(std::move(coeffs));
}

struct HeightBound {
    unsigned H = 1;
    explicit HeightBound(unsigned h) : H(h) {
        if (h < 1) throw std::invalid_argument("height bound must be >= 1");
    }
};

// height = max(|num|, den) in lowest terms
inline mpz_class rational_height(const Rational& r) {
    mpz_class n = ::abs(r.num());
    mpz_class d = r.den();
    return n > d ? n : d;
}

// All rationals of height <= H (zero excluded), in pinned order:
// height ascending, then value ascending.
inline std::vector<Rational> enumerate_rationals(unsigned H) {
    std::vector<Rational> out;
    for (long den = 1; den <= static_cast<long>(H); ++den)
        for (long num = -static_cast<long>(H); num <= static_cast<long>(H); ++num) {
            if (num == 0) continue;
            mpz_class g;
            mpz_class mn(num), md(den);
            mpz_gcd(g.get_mpz_t(), mn.get_mpz_t(), md.get_mpz_t());
            if (g != 1) continue;
            out.emplace_back(num, den);
        }
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        mpz_class ha = rational_height(a), hb = rational_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

struct GPHit {
    long i;
    Rational x, y;
};

// Tests x_i = p * tau^i for i in [i_min, i_max]; returns the indices where
// f(x_i) is a rational square, with the non-negative root.
inline std::vector<GPHit> gp_verify(const GeneralCurve& C, const Rational& p,
                                    const Rational& tau, long i_min, long i_max) {
    if (p.is_zero()) throw std::invalid_argument("base must be nonzero");
    if (tau.is_zero() || tau == Rational(1) || tau == Rational(-1))
        throw std::invalid_argument("degenerate ratio");
    std::vector<GPHit> hits;
    for (long i = i_min; i <= i_max; ++i) {
        Rational x = p * pow(tau, i);
        auto y = is_square(C.eval(x));
        if (y) hits.push_back(GPHit{i, x, *y});
    }
    return hits;
}

namespace detail {

// Runs are extended at most this far in each direction; finiteness is a
// theorem, the cap just bounds the work. Hitting the cap is flagged.
inline constexpr long kRunCap = 40;

}  // namespace detail

// Bounded-height GP search: enumerate seeds (p, tau) with height <= H and
// |tau| > 1, extend runs greedily in both directions, deduplicate under
// reindexing, and return maximal runs of length >= min_len. Every returned
// sequence is re-verified through gp_verify.
inline std::vector<GPSequence> gp_search(const GeneralCurve& C, const HeightBound& bound,
                                         int min_len, bool* cap_hit = nullptr) {
    if (min_len < 3) throw std::invalid_argument("min_len must be >= 3");
    std::vector<Rational> values = enumerate_rationals(bound.H);
    std::vector<Rational> ratios;
    for (const auto& r : values)
        if (abs(r) > Rational(1)) ratios.push_back(r);

    // canonical key: starting x, ratio (|ratio| > 1), length
    std::map<std::string, GPSequence> found;
    if (cap_hit) *cap_hit = false;
    for (const auto& p : values) {
        if (!is_square(C.eval(p))) continue;
        for (const auto& tau : ratios) {
            long lo = 0, hi = 0;
            while (hi < detail::kRunCap && is_square(C.eval(p * pow(tau, hi + 1)))) ++hi;
            while (lo > -detail::kRunCap && is_square(C.eval(p * pow(tau, lo - 1)))) --lo;
            // flag truncated runs for manual review
            if (cap_hit &&
                ((hi == detail::kRunCap && is_square(C.eval(p * pow(tau, hi + 1)))) ||
                 (lo == -detail::kRunCap && is_square(C.eval(p * pow(tau, lo - 1))))))
                *cap_hit = true;
            long len = hi - lo + 1;
            if (len < min_len) continue;
            Rational start = p * pow(tau, lo);
            std::string key = start.str() + "|" + tau.str() + "|" + std::to_string(len);
            if (found.count(key)) continue;
            GPSequence seq;
            seq.base = start;
            seq.ratio = tau;
            for (long i = 0; i < len; ++i) {
                Rational x = start * pow(tau, i);
                seq.points.push_back(CurvePoint{x, *is_square(C.eval(x))});
            }
            if (gp_verify(C, start, tau, 0, len - 1).size() != static_cast<size_t>(len))
                throw std::logic_error("search result failed re-verification");
            found.emplace(std::move(key), std::move(seq));
        }
    }
    std::vector<GPSequence> out;
    for (auto& [key, seq] : found) out.push_back(std::move(seq));
    return out;
}

// Theorem-1 reduction: from a degree-4 curve and a base p, the curve
// C': y^2 = a0 p^4 x^8 + a1 p^3 x^6 + a2 p^2 x^4 + a3 p x^2 + a4,
// so that (x0, y0) on C' iff (p x0^2, y0) on C.
inline GeneralCurve reduction_curve(const GeneralCurve& C, const Rational& p) {
    if (C.coefficients.size() != 5)
        throw std::invalid_argument("reduction needs a degree-4 curve");
    std::vector<Rational> out(9);
    for (int i = 0; i < 5; ++i)
        out[static_cast<size_t>(2 * i)] =
            C.coefficients[static_cast<size_t>(i)] * pow(p, 4 - i);
    return GeneralCurve(std::move(out));
}

struct Length10Hit {
    Rational p, q;    // projective, gcd(|p|, q) = 1, q >= 0
    Rational S7, S9;  // the two square roots
    bool degenerate;  // member curve has a = 0 or b^2 = 4a^2
};

// Enumerates (p : q) of height <= H and returns the classes where both the
// 7th- and 9th-point conditions are rational squares. Hits whose member curve
// is singular are flagged; only non-degenerate hits extend to honest 10-term
// progressions.
inline std::vector<Length10Hit> length10_search(const Rational& t, const HeightBound& bound) {
    QuarticModel F7 = seventh_condition(t);
    QuarticModel F9 = ninth_condition(t);
    ConicModel conic(t);
    long H = static_cast<long>(bound.H);

    auto scan_rows = [&](long q_begin, long q_end) {
        std::vector<Length10Hit> hits;
        for (long qi = q_begin; qi < q_end; ++qi) {
            for (long pi = (qi == 0 ? 1 : -H); pi <= (qi == 0 ? 1 : H); ++pi) {
                if (pi == 0 && qi == 0) continue;
                if (qi > 0) {
                    mpz_class g, mp(pi), mq(qi);
                    mpz_gcd(g.get_mpz_t(), mp.get_mpz_t(), mq.get_mpz_t());
                    if (g != 1) continue;
                }
                Rational p(pi), q(qi);
                auto s7 = is_square(form_eval(F7.F, p, q));
                if (!s7) continue;
                auto s9 = is_square(form_eval(F9.F, p, q));
                if (!s9) continue;
                ConicPoint pt = conic_param(conic, p, q);
                auto [a, b] = solve_ab(t, pt.U, pt.V);
                bool degenerate = a.is_zero() || b * b == Rational(4) * a * a;
                hits.push_back(Length10Hit{p, q, *s7, *s9, degenerate});
            }
        }
        return hits;
    };

    // partition the q-rows across workers; merging in row order keeps the
    // output independent of scheduling
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    long rows = H + 1;
    std::vector<std::future<std::vector<Length10Hit>>> futures;
    long chunk = std::max<long>(1, (rows + static_cast<long>(workers) - 1) /
                                       static_cast<long>(workers));
    for (long begin = 0; begin < rows; begin += chunk)
        futures.push_back(std::async(std::launch::async, scan_rows, begin,
                                     std::min(begin + chunk, rows)));
    std::vector<Length10Hit> hits;
    for (auto& f : futures) {
        auto part = f.get();
        hits.insert(hits.end(), part.begin(), part.end());
    }
    return hits;
}

}  // namespace gpforge
