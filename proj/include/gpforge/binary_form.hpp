#pragma once

// Homogeneous binary forms in (p, q) with Rational coefficients, plus a small
// univariate polynomial type used for gcd-based squarefreeness checks.

#include <gpforge/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gpforge {

// coefficients[i] is the coefficient of p^(degree-i) * q^i.
struct BinaryForm {
    int degree = 0;
    std::vector<Rational> coefficients;

    BinaryForm() : coefficients(1) {}
    BinaryForm(int deg, std::vector<Rational> coeffs)
        : degree(deg), coefficients(std::move(coeffs)) {
        if (degree < 0 || coefficients.size() != static_cast<size_t>(degree) + 1)
            throw std::invalid_argument("coefficient count must be degree+1");
    }
};

inline Rational form_eval(const BinaryForm& F, const Rational& p, const Rational& q) {
    // Horner in p with q-powers accumulated alongside.
    Rational acc = F.coefficients[0];
    Rational qpow(1);
    for (int i = 1; i <= F.degree; ++i) {
        qpow *= q;
        acc = acc * p + F.coefficients[static_cast<size_t>(i)] * qpow;
    }
    return acc;
}

inline BinaryForm form_add(const BinaryForm& F, const BinaryForm& G) {
    if (F.degree != G.degree) throw std::invalid_argument("degree mismatch");
    std::vector<Rational> c(F.coefficients);
    for (size_t i = 0; i < c.size(); ++i) c[i] += G.coefficients[i];
    return BinaryForm(F.degree, std::move(c));
}

inline BinaryForm form_scale(const BinaryForm& F, const Rational& s) {
    std::vector<Rational> c(F.coefficients);
    for (auto& x : c) x *= s;
    return BinaryForm(F.degree, std::move(c));
}

inline BinaryForm form_mul(const BinaryForm& F, const BinaryForm& G) {
    std::vector<Rational> c(static_cast<size_t>(F.degree + G.degree) + 1);
    for (size_t i = 0; i < F.coefficients.size(); ++i)
        for (size_t j = 0; j < G.coefficients.size(); ++j)
            c[i + j] += F.coefficients[i] * G.coefficients[j];
    return BinaryForm(F.degree + G.degree, std::move(c));
}

// alpha*X^2 + beta*X*Y + gamma*Y^2 for degree-2 forms X, Y; the mechanism by
// which the quartic conditions are derived instead of transcribed.
inline BinaryForm form_compose_quadratic(const Rational& alpha, const Rational& beta,
                                         const Rational& gamma, const BinaryForm& X,
                                         const BinaryForm& Y) {
    if (X.degree != 2 || Y.degree != 2)
        throw std::invalid_argument("degree mismatch: inner forms must be quadratic");
    BinaryForm out = form_scale(form_mul(X, X), alpha);
    out = form_add(out, form_scale(form_mul(X, Y), beta));
    out = form_add(out, form_scale(form_mul(Y, Y), gamma));
    return out;
}

// Univariate polynomial, coefficients ascending. Zero polynomial = empty.
struct UniPoly {
    std::vector<Rational> coefficients;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : coefficients(std::move(coeffs)) {
        normalize();
    }

    void normalize() {
        while (!coefficients.empty() && coefficients.back().is_zero())
            coefficients.pop_back();
    }
    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
        return acc;
    }
};

inline UniPoly poly_derivative(const UniPoly& f) {
    std::vector<Rational> c;
    for (size_t i = 1; i < f.coefficients.size(); ++i)
        c.push_back(f.coefficients[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(c));
}

inline UniPoly poly_rem(UniPoly f, const UniPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    while (!f.is_zero() && f.degree() >= g.degree()) {
        Rational q = f.coefficients.back() / g.coefficients.back();
        int shift = f.degree() - g.degree();
        for (int i = 0; i <= g.degree(); ++i)
            f.coefficients[static_cast<size_t>(i + shift)] -=
                q * g.coefficients[static_cast<size_t>(i)];
        f.normalize();
    }
    return f;
}

// Monic gcd via Euclid. gcd(0, 0) is the zero polynomial.
inline UniPoly poly_gcd(UniPoly f, UniPoly g) {
    while (!g.is_zero()) {
        UniPoly r = poly_rem(f, g);
        f = g;
        g = r;
    }
    if (!f.is_zero()) {
        Rational lead = f.coefficients.back();
        for (auto& c : f.coefficients) c /= lead;
    }
    return f;
}

}  // namespace gpforge
