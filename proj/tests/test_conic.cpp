#include <gpforge/conic.hpp>

#include <catch2/catch.hpp>

using gpforge::ConicModel;
using gpforge::ConicPoint;
using gpforge::Rational;

namespace {

struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 31) - 15;
        long den = static_cast<long>(next() % 9) + 1;
        return Rational(num, den);
    }
    Rational ratio() {
        for (;;) {
            Rational t = rational();
            if (!t.is_zero() && t != Rational(1) && t != Rational(-1)) return t;
        }
    }
};

}  // namespace

TEST_CASE("model rejects degenerate ratios") {
    CHECK_THROWS_AS(ConicModel(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ConicModel(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(ConicModel(Rational(-1)), std::domain_error);
    ConicModel m(Rational(2));
    CHECK(m.A == Rational(68));
    CHECK(m.B == Rational(21));
}

TEST_CASE("solve_ab on pinned cases") {
    auto [a, b] = gpforge::solve_ab(Rational(2), Rational(1), Rational(1));
    CHECK(a == Rational(-1, 15));
    CHECK(b == Rational(2, 3));

    // the worked numeric instance: conic ratio 4, y-values at w = 4 and 4^3
    auto [a4, b4] = gpforge::solve_ab(Rational(4), Rational::from_string("16695041/270540816"),
                                      Rational::from_string("5663659/22545068"));
    CHECK(a4.str() == "142608512/250308167443425");
    CHECK(b4.str() == "62553486161362657/65873099809751270400");

    auto [az, bz] = gpforge::solve_ab(Rational(2), Rational(0), Rational(0));
    CHECK(az == Rational(0));
    CHECK(bz == Rational(0));

    CHECK_THROWS_AS(gpforge::solve_ab(Rational(1), Rational(1), Rational(1)),
                    std::domain_error);
}

TEST_CASE("conic_param at t=2") {
    ConicModel m(Rational(2));
    ConicPoint pt = gpforge::conic_param(m, Rational(1), Rational(1));
    CHECK(pt.U == Rational(5));
    CHECK(pt.V == Rational(-42));
    CHECK(pt.R == Rational(-188));
    CHECK(-m.A * pt.U * pt.U + m.B * pt.V * pt.V == Rational(35344));

    // direction (Bt, A) hits the base point projectively
    ConicPoint base = gpforge::conic_param(m, Rational(42), Rational(68));
    CHECK(gpforge::proj_equal(base, gpforge::conic_base_point(m)));

    // q = 0 gives (A, -tA, -t^2 A) ~ (1 : -t : -t^2)
    ConicPoint q0 = gpforge::conic_param(m, Rational(1), Rational(0));
    CHECK(gpforge::proj_equal(q0, ConicPoint{Rational(1), Rational(-2), Rational(-4)}));

    CHECK_THROWS_AS(gpforge::conic_param(m, Rational(0), Rational(0)), std::invalid_argument);
}

TEST_CASE("conic_param_inverse round trips") {
    ConicModel m(Rational(2));
    auto [p1, q1] = gpforge::conic_param_inverse(m, ConicPoint{Rational(5), Rational(-42),
                                                               Rational(-188)});
    CHECK(p1 * Rational(1) == q1 * Rational(1));  // (p : q) = (1 : 1)
    CHECK(p1 == Rational(208));

    auto [p2, q2] = gpforge::conic_param_inverse(m, ConicPoint{Rational(1), Rational(-2),
                                                               Rational(-4)});
    CHECK(q2.is_zero());
    CHECK(!p2.is_zero());

    CHECK_THROWS_AS(gpforge::conic_param_inverse(m, gpforge::conic_base_point(m)),
                    std::domain_error);

    Rng rng{99};
    for (int iter = 0; iter < 60; ++iter) {
        ConicModel model(rng.ratio());
        Rational p = rng.rational(), q = rng.rational();
        if (p.is_zero() && q.is_zero()) continue;
        ConicPoint pt = gpforge::conic_param(model, p, q);
        if (gpforge::proj_equal(pt, gpforge::conic_base_point(model))) continue;
        auto [pi, qi] = gpforge::conic_param_inverse(model, pt);
        ConicPoint back = gpforge::conic_param(model, pi, qi);
        CHECK(gpforge::proj_equal(back, pt));
        // the scale factor formula
        Rational kappa = gpforge::conic_rescale_factor(model, pt);
        CHECK(back.U == kappa * pt.U);
        CHECK(back.V == kappa * pt.V);
        CHECK(back.R == kappa * pt.R);
    }
}

TEST_CASE("conic identity and fifth-point relation on sampled inputs") {
    Rng rng{2024};
    int done = 0;
    while (done < 150) {
        ConicModel m(rng.ratio());
        Rational p = rng.rational(), q = rng.rational();
        if (p.is_zero() && q.is_zero()) continue;
        ConicPoint pt = gpforge::conic_param(m, p, q);
        REQUIRE(gpforge::on_conic(m, pt));
        auto [a, b] = gpforge::solve_ab(m.t, pt.U, pt.V);
        CHECK(pt.R * pt.R == a * (gpforge::pow(m.t, 10) + Rational(1)) + b * gpforge::pow(m.t, 5));
        ++done;
    }
}

TEST_CASE("reflect_point") {
    auto [x1, y1] = gpforge::reflect_point(Rational(4),
                                           Rational::from_string("16695041/270540816"));
    CHECK(x1 == Rational(1, 4));
    CHECK(y1.str() == "16695041/1082163264");

    auto [x2, y2] = gpforge::reflect_point(Rational(1), Rational(7));
    CHECK(x2 == Rational(1));
    CHECK(y2 == Rational(7));

    CHECK_THROWS_AS(gpforge::reflect_point(Rational(0), Rational(1)), std::domain_error);

    // involution, and it preserves y^2 = a x^2 + b x + a
    Rng rng{5};
    for (int iter = 0; iter < 40; ++iter) {
        Rational x = rng.rational(), y = rng.rational();
        if (x.is_zero()) continue;
        auto [xr, yr] = gpforge::reflect_point(x, y);
        auto [xb, yb] = gpforge::reflect_point(xr, yr);
        CHECK(xb == x);
        CHECK(yb == y);
        // transport of the curve relation
        Rational a = rng.rational(), b = rng.rational();
        if (y * y == a * x * x + b * x + a) CHECK(yr * yr == a * xr * xr + b * xr + a);
    }
}
