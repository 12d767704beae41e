#include <gpforge/family.hpp>
#include <gpforge/quartic.hpp>

#include <catch2/catch.hpp>

using gpforge::BinaryForm;
using gpforge::QuarticModel;
using gpforge::Rational;

namespace {

std::vector<Rational> rat_vec(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 21) - 10;
        long den = static_cast<long>(next() % 6) + 1;
        return Rational(num, den);
    }
};

}  // namespace

TEST_CASE("seventh_condition at t=2 has the expected cleared coefficients") {
    QuarticModel F = gpforge::seventh_condition(Rational(2));
    CHECK(F.clearing == Rational(1));
    CHECK(F.F.coefficients == rat_vec({295936, 2376192, -2838528, 733824, 28224}));
    CHECK_THROWS_AS(gpforge::seventh_condition(Rational(1)), std::domain_error);
}

TEST_CASE("ninth_condition at t=2: coefficients and regression value") {
    QuarticModel G = gpforge::ninth_condition(Rational(2));
    CHECK(G.F.coefficients == rat_vec({1183744, 47532544, -53855744, 14679168, 112896}));
    CHECK(gpforge::form_eval(G.F, Rational(1), Rational(1)) == Rational(9652608));
    CHECK(gpforge::form_eval(G.F, Rational(0), Rational(0)) == Rational(0));
}

TEST_CASE("the imported base point is a square of the 7th condition, not the 9th") {
    gpforge::ConicModel conic(Rational(2));
    gpforge::BaseImport imp = gpforge::base_import(conic);
    CHECK(imp.p0 == Rational::from_string("-6425/4641"));
    CHECK(imp.q0 == Rational::from_string("-4112/4641"));

    QuarticModel F = gpforge::seventh_condition(Rational(2));
    auto root = gpforge::is_square(gpforge::form_eval(F.F, imp.p0, imp.q0));
    REQUIRE(root);
    CHECK(root->str() == "38084381792/21538881");

    QuarticModel G = gpforge::ninth_condition(Rational(2));
    CHECK_FALSE(gpforge::is_square(gpforge::form_eval(G.F, imp.p0, imp.q0)));

    gpforge::attach_marked_point(F, imp.p0, imp.q0);
    REQUIRE(F.marked_point);
    CHECK(F.marked_point->S * F.marked_point->S ==
          gpforge::form_eval(F.F, F.marked_point->p, F.marked_point->q));
    CHECK_THROWS_AS(gpforge::attach_marked_point(G, imp.p0, imp.q0), std::domain_error);
}

TEST_CASE("the marked square exists at t=4 as well") {
    gpforge::ConicModel conic(Rational(4));
    gpforge::BaseImport imp = gpforge::base_import(conic);
    QuarticModel F = gpforge::seventh_condition(Rational(4));
    CHECK(gpforge::is_square(gpforge::form_eval(F.F, imp.p0, imp.q0)));
    CHECK(gpforge::form_eval(F.F, Rational(0), Rational(0)).is_zero());
}

TEST_CASE("non-integer ratio forces a nontrivial clearing factor") {
    QuarticModel F = gpforge::seventh_condition(Rational(5, 2));
    CHECK(F.clearing == Rational(262144));
    // cleared coefficients are integers
    for (const auto& c : F.F.coefficients) CHECK(c.den() == 1);
    gpforge::ConicModel conic(Rational(5, 2));
    auto imp = gpforge::base_import(conic);
    auto stored = gpforge::is_square(gpforge::form_eval(F.F, imp.p0, imp.q0));
    REQUIRE(stored);
    // raw value = stored / clearing^2, also a square
    auto raw = gpforge::is_square(gpforge::form_eval(F.F, imp.p0, imp.q0) /
                                  (F.clearing * F.clearing));
    REQUIRE(raw);
    CHECK(*stored == F.clearing * *raw);
}

TEST_CASE("composed condition agrees with pointwise composition") {
    Rng rng{13};
    for (Rational t : {Rational(2), Rational(3), Rational(5, 2), Rational(-2)}) {
        gpforge::ConicModel m(t);
        QuarticModel F = gpforge::seventh_condition(t);
        for (int iter = 0; iter < 12; ++iter) {
            Rational p = rng.rational(), q = rng.rational();
            if (p.is_zero() && q.is_zero()) continue;
            gpforge::ConicPoint pt = gpforge::conic_param(m, p, q);
            auto [a, b] = gpforge::solve_ab(t, pt.U, pt.V);
            Rational expected = a * (gpforge::pow(t, 14) + Rational(1)) + b * gpforge::pow(t, 7);
            CHECK(gpforge::form_eval(F.F, p, q) == F.clearing * F.clearing * expected);
        }
    }
}

TEST_CASE("quartic invariants on the pinned forms") {
    BinaryForm F1(4, rat_vec({1, 0, 0, 0, 1}));  // p^4 + q^4
    auto inv1 = gpforge::quartic_invariants(F1);
    CHECK(inv1.I == Rational(12));
    CHECK(inv1.J == Rational(0));
    REQUIRE(inv1.j);
    CHECK(*inv1.j == Rational(1728));

    BinaryForm F2(4, rat_vec({0, 1, 0, 1, 0}));  // p^3 q + p q^3
    auto inv2 = gpforge::quartic_invariants(F2);
    CHECK(inv2.I == Rational(-3));
    CHECK(inv2.J == Rational(0));
    REQUIRE(inv2.j);
    CHECK(*inv2.j == Rational(1728));

    // degenerate: (p^2)^2 has 4I^3 = J^2
    BinaryForm F3(4, rat_vec({1, 0, 0, 0, 0}));
    CHECK_FALSE(gpforge::quartic_invariants(F3).j);
}

TEST_CASE("I, J scale as det^4, det^6 under GL2 substitution; j is invariant") {
    Rng rng{31};
    QuarticModel base = gpforge::seventh_condition(Rational(2));
    for (int iter = 0; iter < 20; ++iter) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational();
        Rational det = a * d - b * c;
        if (det.is_zero()) continue;
        // substitute (p, q) -> (a p + b q, c p + d q)
        BinaryForm P(1, {a, b}), Q(1, {c, d});
        BinaryForm sub(0, {Rational(0)});
        std::vector<Rational> zero4(5);
        BinaryForm acc(4, zero4);
        for (int i = 0; i <= 4; ++i) {
            BinaryForm term(0, {base.F.coefficients[static_cast<size_t>(i)]});
            for (int k = 0; k < 4 - i; ++k) term = gpforge::form_mul(term, P);
            for (int k = 0; k < i; ++k) term = gpforge::form_mul(term, Q);
            acc = gpforge::form_add(acc, term);
        }
        auto inv0 = gpforge::quartic_invariants(base.F);
        auto inv1 = gpforge::quartic_invariants(acc);
        CHECK(inv1.I == gpforge::pow(det, 4) * inv0.I);
        CHECK(inv1.J == gpforge::pow(det, 6) * inv0.J);
        REQUIRE(inv1.j);
        CHECK(*inv1.j == *inv0.j);
    }
}
