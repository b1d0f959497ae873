#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qladder/qcalculus.hpp"

using namespace qladder;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / d; }

Polynomial poly(std::initializer_list<Rational> ascending) {
    return Polynomial(std::vector<Rational>(ascending));
}

// Deterministic random polynomials for the property tests.
struct Rng {
    std::mt19937 gen{20260823};
    Rational coeff() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        return Rational(num(gen)) / den(gen);
    }
    Polynomial polynomial(long max_degree) {
        std::uniform_int_distribution<long> deg(0, max_degree);
        long d = deg(gen);
        std::vector<Rational> c;
        for (long k = 0; k <= d; ++k) c.push_back(coeff());
        return Polynomial(std::move(c));
    }
};

}  // namespace

TEST_CASE("polynomial basics") {
    Polynomial p = poly({rat(1), rat(-3), rat(2)});  // 2x^2 - 3x + 1
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.leading() == 2);
    CHECK(p.eval(rat(2)) == rat(3));
    CHECK((p * Polynomial(rat(0))).is_zero());
    CHECK(Polynomial().degree() == -1);

    // trailing zeros are trimmed
    Polynomial q = poly({rat(5), rat(0), rat(0)});
    CHECK(q.degree() == 0);

    Polynomial x = Polynomial::x();
    CHECK((x * x + x).str() == "x^2 + x");
}

TEST_CASE("divmod and gcd laws on random inputs") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a = rng.polynomial(6);
        Polynomial b = rng.polynomial(4);
        if (b.is_zero()) continue;
        auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());

        Polynomial g = poly_gcd(a, b);
        if (!g.is_zero()) {
            CHECK(g.is_monic());
            CHECK(divmod(a, g).remainder.is_zero());
            CHECK(divmod(b, g).remainder.is_zero());
        }
    }
}

TEST_CASE("rational function canonical form and equality") {
    Polynomial x = Polynomial::x();
    RationalFunction f(x * x - Polynomial(rat(1)), x - Polynomial(rat(1)));
    CHECK(f == RationalFunction(x + Polynomial(rat(1))));
    CHECK(f.is_polynomial());

    RationalFunction g(Polynomial(rat(2)), Polynomial(rat(2)) * x);
    CHECK(g.den().is_monic());  // denominator normalized
    CHECK(g == RationalFunction(Polynomial(rat(1)), x));

    CHECK(g.eval(rat(1, 2)) == rat(2));
    CHECK_THROWS_AS(g.eval(rat(0)), std::exception);

    // field axioms on a couple of values
    RationalFunction h(x, x + Polynomial(rat(3)));
    CHECK((g + h) - h == g);
    CHECK((g * h) / h == g);
}

TEST_CASE("q-integers at q = 1/4") {
    QContext ctx(rat(1, 2));
    CHECK(q_integer(ctx, 0) == 0);
    CHECK(q_integer(ctx, 1) == 1);
    CHECK(q_integer(ctx, 2) == rat(5, 4));
    CHECK(q_integer(ctx, 3) == rat(21, 16));
}

TEST_CASE("q-derivatives on monomials") {
    QContext ctx(rat(1, 2));
    Polynomial x3 = Polynomial::monomial(3);
    CHECK(dq_apply(ctx, x3) == Polynomial::monomial(2, rat(21, 16)));
    CHECK(dq_apply(ctx, Polynomial(rat(7))).is_zero());
    // D_{q^-1} x^3 = q^{-2} [3]_q x^2 = 16 * 21/16 x^2
    CHECK(dq_inverse_apply(ctx, x3) == Polynomial::monomial(2, rat(21)));
    CHECK(dq_inverse_apply(ctx, Polynomial(rat(7))).is_zero());
}

TEST_CASE("D_q drops the degree by exactly one") {
    QContext ctx(rat(2, 3));
    Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = rng.polynomial(7);
        if (f.degree() < 1) continue;
        CHECK(dq_apply(ctx, f).degree() == f.degree() - 1);
        CHECK(dq_inverse_apply(ctx, f).degree() == f.degree() - 1);
    }
}

TEST_CASE("D_q linearity and product rule") {
    QContext ctx(rat(1, 2));
    Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = rng.polynomial(5);
        Polynomial g = rng.polynomial(5);
        Rational c = rng.coeff();
        CHECK(dq_apply(ctx, f + g) == dq_apply(ctx, f) + dq_apply(ctx, g));
        CHECK(dq_apply(ctx, f * c) == dq_apply(ctx, f) * c);
        // D_q(fg)(x) = (D_q f)(x) g(x) + f(qx) (D_q g)(x)
        Polynomial lhs = dq_apply(ctx, f * g);
        Polynomial rhs = dq_apply(ctx, f) * g + dilate(f, ctx.q()) * dq_apply(ctx, g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dilation") {
    Polynomial x = Polynomial::x();
    Polynomial f = x * x + Polynomial(rat(1));
    CHECK(dilate(f, rat(2)) == Polynomial::monomial(2, rat(4)) + Polynomial(rat(1)));

    RationalFunction g(Polynomial(rat(1)), x);
    CHECK(dilate(g, rat(3)) == RationalFunction(Polynomial(rat(1, 3)), x));

    // dilation is multiplicative in the scale factor
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = rng.polynomial(5);
        CHECK(dilate(dilate(p, rat(2, 3)), rat(3, 2)) == p);
    }
}

TEST_CASE("finite q-Pochhammer") {
    QContext ctx(rat(1, 2));
    CHECK(q_pochhammer(ctx, ctx.q(), 0) == 1);
    CHECK(q_pochhammer(ctx, ctx.q(), 1) == rat(3, 4));
    // (q; q)_2 = (1 - 1/4)(1 - 1/16)
    CHECK(q_pochhammer(ctx, ctx.q(), 2) == rat(45, 64));
    // recursion (z; q)_{n+1} = (z; q)_n (1 - z q^n)
    Rational z = rat(-2, 5);
    for (long n = 0; n < 6; ++n)
        CHECK(q_pochhammer(ctx, z, n + 1) ==
              q_pochhammer(ctx, z, n) * (1 - z * ctx.qpow(n)));
}

TEST_CASE("bivariate polynomials") {
    Polynomial x = Polynomial::x();
    Polynomial one(rat(1));
    // (x - y) * 1 == outer(x,1) - outer(1,x)
    Bivariate lhs = Bivariate::outer(one, one);
    lhs.times_x_minus_y();
    Bivariate rhs = Bivariate::outer(x, one);
    rhs -= Bivariate::outer(one, x);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.is_zero());
    lhs -= rhs;
    CHECK(lhs.is_zero());
}
