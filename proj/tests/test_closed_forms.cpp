#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qladder/closed_forms.hpp"
#include "qladder/moment_oracle.hpp"

using namespace qladder;

namespace {
Rational rat(long n, long d = 1) { return Rational(n) / d; }
}

TEST_CASE("closed recurrence coefficients, spot values at q = 1/4") {
    QContext ctx(rat(1, 2));
    WeightFamily sw = WeightFamily::stieltjes_wigert();
    CHECK(recurrence_closed(sw, ctx, 0) == std::pair{rat(8), rat(0)});
    CHECK(recurrence_closed(sw, ctx, 1) == std::pair{rat(152), rat(192)});
    CHECK(recurrence_closed(sw, ctx, 2).second == 61440);

    WeightFamily ql = WeightFamily::q_laguerre(rat(1));
    CHECK(recurrence_closed(ql, ctx, 0) == std::pair{rat(15), rat(0)});
    CHECK(recurrence_closed(ql, ctx, 1) == std::pair{rat(300), rat(720)});
    CHECK_THROWS_AS(recurrence_closed(sw, ctx, -1), std::domain_error);
}

TEST_CASE("closed p1 for q-Laguerre") {
    QContext ctx(rat(1, 2));
    WeightFamily ql = WeightFamily::q_laguerre(rat(1));
    CHECK(p1_closed(ql, ctx, 0) == 0);
    CHECK(p1_closed(ql, ctx, 1) == -15);
    CHECK(p1_closed(ql, ctx, 2) == -315);
    // alpha_n = p1(n) - p1(n+1)
    for (long n = 0; n <= 10; ++n)
        CHECK(recurrence_closed(ql, ctx, n).first ==
              p1_closed(ql, ctx, n) - p1_closed(ql, ctx, n + 1));
    CHECK_THROWS_AS(p1_closed(WeightFamily::stieltjes_wigert(), ctx, 1), std::domain_error);
}

TEST_CASE("residue sequences, Stieltjes-Wigert") {
    QContext ctx(rat(1, 2));
    ResidueData d = residues_closed(WeightFamily::stieltjes_wigert(), ctx, 3);
    CHECK(d.R[0] == rat(4, 3));
    CHECK(d.R[1] == rat(1, 3));
    CHECK(d.R[2] == rat(1, 12));
    CHECK(d.r[0] == 0);
    CHECK(d.r[1] == -8);
    CHECK(d.r[2] == -40);
    // R_{n+1}/R_n = q
    for (std::size_t n = 0; n + 1 < d.R.size(); ++n) CHECK(d.R[n + 1] * 4 == d.R[n]);
}

TEST_CASE("residue sequences, q-Laguerre alpha = 1") {
    QContext ctx(rat(1, 2));
    ResidueData d = residues_closed(WeightFamily::q_laguerre(rat(1)), ctx, 3);
    CHECK(d.R[0] == rat(4, 3));
    CHECK(d.R[1] == rat(1, 3));
    CHECK(d.R[2] == rat(1, 12));
    CHECK(d.R[3] == rat(1, 48));
    CHECK(d.r[0] == 0);
    CHECK(d.r[1] == -16);
    CHECK(d.r[2] == -80);
    CHECK(d.r[3] == -336);
    CHECK(d.r[4] == -1360);
}

TEST_CASE("ladder coefficient functions") {
    QContext ctx(rat(1, 2));
    Polynomial x = Polynomial::x();

    WeightFamily sw = WeightFamily::stieltjes_wigert();
    ResidueData ds = residues_closed(sw, ctx, 2);
    LadderPair p1sw = ladder_pair(sw, ctx, 1, ds, rat(-8));
    CHECK(p1sw.A == RationalFunction(Polynomial(rat(1, 3)), x * x));
    CHECK(p1sw.B == RationalFunction(-x - Polynomial(rat(8)), x * x));

    WeightFamily ql = WeightFamily::q_laguerre(rat(1));
    ResidueData dq = residues_closed(ql, ctx, 2);
    LadderPair p0 = ladder_pair(ql, ctx, 0, dq, rat(0));
    CHECK(p0.B.is_zero());  // r_0 = 0 and p1(0) = 0
    LadderPair p1 = ladder_pair(ql, ctx, 1, dq, rat(-15));
    Polynomial xp1 = x + Polynomial(rat(1));
    CHECK(p1.A == RationalFunction(Polynomial(rat(1, 3)), x) -
                      RationalFunction(Polynomial(rat(1, 3)), xp1));
    CHECK(p1.B == RationalFunction(Polynomial(rat(-16)), x) +
                      RationalFunction(Polynomial(rat(15)), xp1));
    CHECK_THROWS_AS(ladder_pair(ql, ctx, 9, dq, rat(0)), std::domain_error);
}

TEST_CASE("closed forms agree with the moment oracle at several parameter points") {
    struct Point {
        WeightFamily family;
        Rational s;
    };
    const Point points[] = {
        {WeightFamily::stieltjes_wigert(), rat(1, 2)},
        {WeightFamily::stieltjes_wigert(), rat(2, 3)},
        {WeightFamily::q_laguerre(rat(1)), rat(1, 2)},
        {WeightFamily::q_laguerre(rat(2)), rat(2, 3)},
    };
    for (const Point& pt : points) {
        QContext ctx(pt.s);
        RecurrenceTable t = chebyshev_recurrence(MomentLadder(pt.family, ctx), 8);
        for (long n = 0; n <= 8; ++n) {
            auto [a, b] = recurrence_closed(pt.family, ctx, n);
            CHECK(a == t.alpha[static_cast<std::size_t>(n)]);
            CHECK(b == t.beta[static_cast<std::size_t>(n)]);
            if (pt.family.is_qlag())
                CHECK(p1_closed(pt.family, ctx, n) == t.p1[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("quadratic residue relation, Stieltjes-Wigert") {
    // R_n (R_n previous-sum relation): beta_n R_n R_{n-1}-type consistency is
    // covered by the verifier; here check the product form beta_n = zeta-free
    // combination R-terms satisfy: beta_n R_{n-1} / R_n = q^{-1} beta_n.
    QContext ctx(rat(2, 3));
    ResidueData d = residues_closed(WeightFamily::stieltjes_wigert(), ctx, 8);
    for (long n = 1; n <= 8; ++n)
        CHECK(d.R[static_cast<std::size_t>(n - 1)] ==
              d.R[static_cast<std::size_t>(n)] * ctx.qpow(-1));
}
