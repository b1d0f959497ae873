#include "qladder/closed_forms.hpp"

#include <stdexcept>

#include "qladder/qcalculus.hpp"

namespace qladder {

std::pair<Rational, Rational> recurrence_closed(const WeightFamily& family, const QContext& ctx,
                                                long n) {
    if (n < 0) throw std::domain_error("recurrence_closed: n must be >= 0");
    if (family.is_sw()) {
        // alpha_n = q^{-n} / sqrt(q) * (q^{-n-1} + q^{-n} - 1)
        Rational alpha = ctx.power(-2 * n - 1) * (ctx.qpow(-n - 1) + ctx.qpow(-n) - 1);
        Rational beta = n == 0 ? Rational(0) : ctx.qpow(-4 * n) - ctx.qpow(-3 * n);
        return {alpha, beta};
    }
    const long a = family.alpha_int();
    Rational alpha = ctx.qpow(-2 * n - 1 - a) *
                     (1 + ctx.q() - ctx.qpow(n + 1) - ctx.qpow(n + a + 1));
    Rational beta = n == 0 ? Rational(0)
                           : ctx.qpow(-4 * n - 2 * a + 1) * (1 - ctx.qpow(n)) *
                                 (1 - ctx.qpow(n + a));
    return {alpha, beta};
}

Rational p1_closed(const WeightFamily& family, const QContext& ctx, long n) {
    if (!family.is_qlag()) throw std::domain_error("p1_closed is a q-Laguerre formula");
    const long a = family.alpha_int();
    Rational rhs = -ctx.q() + (1 + ctx.qpow(-a)) * ctx.qpow(1 - n) - ctx.qpow(1 - 2 * n - a);
    return rhs / (1 - ctx.q());
}

ResidueData residues_closed(const WeightFamily& family, const QContext& ctx, long N) {
    if (N < 0) throw std::domain_error("residues_closed: N must be >= 0");
    ResidueData d{family, {}, {}};
    const Rational one_minus_q = 1 - ctx.q();
    if (family.is_sw()) {
        for (long n = 0; n <= N; ++n) d.R.push_back(ctx.qpow(n) / one_minus_q);
        for (long n = 0; n <= N + 1; ++n)
            d.r.push_back((1 - ctx.qpow(-n)) / (one_minus_q * ctx.sqrt_q()));
        return d;
    }
    const long a = family.alpha_int();
    const Rational c = (1 - ctx.qpow(-a)) / one_minus_q;
    d.r.push_back(Rational(0));  // r_0
    for (long n = 0; n <= N; ++n) {
        Rational alpha_n = recurrence_closed(family, ctx, n).first;
        d.r.push_back(ctx.q() * d.r.back() - ctx.qpow(n) * alpha_n - 1);
    }
    for (long n = 0; n <= N; ++n) {
        Rational alpha_n = recurrence_closed(family, ctx, n).first;
        if (alpha_n == 0) throw std::runtime_error("residues_closed: alpha_n vanished");
        d.R.push_back(-(d.r[static_cast<std::size_t>(n + 1)] + d.r[static_cast<std::size_t>(n)] + c) /
                      alpha_n);
    }
    return d;
}

LadderPair ladder_pair(const WeightFamily& family, const QContext& ctx, long n,
                       const ResidueData& residues, const Rational& p1_n) {
    if (n < 0 || n >= static_cast<long>(residues.R.size()))
        throw std::domain_error("ladder_pair: residues do not cover n");
    const Polynomial x = Polynomial::x();
    const Rational& Rn = residues.R[static_cast<std::size_t>(n)];
    const Rational& rn = residues.r[static_cast<std::size_t>(n)];
    LadderPair pair;
    pair.n = n;
    if (family.is_sw()) {
        pair.A = RationalFunction(Polynomial(Rn), x * x);
        pair.B = RationalFunction(Polynomial(rn), x * x) -
                 RationalFunction(Polynomial(q_integer(ctx, n)), x);
        return pair;
    }
    const Polynomial xp1 = x + Polynomial(Rational(1));
    pair.A = RationalFunction(Polynomial(Rn), x) -
             RationalFunction(Polynomial(ctx.qpow(n) / (1 - ctx.q())), xp1);
    pair.B = RationalFunction(Polynomial(rn), x) -
             RationalFunction(Polynomial(ctx.qpow(n - 1) * p1_n), xp1);
    return pair;
}

}  // namespace qladder
