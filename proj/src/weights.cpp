#include "qladder/weights.hpp"

#include <stdexcept>

namespace qladder {

bool WeightFamily::exact_path_ok() const {
    if (is_sw()) return true;
    return denominator(alpha) == 1 && alpha >= 1;
}

long WeightFamily::alpha_int() const {
    if (!exact_path_ok() || is_sw())
        throw std::domain_error("alpha_int: exact path requires integer alpha >= 1");
    return static_cast<long>(numerator(alpha));
}

std::string WeightFamily::name() const {
    if (is_sw()) return "stieltjes-wigert";
    return "q-laguerre(alpha=" + alpha.str() + ")";
}

RationalFunction potential(const WeightFamily& family, const QContext& ctx) {
    const Rational q = ctx.q();
    const Rational c = q / (1 - q);
    const Polynomial x = Polynomial::x();
    if (family.is_sw()) {
        // c * (1/x - sqrt(q)/x^2) = c (x - sqrt q) / x^2
        Polynomial num = x - Polynomial(ctx.sqrt_q());
        return RationalFunction(num * c, x * x);
    }
    const Rational qma = ctx.qpow(-family.alpha_int());
    // c * ((1 - q^{-a})/x + q^{-a}/(x+q))
    RationalFunction term1(Polynomial((1 - qma) * c), x);
    RationalFunction term2(Polynomial(qma * c), x + Polynomial(q));
    return term1 + term2;
}

MomentLadder::MomentLadder(WeightFamily family, QContext ctx)
    : family_(std::move(family)), ctx_(std::move(ctx)) {}

Rational MomentLadder::ratio(long k) const {
    if (k < -1) throw std::domain_error("moment ratio: k must be >= -1");
    if (family_.is_sw()) return ctx_.power(-k * (k + 2));

    if (!family_.exact_path_ok())
        throw std::domain_error("q-Laguerre exact moments require integer alpha >= 1");
    const long a = family_.alpha_int();
    if (k == -1) return Rational(1) / (ctx_.qpow(-a) - 1);
    if (k == 0) return Rational(1);

    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    Rational prod(1);
    long start = 1;
    // extend from the largest memoized index below k
    auto lb = memo_.lower_bound(k);
    if (lb != memo_.begin()) {
        --lb;
        prod = lb->second;
        start = lb->first + 1;
    }
    for (long j = start; j <= k; ++j) {
        prod *= ctx_.qpow(-(a + j)) - 1;
        memo_[j] = prod;
    }
    return prod;
}

Real weight_eval_numeric(const WeightFamily& family, const QContext& ctx, const Real& x,
                         unsigned bits) {
    if (x <= 0) throw std::domain_error("weight defined on (0, infinity)");
    const Real q = to_real(ctx.q());
    if (family.is_sw()) {
        Real lx = log(x);
        return exp(lx * lx / (2 * log(q)));
    }
    Real xa = pow(x, to_real(family.alpha));
    return xa / q_pochhammer_inf(-x, q, bits).value;
}

}  // namespace qladder
