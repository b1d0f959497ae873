#include "qladder/qcalculus.hpp"

#include <stdexcept>

namespace qladder {

Rational q_integer(const QContext& ctx, long n) {
    if (n < 0) throw std::domain_error("q_integer: n must be >= 0");
    return (Rational(1) - ctx.qpow(n)) / (Rational(1) - ctx.q());
}

Polynomial dq_apply(const QContext& ctx, const Polynomial& f) {
    if (f.degree() < 1) return Polynomial();
    std::vector<Rational> out(static_cast<std::size_t>(f.degree()), Rational(0));
    for (long k = 1; k <= f.degree(); ++k)
        out[static_cast<std::size_t>(k - 1)] =
            f.coeff(static_cast<std::size_t>(k)) * q_integer(ctx, k);
    return Polynomial(std::move(out));
}

Polynomial dq_inverse_apply(const QContext& ctx, const Polynomial& f) {
    if (f.degree() < 1) return Polynomial();
    std::vector<Rational> out(static_cast<std::size_t>(f.degree()), Rational(0));
    for (long k = 1; k <= f.degree(); ++k)
        out[static_cast<std::size_t>(k - 1)] =
            f.coeff(static_cast<std::size_t>(k)) * ctx.qpow(1 - k) * q_integer(ctx, k);
    return Polynomial(std::move(out));
}

Polynomial dilate(const Polynomial& f, const Rational& c) {
    std::vector<Rational> out(f.coeffs());
    Rational ck(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
        ck *= c;
        out[k] *= ck;
    }
    return Polynomial(std::move(out));
}

RationalFunction dilate(const RationalFunction& f, const Rational& c) {
    return RationalFunction(dilate(f.num(), c), dilate(f.den(), c));
}

Rational q_pochhammer(const QContext& ctx, const Rational& z, long n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be >= 0");
    Rational prod(1);
    Rational qk(1);
    for (long k = 0; k < n; ++k) {
        prod *= Rational(1) - z * qk;
        qk *= ctx.q();
    }
    return prod;
}

}  // namespace qladder
