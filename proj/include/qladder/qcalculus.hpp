#ifndef QLADDER_QCALCULUS_HPP
#define QLADDER_QCALCULUS_HPP

#include "qladder/qcontext.hpp"
#include "qladder/rational_function.hpp"

namespace qladder {

/// [n]_q = (1 - q^n)/(1 - q); [0]_q = 0.
Rational q_integer(const QContext& ctx, long n);

/// (D_q f)(x) = (f(x) - f(qx)) / ((1-q) x). On a monomial x^k this is
/// [k]_q x^{k-1}; constants map to zero and the degree drops by exactly one.
Polynomial dq_apply(const QContext& ctx, const Polynomial& f);

/// D_{q^{-1}}: x^k maps to q^{1-k} [k]_q x^{k-1}.
Polynomial dq_inverse_apply(const QContext& ctx, const Polynomial& f);

/// f(c x).
Polynomial dilate(const Polynomial& f, const Rational& c);
RationalFunction dilate(const RationalFunction& f, const Rational& c);

/// Finite q-Pochhammer (z; q)_n = prod_{k=0}^{n-1} (1 - z q^k), exact.
Rational q_pochhammer(const QContext& ctx, const Rational& z, long n);

/// Exact rational-function identity test (cross-multiplication, no sampling).
inline bool ratfun_identity_equal(const RationalFunction& lhs, const RationalFunction& rhs) {
    return lhs == rhs;
}

}  // namespace qladder

#endif
