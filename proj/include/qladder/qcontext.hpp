#ifndef QLADDER_QCONTEXT_HPP
#define QLADDER_QCONTEXT_HPP

#include <stdexcept>

#include "qladder/rational.hpp"

namespace qladder {

/// Holds the base q through its exact square root s (q = s^2), so that every
/// half-integer power of q occurring in the Stieltjes-Wigert formulas is an
/// exact rational. Immutable after construction.
class QContext {
  public:
    explicit QContext(Rational sqrt_q) : s_(std::move(sqrt_q)), q_(s_ * s_) {
        if (!(s_ > 0 && s_ < 1))
            throw std::domain_error("QContext: sqrt(q) must lie in (0,1)");
    }

    const Rational& sqrt_q() const { return s_; }
    const Rational& q() const { return q_; }

    /// s^k for any integer k (so q^{k/2}); exact.
    Rational power(long k) const { return pow_int(s_, k); }

    /// q^k for any integer k; exact.
    Rational qpow(long k) const { return power(2 * k); }

  private:
    Rational s_;
    Rational q_;
};

}  // namespace qladder

#endif
