#ifndef QLADDER_RATIONAL_FUNCTION_HPP
#define QLADDER_RATIONAL_FUNCTION_HPP

#include <string>

#include "qladder/polynomial.hpp"

namespace qladder {

/// Univariate rational function kept in canonical form: numerator and
/// denominator share no nonconstant factor and the denominator is monic.
/// Equality is decided by cross-multiplication of canonical forms, never by
/// sampling.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial(Rational(1))) {}
    explicit RationalFunction(Rational c) : RationalFunction(Polynomial(std::move(c))) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Exact evaluation; throws if x is a pole.
    Rational eval(const Rational& x) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool operator==(const RationalFunction& rhs) const;

    std::string str(const std::string& var = "x") const;

  private:
    void canonicalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace qladder

#endif
