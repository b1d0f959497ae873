#include "qladder/rational_function.hpp"

#include <stdexcept>

namespace qladder {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace qladder
