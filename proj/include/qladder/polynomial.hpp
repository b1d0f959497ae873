#ifndef QLADDER_POLYNOMIAL_HPP
#define QLADDER_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "qladder/rational.hpp"

namespace qladder {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree order. The zero polynomial stores no coefficients; no trailing zero
/// coefficient is ever kept, so degree() is canonical.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);  // trims trailing zeros

    static Polynomial monomial(std::size_t degree, Rational coeff = Rational(1));
    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero outside the stored range.
    const Rational& coeff(std::size_t k) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact polynomial division (divisor nonzero).
struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};
PolyDivision divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Dense bivariate polynomial in (x, y), used for the Christoffel-Darboux
/// identity check. coeff[i][j] multiplies x^i y^j.
class Bivariate {
  public:
    Bivariate() = default;

    /// p(x) * r(y)
    static Bivariate outer(const Polynomial& p, const Polynomial& r);

    Bivariate& operator+=(const Bivariate& rhs);
    Bivariate& operator-=(const Bivariate& rhs);
    Bivariate& operator*=(const Rational& c);

    /// Multiplies in place by (x - y).
    void times_x_minus_y();

    bool is_zero() const;
    bool operator==(const Bivariate& rhs) const;

  private:
    void trim();
    std::vector<std::vector<Rational>> c_;  // c_[i][j] : x^i y^j
};

}  // namespace qladder

#endif
