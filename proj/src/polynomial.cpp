#include "qladder/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qladder {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, Rational coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading() of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    Polynomial q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const long shift = r.degree() - b.degree();
        Rational factor = r.leading() / b.leading();
        Polynomial term = Polynomial::monomial(static_cast<std::size_t>(shift), factor);
        q += term;
        r -= term * b;
    }
    return {std::move(q), std::move(r)};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        if (!r.is_zero()) r /= r.leading();  // keeps coefficient growth in check
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a /= a.leading();
    return a;
}

Bivariate Bivariate::outer(const Polynomial& p, const Polynomial& r) {
    Bivariate b;
    if (p.is_zero() || r.is_zero()) return b;
    b.c_.assign(p.coeffs().size(), std::vector<Rational>(r.coeffs().size(), Rational(0)));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < r.coeffs().size(); ++j)
            b.c_[i][j] = p.coeffs()[i] * r.coeffs()[j];
    return b;
}

Bivariate& Bivariate::operator+=(const Bivariate& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        if (c_[i].size() < rhs.c_[i].size()) c_[i].resize(rhs.c_[i].size(), Rational(0));
        for (std::size_t j = 0; j < rhs.c_[i].size(); ++j) c_[i][j] += rhs.c_[i][j];
    }
    trim();
    return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& rhs) {
    Bivariate neg = rhs;
    neg *= Rational(-1);
    return *this += neg;
}

Bivariate& Bivariate::operator*=(const Rational& c) {
    for (auto& row : c_)
        for (auto& v : row) v *= c;
    trim();
    return *this;
}

void Bivariate::times_x_minus_y() {
    // (x - y) * sum c_ij x^i y^j
    std::vector<std::vector<Rational>> out;
    auto at = [&out](std::size_t i, std::size_t j) -> Rational& {
        if (out.size() <= i) out.resize(i + 1);
        if (out[i].size() <= j) out[i].resize(j + 1, Rational(0));
        return out[i][j];
    };
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] == 0) continue;
            at(i + 1, j) += c_[i][j];
            at(i, j + 1) -= c_[i][j];
        }
    c_ = std::move(out);
    trim();
}

void Bivariate::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

bool Bivariate::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

bool Bivariate::operator==(const Bivariate& rhs) const {
    Bivariate d = *this;
    d -= rhs;
    return d.is_zero();
}

}  // namespace qladder
