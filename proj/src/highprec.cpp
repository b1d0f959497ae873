#include "qladder/highprec.hpp"

#include <cmath>

namespace qladder {

namespace {
unsigned g_bits = 256;
}

void set_working_bits(unsigned bits) {
    g_bits = bits;
    // +16 guard bits so the final comparison digits are trustworthy
    unsigned digits = static_cast<unsigned>(std::ceil((bits + 16) * 0.3010299957));
    Real::default_precision(digits);
}

unsigned current_working_bits() { return g_bits; }

Real to_real(const Rational& r) {
    return Real(numerator(r)) / Real(denominator(r));
}

Real eval_real(const Polynomial& p, const Real& x) {
    Real acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + to_real(*it);
    return acc;
}

Real eval_real(const RationalFunction& f, const Real& x) {
    return eval_real(f.num(), x) / eval_real(f.den(), x);
}

PochhammerInf q_pochhammer_inf(const Real& z, const Real& q, unsigned bits) {
    using boost::multiprecision::abs;
    Real cutoff = ldexp(Real(1), -static_cast<long>(bits) - 8);
    Real prod(1);
    Real zqk = z;
    long k = 0;
    while (abs(zqk) >= cutoff) {
        prod *= Real(1) - zqk;
        zqk *= q;
        ++k;
    }
    return {prod, k};
}

}  // namespace qladder
