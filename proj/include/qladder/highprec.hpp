#ifndef QLADDER_HIGHPREC_HPP
#define QLADDER_HIGHPREC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "qladder/polynomial.hpp"
#include "qladder/rational_function.hpp"

namespace qladder {

/// Arbitrary-precision float (MPFR-backed, variable precision).
using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision for subsequently created Real values.
/// A small guard margin is added on top of the requested bits.
void set_working_bits(unsigned bits);
unsigned current_working_bits();

Real to_real(const Rational& r);
Real eval_real(const Polynomial& p, const Real& x);
Real eval_real(const RationalFunction& f, const Real& x);

/// Truncated infinite q-Pochhammer (z; q)_infty = prod_{k>=0} (1 - z q^k),
/// cut off at the first K with |z| q^K < 2^{-(bits+8)}.
struct PochhammerInf {
    Real value;
    long terms;  // truncation index K actually used
};
PochhammerInf q_pochhammer_inf(const Real& z, const Real& q, unsigned bits);

}  // namespace qladder

#endif
