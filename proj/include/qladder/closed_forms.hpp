#ifndef QLADDER_CLOSED_FORMS_HPP
#define QLADDER_CLOSED_FORMS_HPP

#include <utility>
#include <vector>

#include "qladder/weights.hpp"

namespace qladder {

/// Residue data of the ladder coefficient functions at their poles:
/// A_n and B_n carry R_n and r_n at x = 0 (plus, for q-Laguerre, explicit
/// terms at x = -1). r_0 = 0 and R_0 = 1/(1-q) for both families.
struct ResidueData {
    WeightFamily family;
    std::vector<Rational> R;  // R_0 .. R_N
    std::vector<Rational> r;  // r_0 .. r_{N+1}
};

/// The pair of coefficient functions of the ladder operators at index n:
///   SW:   A_n = R_n/x^2,                      B_n = r_n/x^2 - [n]_q/x
///   qLag: A_n = R_n/x - q^n/((1-q)(x+1)),     B_n = r_n/x - q^{n-1} p1(n)/(x+1)
struct LadderPair {
    long n = 0;
    RationalFunction A;
    RationalFunction B;
};

/// Closed-form recurrence coefficients (alpha_n, beta_n); beta_0 = 0.
///   SW:   alpha_n = q^{-n-1/2} (q^{-n-1} + q^{-n} - 1),
///         beta_n  = q^{-4n} - q^{-3n}
///   qLag: alpha_n = q^{-2n-1-a} (1 + q - q^{n+1} - q^{n+a+1}),
///         beta_n  = q^{-4n-2a+1} (1 - q^n)(1 - q^{n+a})
std::pair<Rational, Rational> recurrence_closed(const WeightFamily& family, const QContext& ctx,
                                                long n);

/// q-Laguerre closed form: (1-q) p1(n) = -q + (1+q^{-a}) q^{1-n} - q^{1-2n-a}.
Rational p1_closed(const WeightFamily& family, const QContext& ctx, long n);

/// Residue sequences up to index N.
///   SW:   R_n = q^n/(1-q), r_n = (1 - q^{-n}) / ((1-q) sqrt q)   (closed forms)
///   qLag: r_{n+1} = q r_n - q^n alpha_n - 1 iterated from r_0 = 0, then
///         R_n = -(r_{n+1} + r_n + (1-q^{-a})/(1-q)) / alpha_n.
/// The paper prints a first-order equation for the q-Laguerre R_n that is
/// inconsistent with the rest of the system; it is deliberately not used
/// here (the verifier asserts the inconsistency instead).
ResidueData residues_closed(const WeightFamily& family, const QContext& ctx, long N);

/// Assembles A_n, B_n from residue data (and p1(n), used by q-Laguerre).
LadderPair ladder_pair(const WeightFamily& family, const QContext& ctx, long n,
                       const ResidueData& residues, const Rational& p1_n);

}  // namespace qladder

#endif
