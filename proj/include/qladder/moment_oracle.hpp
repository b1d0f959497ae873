#ifndef QLADDER_MOMENT_ORACLE_HPP
#define QLADDER_MOMENT_ORACLE_HPP

#include <vector>

#include "qladder/weights.hpp"

namespace qladder {

/// Recurrence data of the monic orthogonal polynomials, built from moments
/// alone (no closed forms): (x - alpha_n) P_n = P_{n+1} + beta_n P_{n-1}.
/// beta_0 = 0 and p1(0) = 0 by convention.
struct RecurrenceTable {
    std::vector<Rational> alpha;       // alpha_0 .. alpha_N
    std::vector<Rational> beta;        // beta_0 (= 0) .. beta_N
    std::vector<Rational> zeta_ratio;  // zeta_n / zeta_0, n = 0 .. N
    std::vector<Rational> p1;          // p1(0) .. p1(N+1)

    long nmax() const { return static_cast<long>(alpha.size()) - 1; }
};

/// Monic orthogonal polynomials P_0 .. P_N.
struct OrthoBasis {
    std::vector<Polynomial> polys;
};

/// Applies the moment functional (normalized to m_0 = 1) to a polynomial.
Rational moment_pairing(const MomentLadder& moments, const Polynomial& p);

/// Stieltjes/Gram-Schmidt procedure on exact moments: builds alpha_n, beta_n,
/// zeta_n/zeta_0 and p1(n) for n <= N. Throws if some beta_n <= 0, which
/// would mean the moment sequence is not positive definite.
RecurrenceTable chebyshev_recurrence(const MomentLadder& moments, long N);

/// Runs the three-term recurrence forward from a table.
OrthoBasis generate_monic(const RecurrenceTable& table, long N);

/// Coefficient of x^{n-1} in P_n (0 for n = 0).
Rational p1_of(const OrthoBasis& basis, long n);

/// zeta_n / zeta_0 = beta_1 ... beta_n.
Rational zeta_ratio(const RecurrenceTable& table, long n);

/// Exact bivariate Christoffel-Darboux check at index n:
///   zeta_{n-1} (x-y) sum_{k<n} P_k(x)P_k(y)/zeta_k
///     == P_n(x)P_{n-1}(y) - P_n(y)P_{n-1}(x).
bool cd_identity_check(const OrthoBasis& basis, const RecurrenceTable& table, long n);

}  // namespace qladder

#endif
