#include "qladder/moment_oracle.hpp"

#include <stdexcept>

namespace qladder {

Rational moment_pairing(const MomentLadder& moments, const Polynomial& p) {
    Rational acc(0);
    for (long k = 0; k <= p.degree(); ++k)
        acc += p.coeff(static_cast<std::size_t>(k)) * moments.ratio(k);
    return acc;
}

RecurrenceTable chebyshev_recurrence(const MomentLadder& moments, long N) {
    if (N < 0) throw std::domain_error("chebyshev_recurrence: N must be >= 0");
    RecurrenceTable t;
    Polynomial prev;                        // P_{-1} = 0
    Polynomial cur(Rational(1));            // P_0
    Rational zeta_prev(0), zeta_cur(1);     // zeta_n / zeta_0
    t.p1.push_back(Rational(0));
    for (long n = 0; n <= N; ++n) {
        Rational alpha_n = moment_pairing(moments, Polynomial::x() * cur * cur) / zeta_cur;
        Rational beta_n = n == 0 ? Rational(0) : zeta_cur / zeta_prev;
        if (n > 0 && beta_n <= 0)
            throw std::runtime_error("moment sequence not positive definite: beta_" +
                                     std::to_string(n) + " <= 0");
        t.alpha.push_back(alpha_n);
        t.beta.push_back(beta_n);
        t.zeta_ratio.push_back(zeta_cur);

        Polynomial next = (Polynomial::x() - Polynomial(alpha_n)) * cur - beta_n * prev;
        t.p1.push_back(next.coeff(static_cast<std::size_t>(n)));  // x^n coeff of P_{n+1}
        prev = std::move(cur);
        cur = std::move(next);
        zeta_prev = zeta_cur;
        zeta_cur = moment_pairing(moments, cur * cur);
    }
    return t;
}

OrthoBasis generate_monic(const RecurrenceTable& table, long N) {
    if (N > table.nmax() + 1)
        throw std::domain_error("generate_monic: table does not cover requested degree");
    OrthoBasis basis;
    Polynomial prev;
    Polynomial cur(Rational(1));
    basis.polys.push_back(cur);
    for (long n = 0; n < N; ++n) {
        Polynomial next =
            (Polynomial::x() - Polynomial(table.alpha[static_cast<std::size_t>(n)])) * cur -
            table.beta[static_cast<std::size_t>(n)] * prev;
        basis.polys.push_back(next);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return basis;
}

Rational p1_of(const OrthoBasis& basis, long n) {
    if (n == 0) return Rational(0);
    const Polynomial& p = basis.polys.at(static_cast<std::size_t>(n));
    return p.coeff(static_cast<std::size_t>(n - 1));
}

Rational zeta_ratio(const RecurrenceTable& table, long n) {
    return table.zeta_ratio.at(static_cast<std::size_t>(n));
}

bool cd_identity_check(const OrthoBasis& basis, const RecurrenceTable& table, long n) {
    if (n < 1) throw std::domain_error("cd_identity_check: n must be >= 1");
    const auto& P = basis.polys;
    // zeta_{n-1}/zeta_k = beta_{k+1} ... beta_{n-1}
    Bivariate lhs;
    Rational factor(1);  // zeta_{n-1}/zeta_{n-1}
    for (long k = n - 1; k >= 0; --k) {
        Bivariate term = Bivariate::outer(P[static_cast<std::size_t>(k)],
                                          P[static_cast<std::size_t>(k)]);
        term *= factor;
        lhs += term;
        if (k > 0) factor *= table.beta[static_cast<std::size_t>(k)];
    }
    lhs.times_x_minus_y();

    Bivariate rhs = Bivariate::outer(P[static_cast<std::size_t>(n)],
                                     P[static_cast<std::size_t>(n - 1)]);
    rhs -= Bivariate::outer(P[static_cast<std::size_t>(n - 1)],
                            P[static_cast<std::size_t>(n)]);
    return lhs == rhs;
}

}  // namespace qladder
