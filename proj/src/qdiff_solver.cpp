#include "qladder/qdiff_solver.hpp"

#include <stdexcept>

#include "qladder/closed_forms.hpp"

namespace qladder {

std::vector<Rational> solve_forward(const FirstOrderRecurrence& rec, long N) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(N) + 1);
    x.push_back(rec.x0);
    for (long n = 0; n < N; ++n) {
        auto [a, b] = rec.coeffs(n);
        if (a == 0) throw std::domain_error("solve_forward: a_n = 0 in " + rec.label);
        x.push_back(a * x.back() + b);
    }
    return x;
}

Rational telescope_sum(const std::vector<Rational>& seq, long n) {
    if (n > static_cast<long>(seq.size()))
        throw std::domain_error("telescope_sum: n exceeds sequence length");
    Rational acc(0);
    for (long j = 0; j < n; ++j) acc += seq[static_cast<std::size_t>(j)];
    return acc;
}

std::vector<bool> verify_solution(const FirstOrderRecurrence& rec,
                                  const std::vector<Rational>& candidate, long N) {
    if (static_cast<long>(candidate.size()) < N + 1)
        throw std::domain_error("verify_solution: candidate does not cover 0..N");
    std::vector<bool> ok;
    ok.reserve(static_cast<std::size_t>(N));
    for (long n = 0; n < N; ++n) {
        auto [a, b] = rec.coeffs(n);
        ok.push_back(candidate[static_cast<std::size_t>(n + 1)] ==
                     a * candidate[static_cast<std::size_t>(n)] + b);
    }
    return ok;
}

FirstOrderRecurrence sw_R_recurrence(const QContext& ctx) {
    Rational q = ctx.q();
    return {"(3.6) as R_{n+1} = R_n/q - (1+q) q^{n-1}", Rational(1) / (1 - q),
            [ctx, q](long n) {
                return std::pair<Rational, Rational>(Rational(1) / q,
                                                     -(1 + q) * ctx.qpow(n - 1));
            }};
}

FirstOrderRecurrence sw_r_recurrence(const QContext& ctx) {
    Rational q = ctx.q();
    Rational inv_sqrt_q = Rational(1) / ctx.sqrt_q();
    return {"(3.9) as r_{n+1} = (r_n - q^{-1/2})/q", Rational(0), [q, inv_sqrt_q](long) {
                return std::pair<Rational, Rational>(Rational(1) / q, -inv_sqrt_q / q);
            }};
}

FirstOrderRecurrence qlag_r_recurrence(const WeightFamily& family, const QContext& ctx) {
    return {"(4.9) as r_{n+1} = q r_n - q^n alpha_n - 1", Rational(0), [family, ctx](long n) {
                Rational alpha_n = recurrence_closed(family, ctx, n).first;
                return std::pair<Rational, Rational>(ctx.q(), -ctx.qpow(n) * alpha_n - 1);
            }};
}

FirstOrderRecurrence qlag_p1_scaled_recurrence(const WeightFamily& family, const QContext& ctx) {
    const long a = family.alpha_int();
    return {"(4.10) for x_n = p1(n) q^{2n-2}", Rational(0), [ctx, a](long n) {
                Rational b = (1 + ctx.q()) * ctx.qpow(2 * n - 1) -
                             (1 + ctx.qpow(-a)) * ctx.qpow(n - 1);
                return std::pair<Rational, Rational>(Rational(1), b);
            }};
}

FirstOrderRecurrence qlag_beta_scaled_recurrence(const WeightFamily& family, const QContext& ctx) {
    const long a = family.alpha_int();
    return {"(4.15) for x_n = beta_n q^{2n-1}", Rational(0), [family, ctx, a](long n) {
                Rational alpha_n = recurrence_closed(family, ctx, n).first;
                Rational b = (1 - ctx.q()) * ctx.qpow(-1 - a) * alpha_n;
                return std::pair<Rational, Rational>(Rational(1), b);
            }};
}

FirstOrderRecurrence qlag_R_printed_recurrence(const QContext& ctx) {
    Rational q = ctx.q();
    return {"(4.13) as R_{n+1} = (R_n + q^{n+1} - q^n)/q", Rational(1) / (1 - q),
            [ctx, q](long n) {
                return std::pair<Rational, Rational>(Rational(1) / q,
                                                     (ctx.qpow(n + 1) - ctx.qpow(n)) / q);
            }};
}

}  // namespace qladder
