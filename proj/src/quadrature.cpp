#include "qladder/quadrature.hpp"

#include <stdexcept>

#include "qladder/qcalculus.hpp"

namespace qladder {

using boost::multiprecision::abs;
using boost::multiprecision::cosh;
using boost::multiprecision::exp;
using boost::multiprecision::ldexp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sinh;
using boost::multiprecision::sqrt;

namespace {
constexpr double kUMax = 10.0;  // |u| cutoff; integrands here are far below
                                // working precision long before this

std::string real_str(const Real& v) { return v.str(30, std::ios_base::scientific); }
}  // namespace

QuadResult integrate_halfline(const Integrand& f, unsigned bits, int level_cap) {
    set_working_bits(bits);
    const Real eps = ldexp(Real(1), -static_cast<long>(bits));
    const Real term_eps = ldexp(Real(1), -static_cast<long>(bits) - 24);

    long evals = 0;
    auto g = [&](const Real& u) {
        Real t = sinh(u);
        Real x = exp(t);
        ++evals;
        return f(x) * x * cosh(u);
    };

    // trapezoid sum of g over k*h for fixed h; stride 2 starting at k0 sums
    // only the points new to this refinement level
    auto side_sum = [&](const Real& h, long k0, long stride) {
        Real acc(0);
        for (int sign : {+1, -1}) {
            int tiny_run = 0;
            for (long k = k0;; k += stride) {
                Real u = sign * k * h;
                if (abs(u) > kUMax) break;
                Real term = g(u);
                acc += term;
                if (abs(term) <= term_eps * (abs(acc) + term_eps)) {
                    if (++tiny_run >= 3) break;
                } else {
                    tiny_run = 0;
                }
            }
        }
        return acc;
    };

    Real h(1);
    Real I = (g(Real(0)) + side_sum(h, 1, 1)) * h;
    QuadResult res;
    for (int level = 1; level <= level_cap; ++level) {
        h /= 2;
        Real I_next = I / 2 + side_sum(h, 1, 2) * h;
        res.error_estimate = abs(I_next - I);
        I = I_next;
        if (level >= 3 && res.error_estimate <= eps * (abs(I) + eps)) {
            res.converged = true;
            break;
        }
    }
    res.value = I;
    res.evaluations = evals;
    return res;
}

NumericChecker::NumericChecker(const VerifierSession& session, unsigned bits)
    : s_(session), bits_(bits) {
    total_weight_ = integrate_halfline([this](const Real& x) { return weight(x); }, bits_);
    if (!total_weight_.converged)
        throw std::runtime_error("weight integral did not converge");
}

Real NumericChecker::weight(const Real& x) const {
    return weight_eval_numeric(s_.family(), s_.ctx(), x, bits_);
}

Real NumericChecker::zeta_numeric(long n) const {
    return to_real(zeta_ratio(s_.table(), n)) * total_weight_.value;
}

Real NumericChecker::sw_total_weight_residual() const {
    if (!s_.family().is_sw())
        throw std::domain_error("closed-form weight integral is SW only");
    Real L = -log(to_real(s_.ctx().q()));
    Real pi = 4 * atan(Real(1));
    Real closed = sqrt(2 * pi * L) * exp(L / 2);
    return abs(total_weight_.value - closed) / closed;
}

Real NumericChecker::moment_ratio_residual(long k) const {
    auto I = integrate_halfline(
        [&](const Real& x) { return pow(x, static_cast<int>(k)) * weight(x); }, bits_);
    Real exact = to_real(s_.moments().ratio(k));
    return abs(I.value / total_weight_.value - exact) / abs(exact);
}

Real NumericChecker::orthogonality_residual(long m, long n) const {
    const Polynomial prod = s_.basis().polys.at(static_cast<std::size_t>(m)) *
                            s_.basis().polys.at(static_cast<std::size_t>(n));
    auto I = integrate_halfline(
        [&](const Real& x) { return eval_real(prod, x) * weight(x); }, bits_);
    Real ratio = I.value / total_weight_.value;
    if (m == n) {
        Real exact = to_real(zeta_ratio(s_.table(), n));
        return abs(ratio - exact) / exact;
    }
    Real scale = sqrt(to_real(zeta_ratio(s_.table(), m)) * to_real(zeta_ratio(s_.table(), n)));
    return abs(ratio) / scale;
}

std::pair<Real, Real> NumericChecker::u_moment_residuals(long n) const {
    const Rational inv_q = Rational(1) / s_.ctx().q();
    const auto& P = s_.basis().polys;
    const Polynomial pn_shift = dilate(P.at(static_cast<std::size_t>(n)), inv_q);
    const Polynomial prod0 = P.at(static_cast<std::size_t>(n)) * pn_shift;
    const Polynomial prod1 = P.at(static_cast<std::size_t>(n + 1)) * pn_shift;
    auto u_times = [&](const Polynomial& p) {
        return integrate_halfline(
            [&](const Real& x) {
                return eval_real(s_.potential_u(), x) * eval_real(p, x) * weight(x);
            },
            bits_);
    };
    Real zn = zeta_numeric(n);
    Real res15 = abs(u_times(prod0).value) / zn;
    Rational target16 = (1 - s_.ctx().qpow(n + 1)) * s_.ctx().q() / (1 - s_.ctx().q());
    Real val16 = u_times(prod1).value / zn;
    Real res16 = abs(val16 - to_real(target16)) / abs(to_real(target16));
    return {res15, res16};
}

std::pair<Real, Real> NumericChecker::ladder_integral_residuals(long n, const Rational& x0) const {
    const QContext& ctx = s_.ctx();
    const Rational a = ctx.q() * x0;
    const RationalFunction& u = s_.potential_u();
    // (u(qx0) - u(y)) / (qx0 - y): the numerator vanishes at y = qx0, so the
    // quotient is again a rational function, formed exactly
    const RationalFunction kernel = (RationalFunction(u.eval(a)) - u) /
                                    RationalFunction(Polynomial(std::vector<Rational>{a, Rational(-1)}));
    const Rational inv_q = Rational(1) / ctx.q();
    const auto& P = s_.basis().polys;
    auto dd_integral = [&](const Polynomial& p) {
        return integrate_halfline(
            [&](const Real& y) {
                return eval_real(kernel, y) * eval_real(p, y) * weight(y);
            },
            bits_);
    };
    const Polynomial pn = P.at(static_cast<std::size_t>(n));
    Real a_num = dd_integral(pn * dilate(pn, inv_q)).value / zeta_numeric(n);
    Real a_exact = to_real(s_.pair(n).A.eval(x0));
    Real res_a = abs(a_num - a_exact) / abs(a_exact);
    if (n == 0) return {res_a, Real(0)};
    Real b_num = dd_integral(pn * dilate(P.at(static_cast<std::size_t>(n - 1)), inv_q)).value /
                 zeta_numeric(n - 1);
    Real b_exact = to_real(s_.pair(n).B.eval(x0));
    Real res_b = abs(b_num - b_exact) / abs(b_exact);
    return {res_a, res_b};
}

Real NumericChecker::qshift_norm_residual(long j) const {
    const Rational inv_q = Rational(1) / s_.ctx().q();
    const Polynomial& pj = s_.basis().polys.at(static_cast<std::size_t>(j));
    const Polynomial prod = pj * dilate(pj, inv_q);
    auto I = integrate_halfline(
        [&](const Real& x) { return eval_real(prod, x) * weight(x); }, bits_);
    Real val = I.value / zeta_numeric(j);
    Real exact = to_real(s_.ctx().qpow(-j));
    return abs(val - exact) / exact;
}

Real integration_by_parts_residual(const WeightFamily& family, const QContext& ctx,
                                   const Polynomial& fpoly, const Polynomial& gpoly,
                                   unsigned bits) {
    if (family.is_qlag() && family.alpha < 1 && gpoly.eval(Rational(0)) != 0)
        throw std::domain_error(
            "integration-by-parts hypothesis fails: int |f g| dx/x diverges for alpha < 1");
    const Polynomial dq_g = dq_apply(ctx, gpoly);
    const Real q = to_real(ctx.q());
    auto w = [&](const Real& x) { return weight_eval_numeric(family, ctx, x, bits); };
    auto I1 = integrate_halfline(
        [&](const Real& x) { return eval_real(fpoly, x) * w(x) * eval_real(dq_g, x); }, bits);
    // D_{q^{-1}}(fpoly * w) evaluated pointwise
    auto I2 = integrate_halfline(
        [&](const Real& x) {
            Real xq = x / q;
            Real big_f = eval_real(fpoly, x) * w(x);
            Real big_f_shift = eval_real(fpoly, xq) * w(xq);
            return eval_real(gpoly, x) * (big_f - big_f_shift) / (x - xq);
        },
        bits);
    Real lhs = I1.value;
    Real rhs = I2.value / q;
    Real denom = std::max(abs(lhs), abs(rhs));
    if (denom == 0) return abs(lhs + rhs);
    return abs(lhs + rhs) / denom;
}

Real i_ratio_residual(const QContext& ctx, const Rational& a, unsigned bits) {
    if (denominator(a) == 1)
        throw std::domain_error("I-ratio closed form has a pole at integer a");
    set_working_bits(bits);
    const Real q = to_real(ctx.q());
    const Real ra = to_real(a);
    auto wtilde_pow = [&](const Real& e) {
        return integrate_halfline(
            [&](const Real& y) { return pow(y, e) / q_pochhammer_inf(-y, q, bits).value; },
            bits);
    };
    Real num = wtilde_pow(ra).value;
    Real den = wtilde_pow(ra - 1).value;
    Real exact = pow(q, -ra) - 1;
    return abs(num / den - exact) / abs(exact);
}

std::vector<NumericCheckRow> run_numeric_checks(const VerifierSession& session, unsigned bits,
                                                long nmax, int rel_exp, int abs_exp) {
    set_working_bits(bits);
    const Real rel_tol = pow(Real(10), -rel_exp);
    const Real abs_tol = pow(Real(10), -abs_exp);
    std::vector<NumericCheckRow> rows;
    auto add = [&rows](std::string label, std::string target, const Real& residual,
                       const Real& tol) {
        rows.push_back({std::move(label), std::move(target), real_str(residual),
                        real_str(tol), residual <= tol});
    };

    NumericChecker chk(session, bits);
    const long nd = std::min(nmax, 4L);
    const QContext& ctx = session.ctx();

    if (session.family().is_sw())
        add("int w vs closed Gaussian form", "sqrt(2 pi ln(1/q)) e^{ln(1/q)/2}",
            chk.sw_total_weight_residual(), rel_tol);
    for (long k = 0; k <= nd; ++k)
        add("moment ratio k=" + std::to_string(k),
            session.moments().ratio(k).str(), chk.moment_ratio_residual(k), rel_tol);
    for (long n = 0; n <= std::min(nd, 3L); ++n)
        for (long m = 0; m <= n; ++m)
            add("(1.1) orthogonality m=" + std::to_string(m) + " n=" + std::to_string(n),
                m == n ? zeta_ratio(session.table(), n).str() : "0",
                chk.orthogonality_residual(m, n), m == n ? rel_tol : abs_tol);
    for (long n = 0; n <= std::min(nd, 3L); ++n) {
        auto [r15, r16] = chk.u_moment_residuals(n);
        add("(1.15) n=" + std::to_string(n), "0", r15, abs_tol);
        Rational t16 = (1 - ctx.qpow(n + 1)) * ctx.q() / (1 - ctx.q());
        add("(1.16) n=" + std::to_string(n), t16.str(), r16, rel_tol);
    }
    for (long j = 0; j <= nd; ++j)
        add("(2.4) j=" + std::to_string(j), ctx.qpow(-j).str(),
            chk.qshift_norm_residual(j), rel_tol);
    for (const Rational& x0 : {Rational(1, 2), Rational(1), Rational(3)}) {
        for (long n = 0; n <= nd; ++n) {
            auto [ra, rb] = chk.ladder_integral_residuals(n, x0);
            add("(1.6) A_" + std::to_string(n) + " at x0=" + x0.str(),
                session.pair(n).A.eval(x0).str(), ra, rel_tol);
            if (n >= 1)
                add("(1.7) B_" + std::to_string(n) + " at x0=" + x0.str(),
                    session.pair(n).B.eval(x0).str(), rb, rel_tol);
        }
    }
    {
        const auto& P = session.basis().polys;
        const std::vector<std::pair<Polynomial, Polynomial>> pairs = {
            {Polynomial(Rational(1)), Polynomial::x()},
            {P.at(1), P.at(2)},
            {Polynomial(Rational(1)), Polynomial::monomial(2)}};
        int idx = 0;
        for (const auto& [f, g] : pairs)
            add("(1.14) integration by parts pair " + std::to_string(idx++), "0",
                integration_by_parts_residual(session.family(), ctx, f, g, bits), abs_tol);
    }
    for (const Rational& a : {Rational(1, 2), Rational(3, 2)}) {
        Real exact = pow(to_real(ctx.q()), -to_real(a)) - 1;
        add("I-ratio a=" + a.str(), real_str(exact), i_ratio_residual(ctx, a, bits), rel_tol);
    }
    return rows;
}

}  // namespace qladder
