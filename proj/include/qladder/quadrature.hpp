#ifndef QLADDER_QUADRATURE_HPP
#define QLADDER_QUADRATURE_HPP

#include <functional>
#include <string>
#include <vector>

#include "qladder/highprec.hpp"
#include "qladder/ladder_verifier.hpp"

namespace qladder {

struct QuadResult {
    Real value;
    Real error_estimate;  // difference between the last two refinement levels
    long evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<Real(const Real&)>;

/// Integral over (0, infinity). The substitution x = e^t maps to the whole
/// line (turning the SW weight into a Gaussian), then t = sinh(u) makes the
/// decay double exponential; the trapezoid rule in u is refined by halving
/// until successive levels agree to the working precision or the level cap
/// is hit.
QuadResult integrate_halfline(const Integrand& f, unsigned bits, int level_cap = 12);

/// Numeric validation of the integral definitions behind the exact layer.
/// All comparisons are ratios against the total weight integral so that the
/// SW constant and the unfixed zeta_0 cancel.
class NumericChecker {
  public:
    NumericChecker(const VerifierSession& session, unsigned bits);

    Real weight(const Real& x) const;
    const QuadResult& total_weight() const { return total_weight_; }

    /// SW only: total weight against the closed Gaussian form
    /// sqrt(2 pi ln(1/q)) exp(ln(1/q)/2); relative residual.
    Real sw_total_weight_residual() const;

    /// Quadrature m_k/m_0 against the exact moment ratio; relative residual.
    Real moment_ratio_residual(long k) const;

    /// int w P_m P_n: for m != n the residual is |I|/sqrt(zeta_m zeta_n);
    /// for m = n it is relative to zeta_n.
    Real orthogonality_residual(long m, long n) const;

    /// first:  |int u P_n(y) P_n(y/q) w| / zeta_n            (target 0)
    /// second: relative error of int u P_{n+1}(y) P_n(y/q) w / zeta_n
    ///         against (1-q^{n+1}) q/(1-q)
    std::pair<Real, Real> u_moment_residuals(long n) const;

    /// Relative errors of the divided-difference integrals against the
    /// closed-form A_n(x0) and B_n(x0). The B entry is meaningful for n >= 1.
    std::pair<Real, Real> ladder_integral_residuals(long n, const Rational& x0) const;

    /// int P_j(y) P_j(y/q) w / zeta_j against q^{-j}; relative residual.
    Real qshift_norm_residual(long j) const;

  private:
    Real zeta_numeric(long n) const;  // zeta_n/zeta_0 * int w
    const VerifierSession& s_;
    unsigned bits_;
    QuadResult total_weight_;
};

/// q-analogue of integration-by-parts, evaluated numerically:
///   int f D_q g dx + (1/q) int g D_{q^-1} f dx  with f = fpoly * w, g = gpoly.
/// Throws if the integrability hypothesis fails (q-Laguerre with alpha < 1
/// and gpoly(0) != 0). Returns the residual normalized by the larger term.
Real integration_by_parts_residual(const WeightFamily& family, const QContext& ctx,
                                   const Polynomial& fpoly, const Polynomial& gpoly,
                                   unsigned bits);

/// int y^a wtilde / int y^{a-1} wtilde with wtilde = 1/(-y;q)_infty, against
/// q^{-a} - 1. Rejects integer a (pole of the closed form). Relative residual.
Real i_ratio_residual(const QContext& ctx, const Rational& a, unsigned bits);

/// One row of the numeric report.
struct NumericCheckRow {
    std::string label;
    std::string target;
    std::string residual;
    std::string tolerance;
    bool passed = false;
};

/// Runs the full numeric battery for one family at the given precision:
/// weight integral, moment ratios, orthogonality, u-moment identities,
/// ladder integral definitions, q-shifted norms, integration by parts, and
/// (once, family independent) the I-ratio checks. Residual tolerances are
/// 10^{-rel_exp} relative and 10^{-abs_exp} absolute for zero targets.
std::vector<NumericCheckRow> run_numeric_checks(const VerifierSession& session, unsigned bits,
                                                long nmax, int rel_exp = 20, int abs_exp = 25);

}  // namespace qladder

#endif
