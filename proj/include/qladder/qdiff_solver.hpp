#ifndef QLADDER_QDIFF_SOLVER_HPP
#define QLADDER_QDIFF_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "qladder/weights.hpp"

namespace qladder {

/// First-order linear difference equation in normalized forward form
///   x_{n+1} = a_n x_n + b_n,  given x_0.
/// The label records which printed equation (and conversion) it encodes.
struct FirstOrderRecurrence {
    std::string label;
    Rational x0;
    std::function<std::pair<Rational, Rational>(long)> coeffs;  // n -> (a_n, b_n)
};

/// x_0 .. x_N, exactly.
std::vector<Rational> solve_forward(const FirstOrderRecurrence& rec, long N);

/// sum_{j=0}^{n-1} seq[j].
Rational telescope_sum(const std::vector<Rational>& seq, long n);

/// For each n in 0..N-1, whether candidate[n+1] = a_n candidate[n] + b_n holds.
std::vector<bool> verify_solution(const FirstOrderRecurrence& rec,
                                  const std::vector<Rational>& candidate, long N);

// The paper's difference equations, converted to forward form.

/// SW residue equation q R_n - R_{n-1} = -(1+q) q^{n-1}, R_0 = 1/(1-q).
FirstOrderRecurrence sw_R_recurrence(const QContext& ctx);
/// SW residue equation r_n - q r_{n+1} = 1/sqrt(q), r_0 = 0.
FirstOrderRecurrence sw_r_recurrence(const QContext& ctx);
/// qLag r_{n+1} - q r_n = -q^n alpha_n - 1, r_0 = 0.
FirstOrderRecurrence qlag_r_recurrence(const WeightFamily& family, const QContext& ctx);
/// qLag p1 equation in the integrating-factor scaling x_n = p1(n) q^{2n-2}.
FirstOrderRecurrence qlag_p1_scaled_recurrence(const WeightFamily& family, const QContext& ctx);
/// qLag beta equation in the scaling x_n = beta_n q^{2n-1}.
FirstOrderRecurrence qlag_beta_scaled_recurrence(const WeightFamily& family, const QContext& ctx);
/// The printed (inconsistent) first-order equation for the qLag R_n:
/// q R_{n+1} - R_n = q^{n+1} - q^n, R_0 = 1/(1-q).
FirstOrderRecurrence qlag_R_printed_recurrence(const QContext& ctx);

}  // namespace qladder

#endif
