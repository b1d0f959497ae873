#ifndef QLADDER_WEIGHTS_HPP
#define QLADDER_WEIGHTS_HPP

#include <map>
#include <string>

#include "qladder/highprec.hpp"
#include "qladder/qcontext.hpp"
#include "qladder/rational_function.hpp"

namespace qladder {

/// The two weight families on (0, infinity):
///   Stieltjes-Wigert  w(x) = exp((ln x)^2 / (2 ln q))       (constant c := 1)
///   q-Laguerre        w(x) = x^alpha / (-x; q)_infty
///
/// The exact pipeline (moments, residues, ladder identities) requires integer
/// alpha >= 1 for q-Laguerre so that q^{-alpha} is rational and the 1/x
/// residue integrals converge; non-integer alpha > -1 is supported only
/// through the numeric weight evaluation.
struct WeightFamily {
    enum class Tag { StieltjesWigert, QLaguerre };

    Tag tag = Tag::StieltjesWigert;
    Rational alpha = Rational(0);  // q-Laguerre only

    static WeightFamily stieltjes_wigert() { return {Tag::StieltjesWigert, Rational(0)}; }
    static WeightFamily q_laguerre(Rational a) { return {Tag::QLaguerre, std::move(a)}; }

    bool is_sw() const { return tag == Tag::StieltjesWigert; }
    bool is_qlag() const { return tag == Tag::QLaguerre; }
    /// Integer alpha >= 1, the precondition of every exact q-Laguerre path.
    bool exact_path_ok() const;
    /// alpha as a long; exact path only.
    long alpha_int() const;

    std::string name() const;
};

/// u(x) = -D_{q^{-1}} w(x) / w(x), in canonical rational-function form.
///   SW:   u(x) = q/(1-q) * (1/x - sqrt(q)/x^2)
///   qLag: u(x) = q/(1-q) * ((1 - q^{-alpha})/x + q^{-alpha}/(x + q))
RationalFunction potential(const WeightFamily& family, const QContext& ctx);

/// Exact moment ratios m_k / m_0 of the weight, k >= -1.
///   SW:   m_k/m_0 = s^{-k(k+2)}          (s = sqrt q)
///   qLag: m_k/m_0 = prod_{j=1..k} (q^{-(alpha+j)} - 1),
///         m_{-1}/m_0 = 1/(q^{-alpha} - 1)   (needs alpha >= 1)
class MomentLadder {
  public:
    MomentLadder(WeightFamily family, QContext ctx);

    const WeightFamily& family() const { return family_; }
    const QContext& ctx() const { return ctx_; }

    Rational ratio(long k) const;

  private:
    WeightFamily family_;
    QContext ctx_;
    mutable std::map<long, Rational> memo_;
};

/// Numeric weight value at x > 0. The q-Laguerre infinite product is
/// truncated per q_pochhammer_inf's bound.
Real weight_eval_numeric(const WeightFamily& family, const QContext& ctx, const Real& x,
                         unsigned bits);

}  // namespace qladder

#endif
