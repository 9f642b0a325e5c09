#ifndef EFM_BOUNDS_HPP
#define EFM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "efm/cosine_poly.hpp"
#include "efm/theta_set.hpp"
#include "efm/weil_poly.hpp"

namespace efm {

/// The three bound regimes, keyed by the forced constant term u_0.
enum class Regime { U0One, U0Zero, U0MinusOne };

QField regime_u0(Regime r);
std::string regime_name(Regime r);
Regime regime_from_name(const std::string& name);

/// Condition (a) comes in two strengths: the classical unrestricted bound
/// needs u_n >= 0 for all n >= 1; the restricted bounds only constrain
/// n >= 2 and leave u_1 free.
enum class CoeffVariant { AllNonneg, TailNonneg };

struct ConditionFlags {
    bool a = false;
    bool b = false;
    std::optional<bool> c;            // set iff a symmetry order m was supplied
    std::optional<bool> d;            // set for the genus regime
    std::optional<QField> witness_b;  // point with f < 0 when (b) fails
};

/// Per-condition evaluation; throws RegimeMismatchError when u_0 does not
/// match the regime. Condition (c) is checked against a caller-supplied
/// symmetry order m > deg(psi); condition (d) is psi(1/r) = 0.
ConditionFlags check_conditions(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                                Regime regime, CoeffVariant variant = CoeffVariant::TailNonneg,
                                std::optional<int> m = std::nullopt);

struct Bound {
    enum class Kind {
        Linear,    // N <= slope * g + intercept
        Constant,  // N <= value
        GenusCap,  // 2g <= value
        Combined,  // N * psi(1/r) + 2g <= value
    };
    Kind kind;
    QField slope;      // Linear only
    QField intercept;  // Linear only
    QField value;      // Constant / GenusCap / Combined
};

/// Equality conditions: the bound is attained only when N_n = N_1 for every
/// listed n and f vanishes at every Frobenius angle.
struct Tightness {
    std::vector<int> equal_point_counts;
    bool f_vanishes_on_angles = true;
};

/// A verified record tying (f, theta, q, regime) to a proven inequality.
/// Only emitted with every applicable condition checked true.
struct BoundCertificate {
    Regime regime;
    CoeffVariant variant;
    CosinePoly f;
    ThetaSet theta;
    Int q;
    QField psi_r;
    QField psi_rinv;
    Bound bound;
    ConditionFlags conditions;
    Tightness tightness;
    std::optional<int> m;  // symmetry order when condition (c) was used
};

/// u_0 = 1: N <= (2/psi(1/r)) g + (psi(r) + psi(1/r))/psi(1/r) for any curve
/// over F_q with all Frobenius angles in theta.
BoundCertificate bound_u0_one(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                              CoeffVariant variant = CoeffVariant::TailNonneg,
                              std::optional<int> m = std::nullopt);

/// u_0 = 0: the genus-free bound N <= 1 + psi(r)/psi(1/r). With condition (c)
/// for some m the value is asserted to equal r^m + 1 exactly.
BoundCertificate bound_u0_zero(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                               std::optional<int> m = std::nullopt);

/// u_0 = -1: with condition (d) the genus cap 2g <= psi(r); when (d) fails
/// but psi(1/r) > 0 the combined form N psi(1/r) + 2g <= psi(r) + psi(1/r)
/// is emitted instead.
BoundCertificate bound_u0_minus_one(const CosinePoly& f, const ThetaSet& theta, const Int& q);

/// Exact check that the zeta data w satisfies the certified inequality.
bool certificate_holds_for(const BoundCertificate& cert, const WeilPoly& w);

/// N <= floor(...) for integer consumers; Linear bounds need the genus.
Int rounded_point_bound(const BoundCertificate& cert, const Int& genus);

struct SlackTerm {
    int n;
    QField value;  // u_n (N_n - N_1) r^{-n}
};

/// Both sides of the summed power-sum identity
///   N_1 psi(1/r) + sum_{n>=2} u_n (N_n - N_1) r^{-n}
///     = 2 u_0 g + psi(r) + psi(1/r) - 2 sum_j f(theta_j),
/// evaluated exactly; lhs = rhs always (it is an identity, asserted inside).
struct IdentityResult {
    QField lhs;
    QField rhs;
    std::vector<SlackTerm> slack;  // nonzero u_n terms, n >= 2
    QField angle_term;             // 2 sum_j f(theta_j)
};
IdentityResult explicit_formula_identity(const CosinePoly& f, const WeilPoly& w);

/// Contrapositive statement: a curve over F_q beating the certified bound has
/// a Frobenius angle with cos(theta) in the excluded x-range. The range is
/// (excluded_lo, excluded_hi), closed at the lower end iff lo_closed (that is
/// the theta = pi endpoint when f is not nonnegative there).
struct ExclusionCertificate {
    BoundCertificate base;
    QField excluded_lo;
    QField excluded_hi;
    bool lo_closed;
};

/// Runs the regime's bound operation on [0,pi] \ (alpha, beta) given in
/// x-coordinates (so beta_x = cos beta < cos alpha = alpha_x). When
/// beta_x = -1, `theta_includes_pi` selects whether the angle pi itself stays
/// allowed (excluded range open) or is excluded with the band (range closed
/// at -1; required when f(pi) < 0).
ExclusionCertificate exclusion_certificate(const CosinePoly& f, const Int& q,
                                           const QField& alpha_x, const QField& beta_x,
                                           Regime regime, bool theta_includes_pi = true,
                                           CoeffVariant variant = CoeffVariant::TailNonneg,
                                           std::optional<int> m = std::nullopt);

}  // namespace efm

#endif
