#ifndef EFM_WEIL_POLY_HPP
#define EFM_WEIL_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "efm/qfield.hpp"

namespace efm {

/// One quadratic factor (1 + aT + qT^2)^e of a zeta numerator. The inverse
/// roots of 1 + aT + qT^2 sum to -a (so a is minus the Frobenius trace
/// contribution of the factor).
struct QuadraticFactor {
    Int a;
    int e;
};

/// Zeta numerator P(T) of a curve over F_q whose Jacobian splits into
/// elliptic factors: a multiset of quadratic factors. Construction does not
/// enforce the Weil bound a^2 <= 4q; run validate() to check it.
class WeilPoly {
  public:
    WeilPoly(Int q, std::vector<QuadraticFactor> factors);

    const Int& q() const { return q_; }
    const std::vector<QuadraticFactor>& factors() const { return factors_; }
    Int genus() const;

  private:
    Int q_;
    std::vector<QuadraticFactor> factors_;
};

/// Point counts N_1 .. N_M over the extension tower.
struct PointCounts {
    std::vector<Int> N;  // N[m-1] = N_m
    const Int& at(int m) const { return N.at(m - 1); }
};

/// N_m = q^m + 1 - sum over factors of e * s_m, where s_m is the power sum
/// of the factor's inverse roots (s_0 = 2, s_1 = -a, s_m = -a s_{m-1} - q s_{m-2}).
PointCounts point_counts(const WeilPoly& w, int M);

/// Frobenius angles as x = cos(theta) = -a / (2 sqrt q), with multiplicities.
std::vector<std::pair<QField, int>> angle_multiset(const WeilPoly& w);

/// Weil bound per factor, N_m >= 0 and N_{dm} >= N_m up to M.
struct ValidationReport {
    bool pass;
    std::string first_violation;  // empty when pass
};
ValidationReport validate(const WeilPoly& w, int M);

}  // namespace efm

#endif
