#ifndef EFM_COSINE_POLY_HPP
#define EFM_COSINE_POLY_HPP

#include <optional>
#include <vector>

#include "efm/qfield.hpp"
#include "efm/theta_set.hpp"

namespace efm {

/// Polynomial in x = cos(theta) with exact quadratic-field coefficients,
/// normalized so the trailing coefficient is nonzero (empty vector = 0).
class PowerPoly {
  public:
    PowerPoly() = default;
    explicit PowerPoly(std::vector<QField> coeffs);

    static PowerPoly monomial(int n, QField c = QField(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    QField coeff(int i) const;
    const std::vector<QField>& coeffs() const { return c_; }

    QField eval(const QField& x) const;
    PowerPoly derivative() const;

    friend PowerPoly operator+(const PowerPoly& p, const PowerPoly& q);
    friend PowerPoly operator-(const PowerPoly& p, const PowerPoly& q);
    friend PowerPoly operator*(const PowerPoly& p, const PowerPoly& q);
    PowerPoly operator*(const QField& s) const;
    PowerPoly operator-() const { return *this * QField(-1); }
    friend bool operator==(const PowerPoly& p, const PowerPoly& q) { return p.c_ == q.c_; }

  private:
    std::vector<QField> c_;
};

/// Quotient and remainder of exact polynomial division over the field.
struct PolyDivMod {
    PowerPoly quot;
    PowerPoly rem;
};
PolyDivMod divmod(const PowerPoly& num, const PowerPoly& den);

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
PowerPoly gcd(const PowerPoly& p, const PowerPoly& q);

/// Yun squarefree decomposition: result[i] is the (monic, squarefree)
/// product of the roots of p with multiplicity exactly i + 1.
std::vector<PowerPoly> squarefree_decomposition(const PowerPoly& p);

/// Product of the factors of odd multiplicity: exactly the points where
/// p changes sign.
PowerPoly odd_multiplicity_part(const PowerPoly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by a Sturm chain with exact sign evaluation. Throws DegenerateInputError
/// on the zero polynomial; requires lo < hi.
int sturm_count(const PowerPoly& p, const QField& lo, const QField& hi);

/// Auxiliary cosine polynomial f(theta) = u_0 + sum_{n>=1} u_n cos(n theta),
/// normalized so the trailing coefficient is nonzero unless degree 0.
/// Immutable; exact-mode degree is capped at 64.
class CosinePoly {
  public:
    static constexpr int kMaxDegree = 64;

    CosinePoly() : u_{QField(0)} {}
    explicit CosinePoly(std::vector<QField> u);

    int degree() const { return static_cast<int>(u_.size()) - 1; }
    QField u(int n) const { return n < static_cast<int>(u_.size()) ? u_[n] : QField(0); }
    const std::vector<QField>& coeffs() const { return u_; }
    bool is_zero() const { return u_.size() == 1 && u_[0].is_zero(); }

    /// f scaled by a nonzero constant.
    CosinePoly scaled(const QField& c) const;
    /// f scaled so that u_0 equals the given target (requires u_0 != 0).
    CosinePoly normalized_u0(const QField& target) const;

    friend bool operator==(const CosinePoly& f, const CosinePoly& g) { return f.u_ == g.u_; }

  private:
    std::vector<QField> u_;
};

/// Chebyshev image: P with P(cos theta) = f(theta); deg P = deg f.
PowerPoly to_power(const CosinePoly& f);

/// Exact inverse of to_power.
CosinePoly from_power(const PowerPoly& p);

/// f at the angle with cosine x; requires x in [-1, 1].
QField eval_f(const CosinePoly& f, const QField& x);

/// psi(x) = sum_{n>=1} u_n x^n (the constant term is excluded).
QField psi_eval(const CosinePoly& f, const QField& x);

/// Exact decision of "f >= 0 everywhere on S". When false, witness is a
/// point of S with f(witness) < 0; it is rational whenever the negative
/// locus has interior (only isolated points of S can force an irrational
/// witness).
struct NonnegResult {
    bool nonneg;
    std::optional<QField> witness;
};
NonnegResult is_nonneg_on(const CosinePoly& f, const ThetaSet& s);

}  // namespace efm

#endif
