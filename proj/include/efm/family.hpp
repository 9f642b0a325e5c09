#ifndef EFM_FAMILY_HPP
#define EFM_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efm/bigfloat.hpp"
#include "efm/bounds.hpp"
#include "efm/qfield.hpp"

namespace efm {

/// Execution policy for the batch kernels: a serial reference path and an
/// OpenMP path that must produce identical results.
enum class Exec { Serial, Parallel };

/// Residue in Q[x] / (x^m + 1), where x stands for e^{i pi / m}. The ring
/// may have zero divisors (x^m + 1 need not be irreducible); identities
/// proved here still hold at the root of interest.
class CycloElem {
  public:
    explicit CycloElem(int m);
    CycloElem(int m, std::vector<Rational> coeffs);

    /// c * x^e for any integer e, using x^m = -1 (so x has order 2m).
    static CycloElem monomial(int m, long e, Rational c = Rational(1));
    /// Quantum integer [k] = x^k - x^{-k} (equals 2i sin(k pi / m)).
    static CycloElem quantum(int m, long k);

    int m() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    CycloElem operator*(const Rational& s) const;
    friend bool operator==(const CycloElem& a, const CycloElem& b) = default;

    /// Value at x = e^{i pi / m}; for the real elements used here the
    /// imaginary part vanishes to working precision.
    struct Complex {
        BigFloat re;
        BigFloat im;
    };
    Complex eval_at_root() const;

    std::string str() const;  // e.g. "1 - 1/2*x^3"

  private:
    int m_;
    std::vector<Rational> c_;  // exactly m entries
};

/// The cubic Gaussian binomial [n+1 choose 3]_y as an exact polynomial
/// quotient in Q[y], reduced at y = x^2 in Q[x]/(x^m + 1).
/// Requires 2 <= n <= m - 2.
CycloElem gauss_binom3(int n, int m);

/// Coefficients u_2 .. u_{m-2} of the degree-(m-2) family member, exact in
/// the cyclotomic ring (from shifted Gaussian binomials) plus high-precision
/// values from the sine-product formula. Symmetry u_n = u_{m-n}, the
/// quantum-product defining relation and numeric positivity are all checked
/// at construction. Requires m >= 4.
struct FamilyCoefficients {
    int m;
    std::vector<CycloElem> u;  // u[n] for n = 0..m, entries outside [2, m-2] zero
    std::vector<BigFloat> u_float;
};
FamilyCoefficients family_coefficients(int m);

/// Coefficient-wise ring verification of
///   (sum u_n t^n) (t + 1/t - (x + 1/x)) (t + 1/t - (x^3 + 1/x^3)) = 1 + t^m
/// after clearing t-denominators.
bool family_identity_holds(const std::vector<CycloElem>& u, int m);
bool family_identity_check(int m);

/// Max deviation over random angles between sum u_n cos(n theta) and the
/// product form 2^{m-3} prod_{k=2}^{m-1} (cos theta - cos((2k+1) pi / m)).
BigFloat family_product_max_deviation(int m, int samples, std::uint64_t seed,
                                      Exec exec = Exec::Serial);
bool family_product_check(int m, int samples, std::uint64_t seed = 0x5eed);

struct FamilySweepEntry {
    int m;
    bool identity_ok;
};
std::vector<FamilySweepEntry> family_identity_sweep(int m_lo, int m_hi, Exec exec = Exec::Serial);

/// The certified statement: a curve over F_q with N > r^m + 1 has a
/// Frobenius angle in (pi/m, 3pi/m). Runs the exact bound engine whenever
/// the angle-set endpoints live in the session field (m in {2,3,4,6} with a
/// matching radicand), and the family ring/numeric verification otherwise.
struct ThresholdStatement {
    int m;
    Int q;
    QField threshold;  // r^m + 1
    bool exact_path;
    std::optional<BoundCertificate> certificate;  // set on the exact path
    bool identity_ok = true;
    bool product_ok = true;
    std::string excluded_angles;  // e.g. "(pi/4, 3pi/4)"
};
ThresholdStatement family_threshold(int m, const Int& q, int samples = 50);

}  // namespace efm

#endif
