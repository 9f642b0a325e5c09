#ifndef EFM_QFIELD_HPP
#define EFM_QFIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "efm/errors.hpp"

namespace efm {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// True iff n >= 0 and no square > 1 divides n (0 and 1 count as squarefree).
bool is_squarefree(const Int& n);

/// Decomposition n = scale^2 * radicand with radicand squarefree (n >= 0).
struct SquarefreeSplit {
    Int scale;
    Int radicand;
};
SquarefreeSplit squarefree_split(const Int& n);

/// Parse "p/q" or "p" (decimal integers) into a canonical rational.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

/// An exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a squarefree nonnegative integer. Values with b == 0 are plain
/// rationals and combine freely with any radicand; two values with
/// irrational parts interoperate only if they carry the same d.
/// Normal form: if d is 0 or 1 the root is rational and b is folded into a.
/// Instances are immutable after construction.
class QField {
  public:
    QField() : a_(0), b_(0), d_(1) {}
    QField(long v) : a_(v), b_(0), d_(1) {}  // NOLINT: implicit rational embedding
    QField(Rational a) : a_(std::move(a)), b_(0), d_(1) {}

    /// a + b*sqrt(d); throws InvalidRadicandError unless d >= 0 and squarefree.
    QField(Rational a, Rational b, Int d);

    /// sqrt(n) for integer n >= 0, written s*sqrt(d) with d squarefree.
    static QField sqrt_of(const Int& n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Int& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// The rational value; throws DomainError if the value is irrational.
    const Rational& rational() const;

    /// Exact sign in {-1, 0, +1}, decided by rational comparisons only.
    int sign() const;

    QField conjugate() const;
    QField inverse() const;

    QField operator-() const;
    QField& operator+=(const QField& o) { return *this = *this + o; }
    QField& operator-=(const QField& o) { return *this = *this - o; }
    QField& operator*=(const QField& o) { return *this = *this * o; }
    QField& operator/=(const QField& o) { return *this = *this / o; }

    friend QField operator+(const QField& x, const QField& y);
    friend QField operator-(const QField& x, const QField& y);
    friend QField operator*(const QField& x, const QField& y);
    friend QField operator/(const QField& x, const QField& y);

    friend bool operator==(const QField& x, const QField& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QField& x, const QField& y) { return !(x == y); }
    friend bool operator<(const QField& x, const QField& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QField& x, const QField& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QField& x, const QField& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QField& x, const QField& y) { return (x - y).sign() >= 0; }

    double to_double() const;

    /// Human-readable form, e.g. "1/2 - 1/4*sqrt(2)".
    std::string str() const;

  private:
    Rational a_;
    Rational b_;
    Int d_;

    // Shared radicand for a binary operation; rationals adopt the other side's d.
    static const Int& common_radicand(const QField& x, const QField& y);
};

std::ostream& operator<<(std::ostream& os, const QField& x);

QField pow(const QField& x, long n);  // any integer exponent

/// Largest integer <= x, decided exactly.
Int floor_q(const QField& x);

/// Some rational strictly between lo and hi (requires lo < hi).
Rational rational_between(const QField& lo, const QField& hi);

}  // namespace efm

#endif
