#include "efm/qfield.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace efm {

bool is_squarefree(const Int& n) {
    if (n < 0) return false;
    if (n <= 3) return true;
    Int m = n;
    if (m % 4 == 0) return false;
    while (m % 2 == 0) m /= 2;
    for (Int p = 3; p * p <= m; p += 2) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

SquarefreeSplit squarefree_split(const Int& n) {
    if (n < 0) throw InvalidRadicandError("squarefree_split: negative argument");
    SquarefreeSplit out{1, 1};
    if (n == 0) return {0, 0};
    Int m = n;
    for (Int p = 2; p * p <= m; p = (p == 2 ? Int(3) : Int(p + 2))) {
        int mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        for (int i = 0; i + 1 < mult; i += 2) out.scale *= p;
        if (mult % 2 == 1) out.radicand *= p;
    }
    out.radicand *= m;  // leftover prime
    return out;
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("parse_rational: zero denominator in \"" + s + "\"");
        return Rational(num) / Rational(den);  // division canonicalizes
    } catch (const std::runtime_error&) {
        throw InputError("parse_rational: malformed rational \"" + s + "\"");
    }
}

std::string rational_to_string(const Rational& r) { return r.str(); }

QField::QField(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0 || !is_squarefree(d_))
        throw InvalidRadicandError("QField: radicand " + d_.str() + " is negative or not squarefree");
    if (d_ == 0) {
        b_ = 0;
    } else if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

QField QField::sqrt_of(const Int& n) {
    if (n < 0) throw InvalidRadicandError("sqrt_of: negative argument");
    auto split = squarefree_split(n);
    if (split.radicand <= 1) return QField(Rational(split.scale));
    return QField(Rational(0), Rational(split.scale), split.radicand);
}

const Rational& QField::rational() const {
    if (b_ != 0) throw DomainError("QField::rational: value " + str() + " is irrational");
    return a_;
}

int QField::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with d*b^2.
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(d_) * b_ * b_;
    const int cmp = lhs.compare(rhs);
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

QField QField::conjugate() const { return b_ == 0 ? *this : QField(a_, -b_, d_); }

QField QField::inverse() const {
    if (is_zero()) throw ArithmeticError("QField: division by zero");
    if (b_ == 0) return QField(1 / a_);
    const Rational norm = a_ * a_ - d_ * b_ * b_;  // nonzero: d squarefree > 1
    return QField(a_ / norm, -b_ / norm, d_);
}

QField QField::operator-() const { return b_ == 0 ? QField(-a_) : QField(-a_, -b_, d_); }

const Int& QField::common_radicand(const QField& x, const QField& y) {
    if (x.d_ == y.d_ || y.b_ == 0) return x.d_;
    if (x.b_ == 0) return y.d_;
    throw RadicandMismatchError("QField: mixed radicands " + x.d_.str() + " and " + y.d_.str());
}

QField operator+(const QField& x, const QField& y) {
    const Int& d = QField::common_radicand(x, y);
    return QField(x.a_ + y.a_, x.b_ + y.b_, d);
}

QField operator-(const QField& x, const QField& y) {
    const Int& d = QField::common_radicand(x, y);
    return QField(x.a_ - y.a_, x.b_ - y.b_, d);
}

QField operator*(const QField& x, const QField& y) {
    const Int& d = QField::common_radicand(x, y);
    return QField(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QField operator/(const QField& x, const QField& y) { return x * y.inverse(); }

double QField::to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    return v;
}

std::string QField::str() const {
    if (b_ == 0) return a_.str();
    std::ostringstream os;
    if (a_ != 0) os << a_.str() << (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) os << "-";
    const Rational babs = abs(b_);
    if (babs != 1) os << babs.str() << "*";
    os << "sqrt(" << d_.str() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QField& x) { return os << x.str(); }

QField pow(const QField& x, long n) {
    if (n < 0) return pow(x.inverse(), -n);
    QField result(1);
    QField base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

Int floor_q(const QField& x) {
    if (x.is_rational()) {
        const Rational& r = x.rational();
        Int q;
        mpz_fdiv_q(q.backend().data(), numerator(r).backend().data(), denominator(r).backend().data());
        return q;
    }
    Int n(std::floor(x.to_double()));
    while (x < QField(Rational(n))) --n;
    while (x >= QField(Rational(n + 1))) ++n;
    return n;
}

Rational rational_between(const QField& lo, const QField& hi) {
    if (!(lo < hi)) throw DomainError("rational_between: empty interval");
    Int denom = 1;
    for (;;) {
        const Int num = floor_q(lo * QField(Rational(denom))) + 1;
        const Rational cand = Rational(num) / Rational(denom);
        if (QField(cand) < hi) return cand;
        denom *= 2;
    }
}

}  // namespace efm
