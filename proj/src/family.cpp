#include "efm/family.hpp"

#include <omp.h>

#include <boost/math/constants/constants.hpp>
#include <random>
#include <sstream>

#include "efm/datasets.hpp"

namespace efm {

BigFloat to_bigfloat(const QField& x) {
    BigFloat v(x.a());
    if (x.b() != 0) v += BigFloat(x.b()) * sqrt(BigFloat(x.d()));
    return v;
}

BigFloat big_pi() { return boost::math::constants::pi<BigFloat>(); }

CycloElem::CycloElem(int m) : m_(m), c_(m, Rational(0)) {
    if (m < 1) throw DomainError("CycloElem: m must be >= 1");
}

CycloElem::CycloElem(int m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
    if (m < 1) throw DomainError("CycloElem: m must be >= 1");
    if (static_cast<int>(c_.size()) != m)
        throw DomainError("CycloElem: coefficient vector must have length m");
}

CycloElem CycloElem::monomial(int m, long e, Rational c) {
    CycloElem out(m);
    long r = e % (2L * m);  // x^{2m} = 1
    if (r < 0) r += 2L * m;
    if (r >= m) {
        out.c_[r - m] = -c;  // x^m = -1
    } else {
        out.c_[r] = c;
    }
    return out;
}

CycloElem CycloElem::quantum(int m, long k) {
    return monomial(m, k) - monomial(m, -k);
}

bool CycloElem::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    if (a.m_ != b.m_) throw DomainError("CycloElem: mixed ring degrees");
    CycloElem out(a.m_);
    for (int i = 0; i < a.m_; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    if (a.m_ != b.m_) throw DomainError("CycloElem: mixed ring degrees");
    CycloElem out(a.m_);
    for (int i = 0; i < a.m_; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (a.m_ != b.m_) throw DomainError("CycloElem: mixed ring degrees");
    CycloElem out(a.m_);
    for (int i = 0; i < a.m_; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < b.m_; ++j) {
            if (b.c_[j] == 0) continue;
            const int k = i + j;
            if (k >= a.m_) {
                out.c_[k - a.m_] -= a.c_[i] * b.c_[j];
            } else {
                out.c_[k] += a.c_[i] * b.c_[j];
            }
        }
    }
    return out;
}

CycloElem CycloElem::operator*(const Rational& s) const {
    CycloElem out(m_);
    for (int i = 0; i < m_; ++i) out.c_[i] = c_[i] * s;
    return out;
}

CycloElem::Complex CycloElem::eval_at_root() const {
    const BigFloat alpha = big_pi() / m_;
    Complex out{BigFloat(0), BigFloat(0)};
    for (int k = 0; k < m_; ++k) {
        if (c_[k] == 0) continue;
        const BigFloat coeff(c_[k]);
        out.re += coeff * cos(k * alpha);
        out.im += coeff * sin(k * alpha);
    }
    return out;
}

std::string CycloElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < m_; ++k) {
        if (c_[k] == 0) continue;
        const Rational mag = abs(c_[k]);
        if (first) {
            if (c_[k] < 0) os << "-";
            first = false;
        } else {
            os << (c_[k] < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

/// Dense rational polynomials in one variable; just enough for the exact
/// Gaussian-binomial quotient.
using RatPoly = std::vector<Rational>;

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly rp_pow_minus_one(int k) {  // y^k - 1
    RatPoly out(k + 1, Rational(0));
    out[0] = -1;
    out[k] = 1;
    return out;
}

RatPoly rp_divexact(RatPoly num, const RatPoly& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw InternalError("rp_divexact: degree underflow");
    RatPoly quot(dn - dd + 1, Rational(0));
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        const Rational factor = num[i] / den[dd];
        quot[i - dd] = factor;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= factor * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw InternalError("rp_divexact: nonzero remainder");
    return quot;
}

/// Polynomials in t with CycloElem coefficients (index = power of t).
using TPoly = std::vector<CycloElem>;

TPoly tp_mul(const TPoly& a, const TPoly& b, int m) {
    TPoly out(a.size() + b.size() - 1, CycloElem(m));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

}  // namespace

CycloElem gauss_binom3(int n, int m) {
    if (n < 2 || n > m - 2) throw DomainError("gauss_binom3: need 2 <= n <= m - 2");
    const RatPoly num =
        rp_mul(rp_mul(rp_pow_minus_one(n + 1), rp_pow_minus_one(n)), rp_pow_minus_one(n - 1));
    const RatPoly den =
        rp_mul(rp_mul(rp_pow_minus_one(3), rp_pow_minus_one(2)), rp_pow_minus_one(1));
    const RatPoly quot = rp_divexact(num, den);
    CycloElem out(m);
    for (std::size_t j = 0; j < quot.size(); ++j) {
        if (quot[j] == 0) continue;
        out = out + CycloElem::monomial(m, 2 * static_cast<long>(j), quot[j]);  // y = x^2
    }
    return out;
}

FamilyCoefficients family_coefficients(int m) {
    if (m < 4) throw DomainError("family_coefficients: m must be >= 4");
    FamilyCoefficients out;
    out.m = m;
    out.u.assign(m + 1, CycloElem(m));
    out.u_float.assign(m + 1, BigFloat(0));

    // Division by [1][2][3] is avoided (the quotient ring has zero divisors):
    // u_n comes from the Gaussian binomial times a monomial shift, and the
    // defining relation u_n * [1][2][3] = [n-1][n][n+1] is verified instead.
    const CycloElem denom = CycloElem::quantum(m, 1) * CycloElem::quantum(m, 2) *
                            CycloElem::quantum(m, 3);
    for (int n = 2; n <= m - 2; ++n) {
        out.u[n] = gauss_binom3(n, m) * CycloElem::monomial(m, 6 - 3L * n);
        const CycloElem expected = CycloElem::quantum(m, n - 1) * CycloElem::quantum(m, n) *
                                   CycloElem::quantum(m, n + 1);
        if (!(out.u[n] * denom == expected))
            throw InternalError("family_coefficients: quantum-product relation failed");
    }
    for (int n = 0; n <= m; ++n) {
        if (!(out.u[n] == out.u[m - n]))
            throw InternalError("family_coefficients: symmetry u_n = u_{m-n} failed");
    }

    const BigFloat alpha = big_pi() / m;
    const BigFloat den_f = sin(alpha) * sin(2 * alpha) * sin(3 * alpha);
    BigFloat largest(0);
    for (int n = 2; n <= m - 2; ++n) {
        out.u_float[n] = sin((n - 1) * alpha) * sin(n * alpha) * sin((n + 1) * alpha) / den_f;
        if (abs(out.u_float[n]) > largest) largest = abs(out.u_float[n]);
    }
    const BigFloat margin = BigFloat("1e-30") * (largest > 1 ? largest : BigFloat(1));
    for (int n = 2; n <= m - 2; ++n) {
        if (!(out.u_float[n] > margin))
            throw InternalError("family_coefficients: positivity check failed");
    }
    return out;
}

bool family_identity_holds(const std::vector<CycloElem>& u, int m) {
    // Clear t-denominators: (sum u_n t^n) (t^2 - (x + 1/x) t + 1)
    //                                     (t^2 - (x^3 + 1/x^3) t + 1) = t^2 (1 + t^m).
    TPoly a(m - 1, CycloElem(m));
    for (int n = 2; n <= m - 2 && n < static_cast<int>(u.size()); ++n) a[n] = u[n];
    const CycloElem one = CycloElem::monomial(m, 0);
    const CycloElem cos1 = CycloElem::monomial(m, 1) + CycloElem::monomial(m, -1);
    const CycloElem cos3 = CycloElem::monomial(m, 3) + CycloElem::monomial(m, -3);
    const TPoly b{one, CycloElem(m) - cos1, one};
    const TPoly c{one, CycloElem(m) - cos3, one};
    const TPoly lhs = tp_mul(tp_mul(a, b, m), c, m);

    TPoly rhs(m + 3, CycloElem(m));
    rhs[2] = one;
    rhs[m + 2] = one;
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(lhs[i] == rhs[i])) return false;
    return true;
}

bool family_identity_check(int m) { return family_identity_holds(family_coefficients(m).u, m); }

BigFloat family_product_max_deviation(int m, int samples, std::uint64_t seed, Exec exec) {
    const FamilyCoefficients fam = family_coefficients(m);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> fractions(samples);
    for (auto& v : fractions) v = unit(rng);

    const BigFloat pi = big_pi();
    const BigFloat alpha = pi / m;
    std::vector<BigFloat> deviation(samples, BigFloat(0));

    const auto eval_one = [&](int i) {
        const BigFloat theta = pi * BigFloat(fractions[i]);
        BigFloat series(0);
        for (int n = 2; n <= m - 2; ++n) series += fam.u_float[n] * cos(n * theta);
        BigFloat product = pow(BigFloat(2), m - 3);
        const BigFloat c = cos(theta);
        for (int k = 2; k <= m - 1; ++k) product *= c - cos((2 * k + 1) * alpha);
        deviation[i] = abs(series - product);
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < samples; ++i) eval_one(i);
    } else {
        for (int i = 0; i < samples; ++i) eval_one(i);
    }

    BigFloat max_dev(0);
    for (const auto& d : deviation)
        if (d > max_dev) max_dev = d;
    return max_dev;
}

bool family_product_check(int m, int samples, std::uint64_t seed) {
    return family_product_max_deviation(m, samples, seed) < BigFloat("1e-20");
}

std::vector<FamilySweepEntry> family_identity_sweep(int m_lo, int m_hi, Exec exec) {
    if (m_lo < 4 || m_hi < m_lo) throw DomainError("family_identity_sweep: bad range");
    std::vector<FamilySweepEntry> out(m_hi - m_lo + 1);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int m = m_lo; m <= m_hi; ++m) out[m - m_lo] = {m, family_identity_check(m)};
    } else {
        for (int m = m_lo; m <= m_hi; ++m) out[m - m_lo] = {m, family_identity_check(m)};
    }
    return out;
}

namespace {

std::string excluded_angle_text(int m) {
    if (m == 2) return "(pi/2, pi]";  // 3pi/2 leaves [0, pi]; a negative trace's angle
    if (m == 3) return "(pi/3, pi)";
    std::ostringstream os;
    os << "(pi/" << m << ", 3pi/" << m << ")";
    return os.str();
}

/// Exact x-coordinates of cos(pi/m), cos(3pi/m) in Q(sqrt d), when they
/// exist (m in {2, 3, 4, 6}).
std::optional<std::pair<QField, QField>> exact_band_endpoints(int m, const Int& d) {
    switch (m) {
        case 2: return std::make_pair(QField(0), QField(-1));
        case 3: return std::make_pair(QField(Rational(1, 2)), QField(-1));
        case 4:
            if (d == 2) {
                const QField half_rt2(Rational(0), Rational(1, 2), 2);
                return std::make_pair(half_rt2, -half_rt2);
            }
            return std::nullopt;
        case 6:
            if (d == 3)
                return std::make_pair(QField(Rational(0), Rational(1, 2), 3), QField(0));
            return std::nullopt;
        default: return std::nullopt;
    }
}

/// The family polynomial with QField coefficients, for the exactly
/// representable orders.
CosinePoly exact_family_poly(int m) {
    switch (m) {
        case 2: return datasets::poly("cos");
        case 3: return datasets::poly("cos12");
        case 4: return CosinePoly({QField(0), QField(0), QField(1)});
        case 6:
            return CosinePoly({QField(0), QField(0), QField(1),
                               QField(Rational(0), Rational(1), 3), QField(1)});
        default: throw InternalError("exact_family_poly: unsupported order");
    }
}

}  // namespace

ThresholdStatement family_threshold(int m, const Int& q, int samples) {
    if (m < 2) throw DomainError("family_threshold: m must be >= 2");
    if (q < 2) throw DomainError("family_threshold: q must be >= 2");
    ThresholdStatement out;
    out.m = m;
    out.q = q;
    out.threshold = pow(QField::sqrt_of(q), m) + QField(1);
    out.excluded_angles = excluded_angle_text(m);

    if (m >= 4) {
        out.identity_ok = family_identity_check(m);
        out.product_ok = family_product_check(m, samples);
    }

    const Int d = squarefree_split(q).radicand;
    const auto endpoints = exact_band_endpoints(m, d);
    out.exact_path = endpoints.has_value();
    if (out.exact_path) {
        const auto [alpha_x, beta_x] = *endpoints;
        // m = 2 excludes theta = pi itself (a negative trace's angle);
        // for m = 3 the polynomial vanishes at pi so the point stays allowed.
        const bool keep_pi = m != 2;
        const ThetaSet theta = (beta_x == QField(-1) && !keep_pi)
                                   ? ThetaSet({{alpha_x, QField(1)}}, {})
                                   : ThetaSet::complement_of_interval(alpha_x, beta_x);
        out.certificate = bound_u0_zero(exact_family_poly(m), theta, q, m);
        if (out.certificate->bound.value != out.threshold)
            throw InternalError("family_threshold: exact bound disagrees with r^m + 1");
    }
    return out;
}

}  // namespace efm
