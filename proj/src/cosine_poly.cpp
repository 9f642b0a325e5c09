#include "efm/cosine_poly.hpp"

#include <algorithm>

namespace efm {

namespace {

void strip_trailing_zeros(std::vector<QField>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

/// Positive rational scale that clears denominators and divides out the
/// integer content; sign-preserving, keeps Sturm chains small.
PowerPoly reduce_content(const PowerPoly& p) {
    if (p.is_zero()) return p;
    Int den_lcm = 1;
    Int num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        for (const Rational& r : {c.a(), c.b()}) {
            if (r == 0) continue;
            den_lcm = lcm(den_lcm, Int(denominator(r)));
            num_gcd = gcd(num_gcd, Int(numerator(r)));
        }
    }
    if (num_gcd == 0) return p;
    return p * QField(Rational(den_lcm) / Rational(abs(num_gcd)));
}

}  // namespace

PowerPoly::PowerPoly(std::vector<QField> coeffs) : c_(std::move(coeffs)) {
    strip_trailing_zeros(c_);
}

PowerPoly PowerPoly::monomial(int n, QField c) {
    std::vector<QField> v(n + 1, QField(0));
    v[n] = std::move(c);
    return PowerPoly(std::move(v));
}

QField PowerPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : QField(0);
}

QField PowerPoly::eval(const QField& x) const {
    QField acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PowerPoly PowerPoly::derivative() const {
    if (c_.size() <= 1) return PowerPoly();
    std::vector<QField> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * QField(Rational(i));
    return PowerPoly(std::move(d));
}

PowerPoly operator+(const PowerPoly& p, const PowerPoly& q) {
    std::vector<QField> c(std::max(p.c_.size(), q.c_.size()), QField(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return PowerPoly(std::move(c));
}

PowerPoly operator-(const PowerPoly& p, const PowerPoly& q) { return p + q * QField(-1); }

PowerPoly operator*(const PowerPoly& p, const PowerPoly& q) {
    if (p.is_zero() || q.is_zero()) return PowerPoly();
    std::vector<QField> c(p.c_.size() + q.c_.size() - 1, QField(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return PowerPoly(std::move(c));
}

PowerPoly PowerPoly::operator*(const QField& s) const {
    if (s.is_zero()) return PowerPoly();
    std::vector<QField> c(c_);
    for (auto& v : c) v *= s;
    return PowerPoly(std::move(c));
}

PolyDivMod divmod(const PowerPoly& num, const PowerPoly& den) {
    if (den.is_zero()) throw ArithmeticError("divmod: division by zero polynomial");
    std::vector<QField> rem(num.coeffs());
    const int dq = num.degree() - den.degree();
    if (dq < 0) return {PowerPoly(), num};
    std::vector<QField> quot(dq + 1, QField(0));
    const QField lead_inv = den.coeff(den.degree()).inverse();
    for (int i = num.degree(); i >= den.degree(); --i) {
        if (rem[i].is_zero()) continue;
        const QField factor = rem[i] * lead_inv;
        quot[i - den.degree()] = factor;
        for (int j = 0; j <= den.degree(); ++j) rem[i - den.degree() + j] -= factor * den.coeff(j);
    }
    return {PowerPoly(std::move(quot)), PowerPoly(std::move(rem))};
}

PowerPoly gcd(const PowerPoly& p, const PowerPoly& q) {
    PowerPoly a = reduce_content(p), b = reduce_content(q);
    while (!b.is_zero()) {
        PowerPoly r = reduce_content(divmod(a, b).rem);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.coeff(a.degree()).inverse();  // monic
}

std::vector<PowerPoly> squarefree_decomposition(const PowerPoly& p) {
    if (p.is_zero()) throw DegenerateInputError("squarefree_decomposition: zero polynomial");
    std::vector<PowerPoly> factors;
    if (p.degree() == 0) return factors;
    // Yun's algorithm over a field of characteristic zero.
    const PowerPoly dp = p.derivative();
    PowerPoly g = gcd(p, dp);
    PowerPoly b = divmod(p, g).quot;
    PowerPoly c = divmod(dp, g).quot;
    PowerPoly d = c - b.derivative();
    while (b.degree() > 0) {
        PowerPoly a = gcd(b, d);
        factors.push_back(a);
        b = divmod(b, a).quot;
        c = divmod(d, a).quot;
        d = c - b.derivative();
    }
    return factors;
}

PowerPoly odd_multiplicity_part(const PowerPoly& p) {
    PowerPoly out = PowerPoly::monomial(0);
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (i % 2 == 0) out = out * factors[i];  // multiplicity i + 1 odd
    return out;
}

namespace {

int sign_variations(const std::vector<PowerPoly>& chain, const QField& x) {
    int variations = 0;
    int last = 0;
    for (const auto& s : chain) {
        const int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++variations;
        last = sg;
    }
    return variations;
}

}  // namespace

int sturm_count(const PowerPoly& p, const QField& lo, const QField& hi) {
    if (p.is_zero()) throw DegenerateInputError("sturm_count: zero polynomial");
    if (!(lo < hi)) throw DomainError("sturm_count: need lo < hi");
    std::vector<PowerPoly> chain;
    chain.push_back(reduce_content(p));
    PowerPoly d = reduce_content(p.derivative());
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && chain.back().degree() > 0) {
        PowerPoly r = divmod(chain[chain.size() - 2], chain.back()).rem;
        if (r.is_zero()) break;
        chain.push_back(reduce_content(-r));
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

CosinePoly::CosinePoly(std::vector<QField> u) : u_(std::move(u)) {
    strip_trailing_zeros(u_);
    if (u_.empty()) u_.push_back(QField(0));
    if (degree() > kMaxDegree) throw DomainError("CosinePoly: degree above exact-mode cap 64");
    // Coefficients must live in one quadratic field; this add throws on a mix.
    QField probe(0);
    for (const auto& c : u_) probe += c;
}

CosinePoly CosinePoly::scaled(const QField& c) const {
    if (c.is_zero()) throw DomainError("CosinePoly::scaled: zero scale");
    std::vector<QField> u(u_);
    for (auto& v : u) v *= c;
    return CosinePoly(std::move(u));
}

CosinePoly CosinePoly::normalized_u0(const QField& target) const {
    if (u_[0].is_zero()) throw DomainError("CosinePoly::normalized_u0: u_0 is zero");
    return scaled(target / u_[0]);
}

PowerPoly to_power(const CosinePoly& f) {
    // Accumulate u_n * T_n(x) with the recurrence T_{n+1} = 2x T_n - T_{n-1}.
    PowerPoly acc = PowerPoly::monomial(0, f.u(0));
    PowerPoly t_prev = PowerPoly::monomial(0);  // T_0
    PowerPoly t_cur = PowerPoly::monomial(1);   // T_1
    const PowerPoly two_x = PowerPoly::monomial(1, QField(2));
    for (int n = 1; n <= f.degree(); ++n) {
        acc = acc + t_cur * f.u(n);
        PowerPoly t_next = two_x * t_cur - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return acc;
}

CosinePoly from_power(const PowerPoly& p) {
    // Horner in the Chebyshev basis: multiply by x via
    // x T_0 = T_1, x T_n = (T_{n+1} + T_{n-1}) / 2.
    std::vector<QField> cheb;  // coefficients of T_0, T_1, ...
    const QField half(Rational(1, 2));
    for (int i = p.degree(); i >= 0; --i) {
        std::vector<QField> next(cheb.empty() ? 1 : cheb.size() + 1, QField(0));
        for (std::size_t n = 0; n < cheb.size(); ++n) {
            if (cheb[n].is_zero()) continue;
            if (n == 0) {
                next[1] += cheb[0];
            } else {
                next[n + 1] += cheb[n] * half;
                next[n - 1] += cheb[n] * half;
            }
        }
        next[0] += p.coeff(i);
        cheb = std::move(next);
    }
    if (cheb.empty()) cheb.push_back(QField(0));
    return CosinePoly(std::move(cheb));
}

QField eval_f(const CosinePoly& f, const QField& x) {
    if (x < QField(-1) || x > QField(1)) throw DomainError("eval_f: x outside [-1, 1]");
    return to_power(f).eval(x);
}

QField psi_eval(const CosinePoly& f, const QField& x) {
    QField acc(0);
    for (int n = f.degree(); n >= 1; --n) acc = (acc + f.u(n)) * x;
    return acc;
}

namespace {

/// Rational witness next to an endpoint where p is strictly negative:
/// geometric shrink toward `end` from inside (other, end). Falls back to the
/// endpoint itself if the negative region is implausibly narrow.
QField endpoint_witness(const PowerPoly& p, const QField& end, const QField& other) {
    QField step = (other - end) * QField(Rational(1, 2));  // signed step into the interval
    for (int i = 0; i < 200; ++i) {
        const QField inner = end + step;
        const QField r{step.sign() > 0 ? rational_between(end, inner) : rational_between(inner, end)};
        if (p.eval(r).sign() < 0) return r;
        step = step * QField(Rational(1, 2));
    }
    return end;
}

/// A rational splitter in the middle half of (a, b) that is not a root of p.
QField non_root_splitter(const PowerPoly& p, const QField& a, const QField& b) {
    const QField quarter = (b - a) * QField(Rational(1, 4));
    QField lo = a + quarter;
    QField hi = b - quarter;
    for (int i = 0; i <= p.degree() + 1; ++i) {
        const QField m{rational_between(lo, hi)};
        if (!p.eval(m).is_zero()) return m;
        hi = m;  // probes strictly decrease, so they are pairwise distinct
    }
    throw InternalError("non_root_splitter: exhausted probes");
}

/// Rational point in (a, b) with p < 0, given that the odd-multiplicity part
/// `odd` has a root strictly inside (so p changes sign there). Sturm-guided
/// bisection: shrink toward a sign-changing root until a probe goes negative.
QField sign_change_witness(const PowerPoly& p, const PowerPoly& odd, const QField& a, const QField& b) {
    QField lo = a, hi = b;
    for (int iter = 0; iter < 100000; ++iter) {
        const QField m = non_root_splitter(p, lo, hi);
        if (p.eval(m).sign() < 0) return m;
        int left = sturm_count(odd, lo, m);
        if (odd.eval(m).is_zero()) --left;  // roots strictly inside (lo, m)
        if (left >= 1) {
            hi = m;
        } else {
            lo = m;
        }
    }
    throw InternalError("sign_change_witness: bisection did not converge");
}

}  // namespace

NonnegResult is_nonneg_on(const CosinePoly& f, const ThetaSet& s) {
    const PowerPoly p = to_power(f);
    for (const auto& pt : s.points())
        if (p.eval(pt).sign() < 0) return {false, pt};
    if (p.is_zero()) return {true, std::nullopt};

    const PowerPoly odd = p.degree() == 0 ? PowerPoly::monomial(0) : odd_multiplicity_part(p);
    for (const auto& iv : s.intervals()) {
        if (p.eval(iv.lo).sign() < 0) return {false, endpoint_witness(p, iv.lo, iv.hi)};
        if (p.eval(iv.hi).sign() < 0) return {false, endpoint_witness(p, iv.hi, iv.lo)};
        int interior_roots = 0;
        if (odd.degree() > 0) {
            interior_roots = sturm_count(odd, iv.lo, iv.hi);
            if (odd.eval(iv.hi).is_zero()) --interior_roots;
        }
        if (interior_roots > 0)
            return {false, sign_change_witness(p, odd, iv.lo, iv.hi)};
        // No sign change strictly inside: one non-root rational sample
        // decides the interior sign.
        const QField sample = non_root_splitter(p, iv.lo, iv.hi);
        if (p.eval(sample).sign() < 0) return {false, sample};
    }
    return {true, std::nullopt};
}

}  // namespace efm
