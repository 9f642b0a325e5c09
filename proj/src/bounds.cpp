#include "efm/bounds.hpp"

namespace efm {

QField regime_u0(Regime r) {
    switch (r) {
        case Regime::U0One: return QField(1);
        case Regime::U0Zero: return QField(0);
        case Regime::U0MinusOne: return QField(-1);
    }
    throw InternalError("regime_u0: bad enum");
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::U0One: return "u0_one";
        case Regime::U0Zero: return "u0_zero";
        case Regime::U0MinusOne: return "u0_minus_one";
    }
    throw InternalError("regime_name: bad enum");
}

Regime regime_from_name(const std::string& name) {
    if (name == "u0_one") return Regime::U0One;
    if (name == "u0_zero") return Regime::U0Zero;
    if (name == "u0_minus_one") return Regime::U0MinusOne;
    throw InputError("unknown regime \"" + name + "\"");
}

namespace {

int psi_degree(const CosinePoly& f) {
    for (int n = f.degree(); n >= 1; --n)
        if (!f.u(n).is_zero()) return n;
    return 0;
}

bool coefficients_nonneg(const CosinePoly& f, CoeffVariant variant) {
    const int from = variant == CoeffVariant::AllNonneg ? 1 : 2;
    for (int n = from; n <= f.degree(); ++n)
        if (f.u(n).sign() < 0) return false;
    return true;
}

bool symmetric_coefficients(const CosinePoly& f, int m) {
    for (int n = 0; n <= m; ++n)
        if (f.u(n) != f.u(m - n)) return false;
    return true;
}

Tightness tightness_of(const CosinePoly& f) {
    Tightness t;
    for (int n = 2; n <= f.degree(); ++n)
        if (!f.u(n).is_zero()) t.equal_point_counts.push_back(n);
    t.f_vanishes_on_angles = true;
    return t;
}

struct PsiValues {
    QField at_r;
    QField at_rinv;
};

PsiValues psi_values(const CosinePoly& f, const Int& q) {
    const QField r = QField::sqrt_of(q);
    return {psi_eval(f, r), psi_eval(f, r.inverse())};
}

void require_u0(const CosinePoly& f, Regime regime) {
    if (f.u(0) != regime_u0(regime))
        throw RegimeMismatchError("constant term " + f.u(0).str() + " does not match regime " +
                                  regime_name(regime));
}

void require_ab(const ConditionFlags& flags) {
    if (!flags.a) throw ConditionError('a', "condition (a) fails: negative coefficient");
    if (!flags.b) {
        std::string msg = "condition (b) fails: f is negative on theta";
        if (flags.witness_b) msg += " at x = " + flags.witness_b->str();
        throw ConditionError('b', msg);
    }
}

}  // namespace

ConditionFlags check_conditions(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                                Regime regime, CoeffVariant variant, std::optional<int> m) {
    require_u0(f, regime);
    ConditionFlags flags;
    flags.a = coefficients_nonneg(f, variant);
    const auto nonneg = is_nonneg_on(f, theta);
    flags.b = nonneg.nonneg;
    flags.witness_b = nonneg.witness;
    if (m) {
        if (*m <= psi_degree(f))
            throw DomainError("condition (c): need m > deg(psi)");
        flags.c = symmetric_coefficients(f, *m);
    }
    if (regime == Regime::U0MinusOne) flags.d = psi_values(f, q).at_rinv.is_zero();
    return flags;
}

BoundCertificate bound_u0_one(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                              CoeffVariant variant, std::optional<int> m) {
    const auto flags = check_conditions(f, theta, q, Regime::U0One, variant, m);
    require_ab(flags);
    if (m && !*flags.c) throw ConditionError('c', "condition (c) fails: coefficients not symmetric");
    const auto psi = psi_values(f, q);
    if (psi.at_rinv.sign() <= 0)
        throw UnusablePolynomialError("psi(1/r) = " + psi.at_rinv.str() + " is not positive");
    Bound bound;
    bound.kind = Bound::Kind::Linear;
    bound.slope = QField(2) / psi.at_rinv;
    bound.intercept = (psi.at_r + psi.at_rinv) / psi.at_rinv;
    return {Regime::U0One, variant, f, theta, q, psi.at_r, psi.at_rinv,
            bound,         flags,   tightness_of(f), m};
}

BoundCertificate bound_u0_zero(const CosinePoly& f, const ThetaSet& theta, const Int& q,
                               std::optional<int> m) {
    const auto flags = check_conditions(f, theta, q, Regime::U0Zero, CoeffVariant::TailNonneg, m);
    require_ab(flags);
    if (m && !*flags.c) throw ConditionError('c', "condition (c) fails: coefficients not symmetric");
    const auto psi = psi_values(f, q);
    if (psi.at_rinv.sign() <= 0)
        throw UnusablePolynomialError("psi(1/r) = " + psi.at_rinv.str() + " is not positive");
    Bound bound;
    bound.kind = Bound::Kind::Constant;
    bound.value = (psi.at_rinv + psi.at_r) / psi.at_rinv;
    if (m) {
        // With the symmetry condition the bound collapses to r^m + 1.
        const QField expected = pow(QField::sqrt_of(q), *m) + QField(1);
        if (bound.value != expected)
            throw InternalError("symmetric bound did not reduce to r^m + 1");
    }
    return {Regime::U0Zero, CoeffVariant::TailNonneg, f,     theta,           q, psi.at_r,
            psi.at_rinv,    bound,                    flags, tightness_of(f), m};
}

BoundCertificate bound_u0_minus_one(const CosinePoly& f, const ThetaSet& theta, const Int& q) {
    const auto flags = check_conditions(f, theta, q, Regime::U0MinusOne, CoeffVariant::TailNonneg);
    require_ab(flags);
    const auto psi = psi_values(f, q);
    Bound bound;
    if (*flags.d) {
        bound.kind = Bound::Kind::GenusCap;
        bound.value = psi.at_r;
    } else if (psi.at_rinv.sign() > 0) {
        // (d) fails; the combined inequality is still valid and informative.
        bound.kind = Bound::Kind::Combined;
        bound.value = psi.at_r + psi.at_rinv;
    } else {
        throw UnusablePolynomialError("psi(1/r) = " + psi.at_rinv.str() +
                                      " is negative and condition (d) fails");
    }
    return {Regime::U0MinusOne, CoeffVariant::TailNonneg, f,     theta,           q, psi.at_r,
            psi.at_rinv,        bound,                    flags, tightness_of(f), std::nullopt};
}

bool certificate_holds_for(const BoundCertificate& cert, const WeilPoly& w) {
    const QField n1{Rational(point_counts(w, 1).at(1))};
    const QField g{Rational(w.genus())};
    switch (cert.bound.kind) {
        case Bound::Kind::Linear: return n1 <= cert.bound.slope * g + cert.bound.intercept;
        case Bound::Kind::Constant: return n1 <= cert.bound.value;
        case Bound::Kind::GenusCap: return QField(2) * g <= cert.bound.value;
        case Bound::Kind::Combined:
            return n1 * cert.psi_rinv + QField(2) * g <= cert.bound.value;
    }
    throw InternalError("certificate_holds_for: bad bound kind");
}

Int rounded_point_bound(const BoundCertificate& cert, const Int& genus) {
    switch (cert.bound.kind) {
        case Bound::Kind::Linear:
            return floor_q(cert.bound.slope * QField(Rational(genus)) + cert.bound.intercept);
        case Bound::Kind::Constant: return floor_q(cert.bound.value);
        default: throw DomainError("rounded_point_bound: not a point-count bound");
    }
}

IdentityResult explicit_formula_identity(const CosinePoly& f, const WeilPoly& w) {
    const int deg = psi_degree(f);
    if (deg < 1) throw DomainError("explicit_formula_identity: psi is identically zero");
    const auto report = validate(w, 2 * deg);
    if (!report.pass)
        throw DomainError("explicit_formula_identity: invalid zeta data: " + report.first_violation);

    const QField r = QField::sqrt_of(w.q());
    const QField r_inv = r.inverse();
    const auto counts = point_counts(w, deg);
    const QField n1{Rational(counts.at(1))};

    IdentityResult out;
    out.lhs = n1 * psi_eval(f, r_inv);
    for (int n = 2; n <= deg; ++n) {
        if (f.u(n).is_zero()) continue;
        const QField term = f.u(n) * QField(Rational(counts.at(n) - counts.at(1))) * pow(r_inv, n);
        out.slack.push_back({n, term});
        out.lhs += term;
    }

    QField angle_sum(0);
    for (const auto& [x, e] : angle_multiset(w)) angle_sum += QField(Rational(e)) * eval_f(f, x);
    out.angle_term = QField(2) * angle_sum;
    out.rhs = QField(2) * f.u(0) * QField(Rational(w.genus())) + psi_eval(f, r) +
              psi_eval(f, r_inv) - out.angle_term;
    if (out.lhs != out.rhs) throw InternalError("explicit formula identity violated");
    return out;
}

ExclusionCertificate exclusion_certificate(const CosinePoly& f, const Int& q,
                                           const QField& alpha_x, const QField& beta_x,
                                           Regime regime, bool theta_includes_pi,
                                           CoeffVariant variant, std::optional<int> m) {
    const bool drop_pi = beta_x == QField(-1) && !theta_includes_pi;
    const ThetaSet theta = drop_pi ? ThetaSet({{alpha_x, QField(1)}}, {})
                                   : ThetaSet::complement_of_interval(alpha_x, beta_x);
    BoundCertificate base = [&] {
        switch (regime) {
            case Regime::U0One: return bound_u0_one(f, theta, q, variant, m);
            case Regime::U0Zero: return bound_u0_zero(f, theta, q, m);
            case Regime::U0MinusOne: return bound_u0_minus_one(f, theta, q);
        }
        throw InternalError("exclusion_certificate: bad regime");
    }();
    return {std::move(base), beta_x, alpha_x, drop_pi};
}

}  // namespace efm
