#include "efm/weil_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace efm {

WeilPoly::WeilPoly(Int q, std::vector<QuadraticFactor> factors)
    : q_(std::move(q)), factors_(std::move(factors)) {
    if (q_ < 2) throw DomainError("WeilPoly: q must be >= 2");
    for (const auto& f : factors_)
        if (f.e < 1) throw DomainError("WeilPoly: factor multiplicities must be positive");
    std::sort(factors_.begin(), factors_.end(),
              [](const QuadraticFactor& u, const QuadraticFactor& v) { return u.a < v.a; });
}

Int WeilPoly::genus() const {
    Int g = 0;
    for (const auto& f : factors_) g += f.e;
    return g;
}

PointCounts point_counts(const WeilPoly& w, int M) {
    if (M < 1) throw DomainError("point_counts: M must be >= 1");
    PointCounts out;
    out.N.assign(M, Int(0));
    std::vector<Int> s_prev(w.factors().size(), Int(2));  // s_0
    std::vector<Int> s_cur(w.factors().size());
    for (std::size_t i = 0; i < w.factors().size(); ++i) s_cur[i] = -w.factors()[i].a;  // s_1
    Int q_pow = w.q();
    for (int m = 1; m <= M; ++m) {
        Int total = 0;
        for (std::size_t i = 0; i < w.factors().size(); ++i) total += w.factors()[i].e * s_cur[i];
        out.N[m - 1] = q_pow + 1 - total;
        q_pow *= w.q();
        for (std::size_t i = 0; i < w.factors().size(); ++i) {
            Int s_next = -w.factors()[i].a * s_cur[i] - w.q() * s_prev[i];
            s_prev[i] = std::exchange(s_cur[i], std::move(s_next));
        }
    }
    return out;
}

std::vector<std::pair<QField, int>> angle_multiset(const WeilPoly& w) {
    const QField two_sqrt_q = QField(2) * QField::sqrt_of(w.q());
    std::map<Int, int> by_trace;
    for (const auto& f : w.factors()) by_trace[f.a] += f.e;
    std::vector<std::pair<QField, int>> out;
    out.reserve(by_trace.size());
    for (const auto& [a, e] : by_trace) out.emplace_back(QField(Rational(-a)) / two_sqrt_q, e);
    return out;
}

ValidationReport validate(const WeilPoly& w, int M) {
    for (const auto& f : w.factors()) {
        if (f.a * f.a > 4 * w.q()) {
            std::ostringstream os;
            os << "factor 1 + (" << f.a << ")T + " << w.q() << "T^2 violates a^2 <= 4q";
            return {false, os.str()};
        }
    }
    const PointCounts counts = point_counts(w, M);
    for (int m = 1; m <= M; ++m) {
        if (counts.at(m) < 0) return {false, "N_" + std::to_string(m) + " is negative"};
        for (int d = 2; d * m <= M; ++d) {
            if (counts.at(d * m) < counts.at(m))
                return {false, "N_" + std::to_string(d * m) + " < N_" + std::to_string(m)};
        }
    }
    return {true, ""};
}

}  // namespace efm
