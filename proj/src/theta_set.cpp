#include "efm/theta_set.hpp"

#include <algorithm>

namespace efm {

namespace {
const QField kMinusOne(-1);
const QField kOne(1);
}  // namespace

ThetaSet::ThetaSet(std::vector<XInterval> intervals, std::vector<QField> points) {
    for (auto& iv : intervals) {
        if (iv.lo > iv.hi) throw DomainError("ThetaSet: interval with lo > hi");
        if (iv.lo < kMinusOne || iv.hi > kOne) throw DomainError("ThetaSet: interval outside [-1, 1]");
        if (iv.lo == iv.hi) {
            points.push_back(iv.lo);
        } else {
            intervals_.push_back(std::move(iv));
        }
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const XInterval& u, const XInterval& v) { return u.lo < v.lo; });
    for (std::size_t i = 1; i < intervals_.size(); ++i) {
        if (!(intervals_[i - 1].hi < intervals_[i].lo))
            throw DomainError("ThetaSet: overlapping intervals");
    }
    for (auto& p : points) {
        if (p < kMinusOne || p > kOne) throw DomainError("ThetaSet: point outside [-1, 1]");
        bool inside = false;
        for (const auto& iv : intervals_)
            if (iv.lo <= p && p <= iv.hi) inside = true;
        if (!inside) points_.push_back(std::move(p));
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

ThetaSet ThetaSet::complement_of_interval(const QField& alpha_x, const QField& beta_x) {
    if (beta_x < kMinusOne || alpha_x > kOne || beta_x > alpha_x)
        throw DomainError("complement_of_interval: need -1 <= beta_x <= alpha_x <= 1");
    if (beta_x == alpha_x) return full();
    return ThetaSet({{kMinusOne, beta_x}, {alpha_x, kOne}}, {});
}

bool ThetaSet::contains(const QField& x) const {
    for (const auto& iv : intervals_)
        if (iv.lo <= x && x <= iv.hi) return true;
    for (const auto& p : points_)
        if (p == x) return true;
    return false;
}

ThetaSet admissible_trace_angles(const Int& q) {
    if (q < 2) throw DomainError("admissible_trace_angles: q must be >= 2");
    const QField two_sqrt_q = QField(2) * QField::sqrt_of(q);
    std::vector<QField> pts;
    for (Int t = 0; t * t <= 4 * q; ++t) {
        const QField x = QField(Rational(t)) / two_sqrt_q;
        pts.push_back(x);
        if (t != 0) pts.push_back(-x);
    }
    return ThetaSet::from_points(std::move(pts));
}

ThetaSet frobenius_square_pushforward(const ThetaSet& s) {
    if (!s.is_finite())
        throw UnsupportedShapeError("frobenius_square_pushforward: finite point sets only");
    std::vector<QField> image;
    image.reserve(s.points().size());
    for (const auto& x : s.points()) image.push_back(QField(2) * x * x - QField(1));
    return ThetaSet::from_points(std::move(image));
}

}  // namespace efm
