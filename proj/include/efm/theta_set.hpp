#ifndef EFM_THETA_SET_HPP
#define EFM_THETA_SET_HPP

#include <vector>

#include "efm/qfield.hpp"

namespace efm {

/// Closed interval [lo, hi] on the x = cos(theta) axis.
struct XInterval {
    QField lo;
    QField hi;
};

/// The allowed-angle set Theta, a subset of [0, pi] stored in the
/// x = cos(theta) coordinate: a union of disjoint closed intervals plus a
/// finite set of points, all inside [-1, 1]. Angle intervals (alpha, beta)
/// map to x-intervals with reversed order since cos is decreasing on [0, pi].
class ThetaSet {
  public:
    ThetaSet() = default;

    /// Validating constructor. Degenerate intervals [a, a] become points;
    /// everything is sorted, deduplicated and checked for disjointness.
    ThetaSet(std::vector<XInterval> intervals, std::vector<QField> points);

    static ThetaSet full() { return ThetaSet({{QField(-1), QField(1)}}, {}); }
    static ThetaSet from_points(std::vector<QField> points) { return ThetaSet({}, std::move(points)); }

    /// [0, pi] \ (alpha, beta) in x-space: [-1, beta_x] u [alpha_x, 1].
    /// Requires -1 <= beta_x <= alpha_x <= 1; alpha_x == beta_x gives full().
    static ThetaSet complement_of_interval(const QField& alpha_x, const QField& beta_x);

    const std::vector<XInterval>& intervals() const { return intervals_; }
    const std::vector<QField>& points() const { return points_; }

    bool is_finite() const { return intervals_.empty(); }
    bool contains(const QField& x) const;

  private:
    std::vector<XInterval> intervals_;  // sorted, pairwise disjoint
    std::vector<QField> points_;        // sorted, not inside any interval
};

/// All Weil-admissible trace angles over F_q: the finite point set
/// { t / (2 sqrt q) : t integer, t^2 <= 4q }. Requires q >= 2.
/// No Honda-Tate filtering; curated subsets can be passed explicitly.
ThetaSet admissible_trace_angles(const Int& q);

/// Image of a finite angle set under squaring Frobenius: x -> 2x^2 - 1
/// (the trace map t -> t^2 - 2q). Throws UnsupportedShapeError on intervals.
ThetaSet frobenius_square_pushforward(const ThetaSet& s);

}  // namespace efm

#endif
