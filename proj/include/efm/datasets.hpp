#ifndef EFM_DATASETS_HPP
#define EFM_DATASETS_HPP

#include <string>
#include <vector>

#include "efm/cosine_poly.hpp"
#include "efm/theta_set.hpp"
#include "efm/weil_poly.hpp"

namespace efm {
namespace datasets {

/// Built-in auxiliary polynomials, keyed by name:
///   quartic-q3   1 + sqrt3 cos + 7/6 cos2 + sqrt3/3 cos3 + 1/6 cos4   (q = 3)
///   band-f2      (cos - cos pi/3)(cos - cos 3pi/4) expanded            (q = 2)
///   cubic-q2     1 + 3 sqrt2 cos + 2 sqrt2 cos3                        (q = 2)
///   quintic-q2   7/10 sqrt2 cos + 1/2 sqrt2 cos3 + 1/5 sqrt2 cos5      (q = 2)
///   quartic-q4   -1 - 4/3 cos + 7/9 cos2 + 26/9 cos3 + 16/9 cos4      (q = 4)
///   cos          cos
///   cos12        cos + cos2
CosinePoly poly(const std::string& name);

/// Built-in angle sets:
///   full             [-1, 1]
///   elliptic-q2      the five elliptic-curve angles over F_2
///   elliptic-q4      their squaring-Frobenius image {-1, -3/4, 0}
///   band-complement  [-1, -sqrt2/2] u [1/2, 1]   (complement of (pi/3, 3pi/4))
///   tail-q2          [-sqrt2/2, 1]               (complement of (3pi/4, pi])
ThetaSet theta(const std::string& name);

/// Built-in zeta data:
///   deligne-lusztig  q=3, (1+3T^2)^7 (1+3T+3T^2)^8
///   x11              q=4, (1+4T+4T^2)^5 (1+3T+4T^2)^10 (1+4T^2)^11
///   genus3           q=2, (1+2T+2T^2)^2 (1-T+2T^2)
WeilPoly curve(const std::string& name);

std::vector<std::string> poly_names();
std::vector<std::string> theta_names();
std::vector<std::string> curve_names();

}  // namespace datasets
}  // namespace efm

#endif
