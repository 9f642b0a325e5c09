#ifndef EFM_BIGFLOAT_HPP
#define EFM_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "efm/qfield.hpp"

namespace efm {

/// High-precision float for the numeric verification paths: 40 decimal
/// digits (> 128 bits), comfortably below the 1e-20 check tolerances.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                               boost::multiprecision::et_off>;

BigFloat to_bigfloat(const QField& x);
BigFloat big_pi();

}  // namespace efm

#endif
