#ifndef MVMARKOV_RATIONAL_HPP
#define MVMARKOV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mvmarkov {

// Exact rational scalar used for probability estimation. Arbitrary
// precision, so episode averaging never overflows or rounds.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace mvmarkov

#endif // MVMARKOV_RATIONAL_HPP
