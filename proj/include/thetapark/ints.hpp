#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace thetapark {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace thetapark
