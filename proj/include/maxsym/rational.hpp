#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace maxsym {

// Exact rational coefficients. Everything symbolic runs on these; floating
// point exists only inside fieldsim.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) { return r.str(); }

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

}  // namespace maxsym
