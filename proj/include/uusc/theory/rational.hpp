#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace uusc::theory {

// Exact arithmetic only in this module; floating point is forbidden.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational frac(long long num, long long den) {
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Memoized exact harmonic numbers, H_0 = 0.
class HarmonicTable {
public:
    const Rational& h(int m);

private:
    std::vector<Rational> values_{Rational(0)};
};

// Exact H_m.
Rational harmonic(int m);

} // namespace uusc::theory
