#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncdef {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(num,den)=1 and den>0 as invariants.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Rational(n, d) with sign normalization; cpp_rational requires d > 0.
inline Rational make_rational(Integer n, Integer d)
{
    if (d == 0)
        throw std::runtime_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline std::string rat_str(const Rational& q)
{
    if (rat_den(q) == 1)
        return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Parses "n" or "n/d"; throws on malformed input or zero denominator.
inline Rational rat_parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::exception&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

}  // namespace ncdef
