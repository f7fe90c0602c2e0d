#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <treegrade/errors.hpp>

namespace treegrade {

// All metric values in the library are exact rationals. cpp_rational keeps the
// canonical form (reduced, positive denominator) that the serialization relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a plain integer "p". Signs on p only ("-3/4").
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        require(den != 0, "rational '" + text + "' has zero denominator");
        return Rational(num, den);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("cannot parse rational '" + text + "'");
    }
}

// Emits "p" for integers, "p/q" otherwise. parse_rational(format_rational(r)) == r.
inline std::string format_rational(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace treegrade
