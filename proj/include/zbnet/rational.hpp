#pragma once

// Exact rational value carrier plus parsing/rendering helpers shared by the
// discrepancy kernels, the point-file format, and the CLI.

#include <boost/multiprecision/cpp_int.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

namespace zbnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // canonical reduced form, positive denominator

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "p/q" with q > 0; bare integers are accepted as "p".  Returns nothing on
// malformed input so callers can decide between skipping and failing.
inline std::optional<Rational> parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.empty()) return std::nullopt;
            return Rational(BigInt(s));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        const BigInt q(den);
        if (q <= 0) return std::nullopt;
        return Rational(BigInt(num), q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

// Fixed 12-significant-digit rendering: reproducible, locale-independent.
inline std::string decimal_string(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline std::string decimal_string(const Rational& r) { return decimal_string(to_double(r)); }

}  // namespace zbnet
