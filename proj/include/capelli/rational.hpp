#pragma once
// Exact rational scalars shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace capelli {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Renders "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parses "p/q" or "p" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw Error("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace capelli
