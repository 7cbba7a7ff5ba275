// Exact rational scalars backed by GMP. mpq_class keeps values reduced with a
// positive denominator, which is exactly the invariant the rest of the code
// relies on.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace minvar {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(Int(s));
            return r;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(Rat base, unsigned long e) {
    Rat out(1);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace minvar
