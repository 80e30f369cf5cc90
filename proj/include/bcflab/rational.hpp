#pragma once

#include <gmpxx.h>

#include <string>

#include "bcflab/error.hpp"

namespace bcflab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// binomial(n, k) for arbitrary integer n (negative allowed), k >= 0.
inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

// Rising factorial a(a+1)...(a+n-1) for rational a.
inline Rat rising(const Rat& a, unsigned long n) {
    Rat r(1);
    for (unsigned long i = 0; i < n; ++i) r *= a + Rat(static_cast<long>(i));
    return r;
}

inline Rat rat_pow(const Rat& a, unsigned long e) {
    Rat r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos)
        r = Rat(s);
    else
        r = Rat(s.substr(0, slash)) / Rat(s.substr(slash + 1));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace bcflab
