#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qyb/errors.hpp"

namespace qyb {

// Arbitrary-precision integers and rationals. mpq_class keeps exactly the
// canonical form we need: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero_denominator", "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r; // canonical: coprime powers stay coprime, den stays positive
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

// Accepts "p", "p/q", with optional leading '-'.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("bad_rational", "cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace qyb
