#pragma once

#include <gmpxx.h>

#include <string>

namespace webs {

// Exact rational scalar.  Always kept canonical: reduced to lowest terms,
// denominator > 0.  mpq_class arithmetic canonicalizes its results, so only
// values built from raw integer pairs need an explicit canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" for non-integers, "p" otherwise; exactly what the CLI prints and the
// expression parser reads back.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// q^e for e >= 0 (0^0 = 1).  Stays canonical: gcd(p,q)=1 implies gcd(p^e,q^e)=1.
inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
    return r;
}

}  // namespace webs
