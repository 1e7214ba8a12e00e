#pragma once

#include <gmpxx.h>
#include <string>

namespace charstack {

// Arbitrary-precision rationals everywhere; no floating point in the pipeline.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace charstack
