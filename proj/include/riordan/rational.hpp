#pragma once

#include <gmpxx.h>

#include <string>

namespace riordan {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator as long as every value is built through canonicalizing entry
// points, which the helpers below are.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
Rat rat_from_string(const std::string& text);

// Emits "p" or "p/q" in canonical form.
std::string rat_to_string(const Rat& r);

}  // namespace riordan
