#pragma once

#include <gmpxx.h>

#include <string>

namespace abelatt {

// All arithmetic in this library is exact. Int and Rat are the only scalar
// types used by the algebraic layers; no floating point appears anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Canonical textual form: "p" for integers, "p/q" otherwise (GMP canonical
// form, lowest terms, denominator positive).
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& text);

}  // namespace abelatt
