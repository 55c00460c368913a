#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tdqe {

// Arbitrary precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// Accepts "12", "-3", "3/4", "-7/2". Throws std::invalid_argument on junk or
// a zero denominator.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace tdqe
