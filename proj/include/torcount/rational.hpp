#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace torcount {

using Int = mpz_class;
using Rat = mpq_class; // always canonical: lowest terms, positive denominator

// Thrown when a configured work budget is exhausted (never silently truncates).
struct WorkBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two internal routes that must agree do not.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builds p/q in canonical form; q must be nonzero.
Rat make_rat(long p, long q = 1);

// Accepts "p" or "p/q" with optional leading sign, base 10 only.
// Decimals are rejected so polarizations stay exact.
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

double rat_d(const Rat& r);

// base^exp for exp >= 0
Int ipow(const Int& base, unsigned long exp);

// Largest t >= 0 with t^k <= v, by binary search; v >= 0, k >= 1.
Int iroot_floor(const Int& v, unsigned long k);

} // namespace torcount
