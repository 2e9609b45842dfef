#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcausal {

// Exact rational scalar used throughout the geometry and certificate code.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

// Parses "p/q", "p", or a decimal literal like "-0.25" into an exact rational.
Rat rat_from_string(const std::string& s);

// Canonical "p" or "p/q" form.
std::string rat_to_string(const Rat& r);

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double_exact(double x) { return Rat(x); }

// Best rational approximation with denominator <= max_den (continued fractions).
// Kept for callers that explicitly want small denominators; most conversions in
// this codebase use the exact dyadic form instead.
Rat rat_approximate(double x, std::uint64_t max_den);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Divides a row by the gcd of its entries and clears denominators, preserving
// direction; all-zero rows are left untouched.
void normalize_row(RatVec& row);

// Same, but also scales `rhs` and flips to make the first nonzero entry of the
// row positive when `canonical_sign` is set (used for equality rows).
void normalize_row_with_rhs(RatVec& row, Rat& rhs, bool canonical_sign = false);

inline bool is_zero_row(const RatVec& row) {
    for (const Rat& v : row)
        if (v != 0) return false;
    return true;
}

}  // namespace vcausal
