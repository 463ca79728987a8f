#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace diffseq {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt floor_of(const Rational & x);
BigInt ceil_of(const Rational & x);

/// x - 2*floor(x/2), always in [0, 2).
Rational mod2(const Rational & x);

Rational make_rational(const BigInt & num, const BigInt & den);

/// Rendered as "p/q", denominators of 1 included.
std::string to_string(const Rational & x);
std::string to_string(const BigInt & x);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt big_from_u64(std::uint64_t v);
bool fits_u64(const BigInt & v);
std::uint64_t to_u64(const BigInt & v);

/// Closed interval [lo, hi] of rationals.
struct RationalInterval
{
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational & x) const { return lo <= x && x <= hi; }
    /// True if [lo, hi] lies inside [a, b) (or [a, b] when closed_right).
    bool inside(const Rational & a, const Rational & b, bool closed_right = false) const;
};

/// Rendered as "[p1/q1, p2/q2]".
std::string to_string(const RationalInterval & iv);

} // namespace diffseq
