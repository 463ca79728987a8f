#pragma once

// Exact alpha values for Beatty colorings: plain rationals, and the factorial
// constant 2 - e/2 - 1/(2e) = 1 - sum_{i>=1} 1/(2i)! held as a rational
// enclosure with a proven tail bound. No floating point is used here.

#include <diffseq/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffseq {

inline constexpr unsigned default_refine_cap = 64;

/// Raised when refinement cannot decide a floor or a mod-2 window.
class AmbiguousError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class AlphaValue
{
public:
    enum class Kind
    {
        ExactRational,
        SeriesInterval
    };

    static AlphaValue exact(Rational value);
    /// Enclosure of the factorial constant using `terms` series terms.
    static AlphaValue factorial_series(std::size_t terms);

    Kind kind() const { return _kind; }
    bool is_exact() const { return _kind == Kind::ExactRational; }

    /// lo == hi for exact values.
    const Rational & lo() const { return _lo; }
    const Rational & hi() const { return _hi; }
    RationalInterval interval() const { return {_lo, _hi}; }
    std::size_t terms() const { return _terms; }

    /// Doubles the number of series terms. Exact values are returned unchanged.
    AlphaValue refined() const;

    /// Smallest doubling of the series whose width is at most `width`.
    AlphaValue refined_to_width(const Rational & width, unsigned refine_cap = default_refine_cap) const;

private:
    AlphaValue(Kind kind, Rational lo, Rational hi, std::size_t terms);

    Kind _kind;
    Rational _lo;
    Rational _hi;
    std::size_t _terms;
};

/// 2 / (2I+2)!, the tail bound used for the factorial series.
Rational factorial_tail_bound(std::size_t terms);

/// sum_{i=1}^{terms} 1/(2i)!.
Rational factorial_partial_sum(std::size_t terms);

AlphaValue factorial_alpha(std::size_t precision_terms);

/// Parity of floor(m * alpha). Throws AmbiguousError if refine_cap doublings
/// do not pin the floor down.
int floor_parity(const AlphaValue & alpha, const BigInt & m, unsigned refine_cap = default_refine_cap);
int floor_parity(const AlphaValue & alpha, std::uint64_t m, unsigned refine_cap = default_refine_cap);

/// Parities of floor(m * alpha) for m = 1..count, entry m-1 holding m's parity.
std::vector<std::uint8_t> floor_parities(const AlphaValue & alpha, std::uint64_t count, unsigned refine_cap = default_refine_cap);

/// An interval inside [0, 2) containing d * alpha mod 2, narrower than 1/12.
/// Series enclosures are also refined until they avoid 1.
/// Throws AmbiguousError ("straddles boundary") when it cannot be localised.
RationalInterval scaled_mod2_range(const AlphaValue & alpha, const BigInt & d, unsigned refine_cap = default_refine_cap);

} // namespace diffseq
