#pragma once

// Nested-interval construction for dividing gap sets whose generator has
// bounded runs of 2's. For a generator a_1 = 1, a_2, ..., a_t the table holds
// closed intervals I_b = [C_b, D_b] with d_b*gamma mod 2 in I_b forcing
// d_h*gamma mod 2 in I_h for every later h. Intersecting the first-level
// intervals over growing prefixes gives J_t, from which a rational alpha is
// picked so that the Beatty coloring by parity of floor(n*alpha) avoids
// monochromatic diffsequences of length 2^k + 1.

#include <diffseq/coloring.hpp>
#include <diffseq/gapset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace diffseq {

class ConstructionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct IntervalTable
{
    std::vector<std::uint64_t> a;
    std::vector<Rational> lower; ///< C_1..C_t
    std::vector<Rational> upper; ///< D_1..D_t
    /// 1 + longest run of consecutive 2's among a_2..a_t.
    std::size_t run_bound = 1;

    std::size_t t() const { return a.size(); }
    /// I_b for 1 <= b <= t.
    RationalInterval level(std::size_t b) const { return {lower[b - 1], upper[b - 1]}; }
};

/// Requires a_1 = 1 and a_i >= 2 for i >= 2; throws std::invalid_argument otherwise.
IntervalTable build_intervals(std::span<const std::uint64_t> a);

struct JtInterval
{
    std::size_t t = 0;
    Rational lower;
    Rational upper;

    /// The running intersection can run dry: for a = (1,2,3,4) already
    /// I_1^1 and I_1^2 meet only in 1/2, which I_1^4 = [7/16, 11/24] misses.
    bool empty() const { return lower > upper; }
};

/// J_1..J_count for a generator with a_1 = 1. Once some J_t is empty every
/// later one is too.
std::vector<JtInterval> nested_intervals(const DividingGenerator & generator, std::size_t count);

struct NestedAlpha
{
    enum class Source
    {
        Intersection, ///< alpha is the midpoint of J_T
        FinalTable    ///< J_T is empty; alpha is the midpoint of I_1 from the table at t = T
    };

    Rational alpha;
    std::size_t T = 0;
    std::size_t run_bound = 1; ///< k: the generator has no run of k consecutive 2's
    JtInterval J;
    Source source = Source::Intersection;
    RationalInterval chosen; ///< the interval whose midpoint is alpha
    std::vector<BigInt> d; ///< d_1..d_T

    /// [1/2^k, 1]
    RationalInterval window() const;
};

/// Midpoint of J_T for the smallest T with d_T > N, or of the first-level
/// interval of the t = T table when J_T is empty. Either way d_t*alpha mod 2
/// lands in [1/2^k, 1] for every t <= T. Throws ConstructionError when the
/// generator has unbounded runs of 2's or the window check fails.
NestedAlpha nested_alpha(const DividingGenerator & generator, std::uint64_t N);

/// Exact check that d_t*alpha mod 2 lies in the window for every t <= T.
bool window_holds(const NestedAlpha & nested);

struct DividingColoring
{
    Coloring coloring; ///< explicit on [1..N]
    NestedAlpha nested;
    std::uint64_t index_scale = 1; ///< a_1 of the original generator
};

/// Beatty coloring for a dividing gap set (powers of two, factorials, or an
/// explicit generator), reduced by a_1 and materialized on [1..N].
DividingColoring dividing_coloring(const GapSet & gaps, std::uint64_t N);

} // namespace diffseq
