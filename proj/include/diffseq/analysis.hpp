#pragma once

// Dynamic programming over colored prefixes [1..n]: longest monochromatic
// D-diffsequence with a witness, per-gap-size counts, and avoidance
// certificates.

#include <diffseq/coloring.hpp>
#include <diffseq/gapset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace diffseq {

struct DiffseqWitness
{
    std::vector<std::uint64_t> positions;
    int color = 0;
};

struct LongestResult
{
    std::size_t length = 0;
    DiffseqWitness witness;
};

/// "Coloring X of [1..n] has no monochromatic D-diffsequence of length k,
/// hence Delta(D,k;r) >= n+1."
struct Certificate
{
    std::string gapset;
    std::size_t k = 0;
    unsigned r = 2;
    std::uint64_t n = 0;
    Coloring coloring;
    std::size_t longest_found = 0;

    std::uint64_t implied_bound() const { return n + 1; }
};

using AvoidanceResult = std::variant<Certificate, DiffseqWitness>;

/// Strictly increasing, every gap in D, every position the same color.
bool is_mono_diffsequence(std::span<const std::uint64_t> positions, const GapSet & gaps, const Coloring & c);

/// L(a) = 1 + max{L(a-d) : d in D, d < a, same color}; the witness ends at the
/// first position attaining the maximum and prefers the smallest predecessor.
LongestResult longest_mono(std::span<const std::uint8_t> colors, std::span<const std::uint64_t> members);
LongestResult longest_mono(const Coloring & c, const GapSet & gaps, std::uint64_t n);

/// Smallest a <= colors.size() ending a monochromatic diffsequence of length k.
std::optional<std::uint64_t> first_reaching(std::span<const std::uint8_t> colors, std::span<const std::uint64_t> members, std::size_t k);

/// Maximum number of steps equal to gap_size over monochromatic diffsequences in [1..n].
std::uint64_t max_gap_count(const Coloring & c, const GapSet & gaps, std::uint64_t gap_size, std::uint64_t n);

/// A certificate when the longest monochromatic diffsequence is shorter than k,
/// otherwise a length-k witness.
AvoidanceResult verify_avoidance(const Coloring & c, const GapSet & gaps, std::size_t k, std::uint64_t n);

/// Re-runs the check recorded in a certificate from its stored descriptors.
bool revalidate(const Certificate & cert);

} // namespace diffseq
