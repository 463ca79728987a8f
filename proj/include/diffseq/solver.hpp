#pragma once

// Exact Delta(D, k; r) by position-ordered backtracking over r-colorings of
// [1..n]. Each position keeps len(a), the longest monochromatic diffsequence
// ending at a, so an assignment costs O(|D cap [1, a]|).

#include <diffseq/gapset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace diffseq {

struct SolverOptions
{
    std::uint64_t node_budget = 100'000'000;
    /// Subtrees are fanned out to this many workers; results do not depend on it.
    unsigned threads = 1;
};

struct SearchOutcome
{
    enum class Status
    {
        Found,
        None,
        Inconclusive
    };

    Status status = Status::None;
    std::vector<std::uint8_t> coloring; ///< colors of [1..n] when Found
    std::uint64_t nodes = 0;
};

/// A coloring of [1..n] without a monochromatic D-diffsequence of length k,
/// or proof by exhaustion that none exists. Position 1 is fixed to color 0.
/// `hint`, when given, is tried first at each position it covers.
SearchOutcome exists_valid_coloring(const GapSet & gaps, std::size_t k, unsigned r, std::uint64_t n,
    const SolverOptions & options = {}, const std::vector<std::uint8_t> & hint = {});

struct SolverResult
{
    enum class Status
    {
        Found,
        ExceedsCap,
        Inconclusive
    };

    Status status = Status::Inconclusive;
    std::uint64_t delta = 0;           ///< Found
    std::uint64_t cap = 0;             ///< ExceedsCap
    std::uint64_t inconclusive_at = 0; ///< Inconclusive: the n whose search ran out of budget
    /// Found: valid coloring of [1..delta-1]. ExceedsCap: of [1..cap].
    /// Inconclusive: the last valid coloring reached.
    std::vector<std::uint8_t> coloring;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

/// Increments n from k, warm-starting each search with the previous coloring,
/// until no valid coloring exists (Found) or n passes cap (ExceedsCap).
SolverResult delta(const GapSet & gaps, std::size_t k, unsigned r, std::uint64_t cap, const SolverOptions & options = {});

/// Colors rendered as digits, e.g. "0110".
std::string colors_to_string(const std::vector<std::uint8_t> & colors);

} // namespace diffseq
