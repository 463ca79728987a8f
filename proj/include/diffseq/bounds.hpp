#pragma once

// Lower bounds on Delta(D, k) for D = powers of two, from the stretched
// Thue-Morse colorings P_{t,u}, and their machine-checked certification.

#include <diffseq/analysis.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace diffseq {

/// 2^{t+u} (k - 2^{u+1} - t^2/2 + t) + 2^{u+1}, evaluated exactly and floored.
/// May be zero or negative for poor parameters.
BigInt refined_bound(std::uint64_t k, unsigned t, unsigned u);

/// 2^s (s - 2) + 2 with s = floor(sqrt(2k)).
BigInt simple_bound(std::uint64_t k);

/// Closed form 2^{sqrt(2k)} ((sqrt2 - 1) k/8 - sqrt(k)/8) + sqrt(k)/2.
struct TheoremBound
{
    RationalInterval enclosure; ///< outward-rounded, width far below precision
    Rational value;             ///< a multiple of `precision` within `precision` of the true value
    Rational precision;         ///< 1/10^6
};

TheoremBound theorem_bound(std::uint64_t k);

struct BestParams
{
    unsigned t = 2;
    unsigned u = 0;
    BigInt bound;
};

/// Exhaustive maximisation of refined_bound over 2 <= t <= 2*ceil(sqrt(2k)) + 4
/// and 0 <= u <= ceil(log2 k); ties go to the smaller t+u, then smaller t.
BestParams best_params(std::uint64_t k);

/// t = floor(sqrt(2k)), u = floor(log2(sqrt(k)/2)); nullopt when that u < 0.
std::optional<BestParams> standard_params(std::uint64_t k);

struct BoundDiscrepancy
{
    std::uint64_t k = 0;
    unsigned t = 0;
    unsigned u = 0;
    BigInt claimed_bound;
    DiffseqWitness counterexample;
    std::uint64_t largest_verified = 0; ///< largest n' <= bound-1 whose prefix avoids length k
};

using CertifyResult = std::variant<Certificate, BoundDiscrepancy>;

/// Runs verify_avoidance on P_{t,u} over [1 .. refined_bound - 1].
CertifyResult certify_bound(std::uint64_t k, unsigned t, unsigned u,
    std::uint64_t memory_cap_bits = default_memory_cap_bits);

struct BoundReport
{
    std::uint64_t k = 0;
    unsigned t = 0;
    unsigned u = 0;
    BigInt refined;
    TheoremBound theorem;
    BigInt simple;
    std::optional<std::uint64_t> certified; ///< nullopt: not run, or not certified
    bool certification_run = false;
    std::optional<BoundDiscrepancy> discrepancy;
    /// certified >= refined when both are present.
    bool consistent = true;
};

BoundReport bound_report(std::uint64_t k, unsigned t, unsigned u, bool certify,
    std::uint64_t memory_cap_bits = default_memory_cap_bits);

} // namespace diffseq
