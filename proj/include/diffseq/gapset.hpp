#pragma once

// Difference sets D and lazy enumeration of their members.

#include <diffseq/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace diffseq {

enum class GapKind
{
    PowersOfTwo,
    Factorials,
    Dividing,
    Explicit,
    FloorPowers
};

enum class Rounding
{
    Floor,
    Ceiling
};

/// The sequence a_1, a_2, ... whose partial products d_t = a_1 * ... * a_t form
/// a dividing gap set. Described as a finite prefix followed by a tail that is
/// absent (finite sequence), a repeating pattern, or counting (a_i = i).
class DividingGenerator
{
public:
    enum class Tail
    {
        None,
        Repeating,
        Counting
    };

    static DividingGenerator finite(std::vector<std::uint64_t> values);
    static DividingGenerator periodic(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> tail);
    /// a_i taken from prefix, then a_i = i for every later index.
    static DividingGenerator counting(std::vector<std::uint64_t> prefix);

    /// Parses "1,2,3|2,3", "2,3" (finite) or "3|+" (counting tail).
    static DividingGenerator parse(std::string_view text);

    /// 1-indexed; throws std::out_of_range past the end of a finite generator.
    std::uint64_t at(std::size_t i) const;

    bool is_finite() const { return _tail_kind == Tail::None; }
    /// Number of values of a finite generator.
    std::size_t finite_length() const { return _prefix.size(); }

    /// Longest run of consecutive 2's among a_2, a_3, ...; nullopt when unbounded.
    std::optional<std::size_t> max_run_of_twos() const;
    /// Longest run of consecutive 2's among a_2..a_t.
    std::size_t max_run_of_twos_upto(std::size_t t) const;

    DividingGenerator with_first(std::uint64_t a1) const;

    std::string descriptor() const;

    const std::vector<std::uint64_t> & prefix() const { return _prefix; }
    const std::vector<std::uint64_t> & tail() const { return _tail; }
    Tail tail_kind() const { return _tail_kind; }

private:
    DividingGenerator(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> tail, Tail kind);

    std::vector<std::uint64_t> _prefix;
    std::vector<std::uint64_t> _tail;
    Tail _tail_kind;
};

class GapSet
{
public:
    static GapSet powers_of_two();
    static GapSet factorials();
    static GapSet dividing(DividingGenerator generator);
    static GapSet explicit_set(std::vector<std::uint64_t> members);
    /// {floor(alpha^i)} or {ceil(alpha^i)} for i >= 0; alpha must exceed 1.
    static GapSet floor_powers(Rational alpha, Rounding rounding);

    /// Parses `pow2`, `factorial`, `dividing:1,2,3|2,3`, `explicit:1,2,6`,
    /// `floorpow:3/2:floor`. Throws std::invalid_argument.
    static GapSet parse(std::string_view descriptor);

    GapKind kind() const { return _kind; }

    /// Members d <= n in increasing order, duplicates collapsed.
    std::vector<std::uint64_t> members_up_to(std::uint64_t n) const;
    bool contains(std::uint64_t d) const;

    /// {d / a_1 : d in D} for a Dividing set. Throws std::invalid_argument otherwise.
    GapSet reduce_by_first() const;

    /// The generating sequence when D is a dividing set (powers of two,
    /// factorials or an explicit dividing generator).
    std::optional<DividingGenerator> generator() const;

    std::string descriptor() const;

private:
    struct FloorPowerParams
    {
        Rational alpha;
        Rounding rounding;
    };

    GapSet(GapKind kind, std::variant<std::monostate, DividingGenerator, std::vector<std::uint64_t>, FloorPowerParams> params);

    GapKind _kind;
    std::variant<std::monostate, DividingGenerator, std::vector<std::uint64_t>, FloorPowerParams> _params;
};

/// Partial products d_1..d_t of a generator, stopping early for finite generators.
std::vector<BigInt> partial_products(const DividingGenerator & generator, std::size_t t);

/// Splits "1,2,3" into positive integers. Throws std::invalid_argument.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

} // namespace diffseq
