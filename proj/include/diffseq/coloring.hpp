#pragma once

// Two-colorings of the positive integers: periodic blocks (Thue-Morse P_t and
// its stretched form P_{t,u}), explicit finite prefixes, and Beatty colorings
// given by the parity of floor(m * alpha).

#include <diffseq/exactreal.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace diffseq {

inline constexpr std::uint64_t default_memory_cap_bits = std::uint64_t{1} << 30;

class MemoryCapError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Packed sequence of bits, index 0 first.
class BitString
{
public:
    BitString() = default;
    explicit BitString(std::size_t size, bool value = false);

    static BitString from_string(std::string_view bits);

    std::size_t size() const { return _size; }
    bool empty() const { return _size == 0; }

    bool operator[](std::size_t i) const { return (_words[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value);
    void push_back(bool value);

    /// This followed by its bitwise complement.
    BitString doubled_with_complement() const;

    std::string to_string() const;

    friend bool operator==(const BitString & a, const BitString & b);

private:
    std::vector<std::uint64_t> _words;
    std::size_t _size = 0;
};

/// Repeating block of P_t: block(0) = "1", block(t) = block(t-1) + complement.
BitString thue_morse_block(unsigned t, std::uint64_t memory_cap_bits = default_memory_cap_bits);

/// Block of P_{t,u}: each bit of the P_t block repeated 2^u times.
BitString stretch_block(unsigned t, unsigned u, std::uint64_t memory_cap_bits = default_memory_cap_bits);

class Coloring
{
public:
    enum class Kind
    {
        Periodic,
        Explicit,
        Beatty
    };

    static Coloring periodic(BitString block);
    /// Colors of [1..bits.size()] only.
    static Coloring explicit_prefix(BitString bits);
    /// color(n) = parity of floor(m * alpha), m = floor((n-1)/index_scale) + 1.
    static Coloring beatty(AlphaValue alpha, std::uint64_t index_scale = 1);

    static Coloring thue_morse(unsigned t) { return periodic(thue_morse_block(t)); }
    static Coloring stretched(unsigned t, unsigned u) { return periodic(stretch_block(t, u)); }

    Kind kind() const { return _kind; }
    unsigned color_count() const { return 2; }

    /// Throws std::out_of_range outside an explicit prefix and AmbiguousError
    /// if a Beatty floor cannot be resolved.
    int color_of(std::uint64_t n) const;

    /// Largest n with a defined color; nullopt when every n is colored.
    std::optional<std::uint64_t> defined_up_to() const;

    /// Colors of [1..n], entry n-1 holding n's color.
    std::vector<std::uint8_t> materialize(std::uint64_t n) const;

    const BitString & bits() const { return _bits; }
    const AlphaValue & alpha() const { return *_alpha; }
    std::uint64_t index_scale() const { return _index_scale; }

private:
    Coloring(Kind kind, BitString bits, std::optional<AlphaValue> alpha, std::uint64_t index_scale);

    Kind _kind;
    BitString _bits;
    std::optional<AlphaValue> _alpha;
    std::uint64_t _index_scale = 1;
};

/// Coloring file: "# diffseq-coloring v1" then "periodic <bits>" or
/// "explicit <bits>". Only Periodic and Explicit colorings can be written.
void write_coloring(std::ostream & out, const Coloring & c);
Coloring read_coloring(std::istream & in);
void save_coloring(const std::string & path, const Coloring & c);
Coloring load_coloring(const std::string & path);

} // namespace diffseq
