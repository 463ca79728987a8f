#pragma once

// Command-line front end: argument validation and dispatch to the library.
// Every run yields a JSON document on stdout with exit code 0, or a JSON error
// object on stderr with a nonzero exit code.

#include <diffseq/serialize.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace diffseq::cli {

enum ExitCode : int
{
    Success = 0,
    Usage = 1,
    ResourceCap = 2,
    Counterexample = 3,
    Internal = 4
};

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct DeltaCommand
{
    GapSet gapset = GapSet::powers_of_two();
    std::size_t k = 0;
    unsigned r = 2;
    std::uint64_t cap = 4096;
    SolverOptions solver;
};

struct BoundCommand
{
    std::uint64_t k = 0;
    std::optional<unsigned> t;
    unsigned u = 0;
    bool optimize = false;
    bool certify = false;
    std::uint64_t memory_cap = default_memory_cap_bits;
};

struct CertifyCommand
{
    std::uint64_t k = 0;
    unsigned t = 0;
    unsigned u = 0;
    std::uint64_t memory_cap = default_memory_cap_bits;
};

struct ColorCommand
{
    enum class Family
    {
        ThueMorse,
        Stretched,
        Factorial,
        Dividing
    };

    Family family = Family::ThueMorse;
    unsigned t = 0;
    unsigned u = 0;
    std::uint64_t n = 0;
    std::size_t terms = 8;
    GapSet gapset = GapSet::factorials();
    std::optional<std::string> out;
    std::uint64_t memory_cap = default_memory_cap_bits;
};

struct VerifyCommand
{
    std::string coloring_path;
    GapSet gapset = GapSet::powers_of_two();
    std::size_t k = 0;
    std::optional<std::uint64_t> n;
};

struct LongestCommand
{
    std::string coloring_path;
    GapSet gapset = GapSet::powers_of_two();
    std::optional<std::uint64_t> n;
};

struct AlphaCommand
{
    std::size_t terms = 8;
    std::size_t scaled_upto = 0; ///< report k!*alpha mod 2 for k = 1..scaled_upto
    std::optional<GapSet> dividing;
    std::uint64_t n = 0;
};

struct IntervalsCommand
{
    DividingGenerator generator = DividingGenerator::finite({1});
    std::optional<std::size_t> t;
};

using Command = std::variant<DeltaCommand, BoundCommand, CertifyCommand, ColorCommand, VerifyCommand,
    LongestCommand, AlphaCommand, IntervalsCommand>;

/// argv without the program name. Throws UsageError naming the offending flag.
Command parse_command(const std::vector<std::string> & argv);

struct Execution
{
    int exit_code = Success;
    Json output; ///< stdout document on success
    Json error;  ///< stderr document otherwise: {"error": {"kind", "message", ...}}
};

/// Module errors are reported through Execution, never thrown.
Execution execute(const Command & cmd);

/// Full round: parse, execute, print. Returns the exit code.
int run(const std::vector<std::string> & argv, std::ostream & out, std::ostream & err);

} // namespace diffseq::cli
