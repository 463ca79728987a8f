#include <diffseq/cli.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace diffseq;
using namespace diffseq::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome
{
    int code;
    Json out;
    Json err;
};

Outcome call(const std::vector<std::string> & argv)
{
    std::ostringstream out, err;
    const int code = run(argv, out, err);
    Outcome o{code, {}, {}};
    if (! out.str().empty())
        o.out = Json::parse(out.str());
    if (! err.str().empty())
        o.err = Json::parse(err.str());
    return o;
}

std::string usage_message(const std::vector<std::string> & argv)
{
    try {
        parse_command(argv);
    }
    catch (const UsageError & e) {
        return e.what();
    }
    return "";
}

fs::path scratch(const std::string & name)
{
    auto dir = fs::temp_directory_path() / "diffseq-cli-test";
    fs::create_directories(dir);
    return dir / name;
}

void strip_timing(Json & j)
{
    if (j.is_object()) {
        j.erase("seconds");
        for (auto & [key, value] : j.items())
            strip_timing(value);
    }
}

void check_golden(const std::string & name, Json doc)
{
    strip_timing(doc);
    const fs::path path = fs::path(DIFFSEQ_GOLDEN_DIR) / (name + ".json");
    if (std::getenv("DIFFSEQ_UPDATE_GOLDEN")) {
        std::ofstream(path) << doc.dump(2) << "\n";
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    CHECK_MESSAGE(Json::parse(in) == doc, name);
}

} // namespace

TEST_CASE("parsing examples")
{
    auto delta_cmd = std::get<DeltaCommand>(parse_command({"delta", "--gapset", "pow2", "--k", "3"}));
    CHECK(delta_cmd.gapset.descriptor() == "pow2");
    CHECK(delta_cmd.k == 3);
    CHECK(delta_cmd.r == 2);
    CHECK(delta_cmd.solver.node_budget == 100'000'000);
    CHECK(delta_cmd.solver.threads == 1);

    auto color = std::get<ColorCommand>(parse_command({"color", "--family", "pt", "--t", "3", "--n", "16"}));
    CHECK(color.family == ColorCommand::Family::ThueMorse);
    CHECK(color.t == 3);
    CHECK(color.n == 16);
    CHECK(color.memory_cap == std::uint64_t{1} << 30);

    auto bound = std::get<BoundCommand>(parse_command({"bound", "--k", "32", "--optimize", "--certify"}));
    CHECK(bound.k == 32);
    CHECK(bound.optimize);
    CHECK(bound.certify);
    CHECK_FALSE(bound.t);

    auto budget = std::get<DeltaCommand>(parse_command({"delta", "--gapset", "pow2", "--k", "4", "--budget", "1e9", "--threads", "4"}));
    CHECK(budget.solver.node_budget == 1'000'000'000);
    CHECK(budget.solver.threads == 4);

    auto intervals = std::get<IntervalsCommand>(parse_command({"intervals", "--a", "1,2,3|2,3", "--t", "5"}));
    CHECK(intervals.t == std::size_t{5});
}

TEST_CASE("usage errors name the offending flag")
{
    CHECK(usage_message({"delta", "--gapset", "pow2", "--k", "3", "--bogus", "1"}).find("--bogus") != std::string::npos);
    CHECK(usage_message({"delta", "--gapset", "pow2", "--k", "three"}).find("--k") != std::string::npos);
    CHECK(usage_message({"delta", "--gapset", "pow3", "--k", "3"}).find("--gapset") != std::string::npos);
    CHECK(usage_message({"delta", "--k", "3"}).find("--gapset") != std::string::npos);
    CHECK(usage_message({"delta", "--gapset", "pow2", "--k", "3", "--budget", "1.5"}).find("--budget") != std::string::npos);
    CHECK(usage_message({"delta", "--gapset", "pow2", "--k", "3", "--r", "1"}).find("--r") != std::string::npos);
    CHECK(usage_message({"bound", "--k", "32", "--optimize", "--t", "8"}).find("--optimize") != std::string::npos);
    CHECK(usage_message({"color", "--family", "hilbert", "--n", "4"}).find("--family") != std::string::npos);
    CHECK(usage_message({"color", "--family", "pt", "--n", "4"}).find("--t") != std::string::npos);
    CHECK(usage_message({"color", "--family", "dividing", "--n", "4"}).find("--a") != std::string::npos);
    CHECK(usage_message({"intervals", "--a", "2,3"}).find("--a") != std::string::npos);
    CHECK(usage_message({"alpha", "--a", "1,3"}).find("--n") != std::string::npos);
    CHECK_FALSE(usage_message({}).empty());
    CHECK_FALSE(usage_message({"frobnicate"}).empty());
}

TEST_CASE("execution examples")
{
    auto color = call({"color", "--family", "pt", "--t", "2", "--n", "8"});
    REQUIRE(color.code == 0);
    CHECK(color.out["bits"] == "10011001");

    auto delta = call({"delta", "--gapset", "pow2", "--k", "2"});
    REQUIRE(delta.code == 0);
    CHECK(delta.out["delta"] == 3);

    auto stretched = call({"color", "--family", "ptu", "--t", "3", "--u", "1", "--n", "16"});
    CHECK(stretched.out["bits"] == "1100001100111100");

    auto bound = call({"bound", "--k", "32"});
    REQUIRE(bound.code == 0);
    CHECK(bound.out["params"] == "optimized");
    CHECK(bound.out["certifiedBound"] == "not run");
}

TEST_CASE("exit codes")
{
    auto usage = call({"delta", "--gapset", "pow2"});
    CHECK(usage.code == Usage);
    CHECK(usage.err["error"]["kind"] == "usage");

    auto budget = call({"delta", "--gapset", "pow2", "--k", "7", "--budget", "50"});
    CHECK(budget.code == ResourceCap);
    CHECK(budget.err["error"]["kind"] == "resource_cap");
    CHECK(budget.err["error"]["partial"]["status"] == "inconclusive");

    auto memory = call({"color", "--family", "pt", "--t", "40", "--n", "5"});
    CHECK(memory.code == ResourceCap);
    CHECK(memory.err["error"]["kind"] == "resource_cap");

    auto capped = call({"delta", "--gapset", "explicit:2", "--k", "2", "--cap", "50"});
    CHECK(capped.code == Success);
    CHECK(capped.out["status"] == "exceeds_cap");

    auto missing = call({"verify", "--coloring", scratch("absent.txt").string(), "--gapset", "pow2", "--k", "3"});
    CHECK(missing.code == Usage);
    CHECK(missing.err["error"]["kind"] == "io");

    const auto file = scratch("p1.txt");
    REQUIRE(call({"color", "--family", "pt", "--t", "1", "--n", "4", "--out", file.string()}).code == 0);
    auto counter = call({"verify", "--coloring", file.string(), "--gapset", "pow2", "--k", "2", "--n", "10"});
    CHECK(counter.code == Counterexample);
    CHECK(counter.err["error"]["kind"] == "counterexample");
    CHECK(counter.err["error"]["witness"]["positions"].size() == 2);

    auto periodic_needs_n = call({"longest", "--coloring", file.string(), "--gapset", "pow2"});
    CHECK(periodic_needs_n.code == Usage);

    std::ostringstream help, none;
    CHECK(run({"delta", "--help"}, help, none) == Success);
    CHECK(help.str().find("--gapset") != std::string::npos);
}

TEST_CASE("color files feed verify and longest")
{
    const auto file = scratch("fact.txt");
    auto made = call({"color", "--family", "factorial", "--n", "100000", "--out", file.string()});
    REQUIRE(made.code == 0);
    CHECK(made.out["out"] == file.string());

    auto verified = call({"verify", "--coloring", file.string(), "--gapset", "factorial", "--k", "4"});
    REQUIRE(verified.code == 0);
    CHECK(verified.out["impliedBound"] == 100001);
    CHECK(verified.out["longestFound"] == 3);

    auto longest = call({"longest", "--coloring", file.string(), "--gapset", "factorial"});
    REQUIRE(longest.code == 0);
    CHECK(longest.out["length"] == 3);

    auto direct = longest_mono(Coloring::beatty(factorial_alpha(8)), GapSet::factorials(), 100000);
    CHECK(longest.out["length"] == direct.length);
    CHECK(longest.out["witness"]["positions"] == Json(direct.witness.positions));

    const auto dividing = scratch("div.txt");
    auto built = call({"color", "--family", "dividing", "--a", "1,2,3|2,3", "--n", "5000", "--out", dividing.string()});
    REQUIRE(built.code == 0);
    std::ifstream sidecar(dividing.string() + ".json");
    REQUIRE(sidecar.good());
    auto side = Json::parse(sidecar);
    CHECK(side["k_run"] == 2);
    CHECK(side["window"] == "[1/4, 1/1]");
    CHECK(call({"verify", "--coloring", dividing.string(), "--gapset", "dividing:1,2,3|2,3", "--k", "5"}).code == 0);
}

TEST_CASE("certify verb")
{
    auto ok = call({"certify", "--k", "32", "--t", "8", "--u", "1"});
    REQUIRE(ok.code == 0);
    CHECK(ok.out["impliedBound"] == 2052);
    CHECK(ok.out["refinedBound"] == 2052);

    auto vacuous = call({"certify", "--k", "2", "--t", "9"});
    CHECK(vacuous.code == Usage);
}

TEST_CASE("golden outputs")
{
    check_golden("delta", call({"delta", "--gapset", "pow2", "--k", "4"}).out);
    check_golden("bound", call({"bound", "--k", "32", "--t", "8", "--u", "1", "--certify"}).out);
    check_golden("bound_optimize", call({"bound", "--k", "50", "--optimize"}).out);
    check_golden("certify", call({"certify", "--k", "8", "--t", "4"}).out);
    check_golden("color", call({"color", "--family", "ptu", "--t", "2", "--u", "2", "--n", "32"}).out);
    check_golden("color_dividing", call({"color", "--family", "dividing", "--gapset", "factorial", "--n", "40"}).out);
    check_golden("alpha", call({"alpha", "--terms", "4", "--scaled-upto", "6"}).out);
    check_golden("alpha_nested", call({"alpha", "--a", "1|3", "--n", "10"}).out);
    check_golden("intervals", call({"intervals", "--a", "1,2,3,4"}).out);

    const auto file = scratch("p4.txt");
    REQUIRE(call({"color", "--family", "pt", "--t", "4", "--n", "33", "--out", file.string()}).code == 0);
    check_golden("verify", call({"verify", "--coloring", file.string(), "--gapset", "pow2", "--k", "8", "--n", "33"}).out);
    check_golden("longest", call({"longest", "--coloring", file.string(), "--gapset", "pow2", "--n", "33"}).out);
}
