// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <diffseq/analysis.hpp>
#include <diffseq/bounds.hpp>
#include <diffseq/dividing.hpp>
#include <diffseq/solver.hpp>

#include "oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace diffseq;
using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

struct Check
{
    bool ok = true;
    std::ostringstream notes;

    void require(bool condition, const std::string & what)
    {
        if (! condition) {
            if (ok)
                notes << what;
            ok = false;
        }
    }
};

Rational pow2_inverse(std::size_t k)
{
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return make_rational(1, den);
}

Float to_float(const Rational & x)
{
    return Float(x.get_num().get_str()) / Float(x.get_den().get_str());
}

void thue_morse(Check & c)
{
    c.require(thue_morse_block(1).to_string() == "10", "block(1)");
    c.require(thue_morse_block(2).to_string() == "1001", "block(2)");
    c.require(stretch_block(3, 1).to_string() == "1100001100111100", "stretch(3,1)");
    c.require(stretch_block(2, 2).to_string() == "1111000000001111", "stretch(2,2)");
}

void worked_example(Check & c)
{
    const std::vector<std::uint64_t> w{5, 6, 10, 11, 12, 28};
    auto p22 = Coloring::stretched(2, 2);
    c.require(is_mono_diffsequence(w, GapSet::powers_of_two(), p22), "[5,6,10,11,12,28] under P_{2,2}");
    c.require(p22.color_of(5) == 0, "color 0");
    const std::vector<std::uint64_t> projected{2, 3, 7};
    c.require(is_mono_diffsequence(projected, GapSet::powers_of_two(), Coloring::thue_morse(2)), "[2,3,7] under P_2");
}

void gap_counts(Check & c)
{
    for (unsigned t = 2; t <= 8; ++t) {
        auto p = Coloring::thue_morse(t);
        const std::uint64_t n = std::uint64_t{1} << (t + 2);
        for (unsigned m = 0; m + 2 <= t; ++m)
            c.require(max_gap_count(p, GapSet::powers_of_two(), std::uint64_t{1} << m, n) <= m + 1,
                "t=" + std::to_string(t) + " m=" + std::to_string(m));
        c.require(max_gap_count(p, GapSet::powers_of_two(), std::uint64_t{1} << (t - 1), n) == 0,
            "gap 2^{t-1} at t=" + std::to_string(t));
    }
}

void certified_bounds(Check & c)
{
    // 2^4 (8 - 2 - 8 + 4) + 2 and 2^9 (32 - 4 - 32 + 8) + 4.
    c.require(refined_bound(8, 4, 0) == 16 * 2 + 2, "formula (8,4,0)");
    c.require(refined_bound(32, 8, 1) == 512 * 4 + 4, "formula (32,8,1)");
    for (auto [k, t, u, expect] : {std::tuple<std::uint64_t, unsigned, unsigned, std::uint64_t>{8, 4, 0, 34}, {32, 8, 1, 2052}}) {
        auto result = certify_bound(k, t, u);
        const auto * cert = std::get_if<Certificate>(&result);
        c.require(cert && cert->implied_bound() == expect && cert->n == expect - 1 && cert->longest_found < k && revalidate(*cert),
            "certificate k=" + std::to_string(k));
    }
}

void exact_delta(Check & c)
{
    const auto members = GapSet::powers_of_two().members_up_to(20);
    const auto min_longest = oracle::min_longest_over_colorings(20, oracle::gap_mask(20, {members.begin(), members.end()}));
    for (std::size_t k = 2; k <= 5; ++k) {
        const auto start = std::chrono::steady_clock::now();
        auto result = delta(GapSet::powers_of_two(), k, 2, 4096);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(result.status == SolverResult::Status::Found, "k=" + std::to_string(k) + " terminated");
        c.require(seconds < 60, "k=" + std::to_string(k) + " under 60 s");
        c.require(result.delta <= (std::uint64_t{1} << k) - 1, "k=" + std::to_string(k) + " below 2^k - 1");
        if (k == 2)
            c.require(result.delta == 3, "delta(pow2, 2) = 3");
        if (k <= 4) {
            std::uint64_t brute = 0;
            for (std::uint64_t n = 1; n <= 20 && ! brute; ++n)
                if (min_longest[n] >= k)
                    brute = n;
            c.require(brute == result.delta, "k=" + std::to_string(k) + " matches enumeration");
        }
    }
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::uint64_t n = 1; n <= 20; ++n) {
            const bool exists = exists_valid_coloring(GapSet::powers_of_two(), k, 2, n).status == SearchOutcome::Status::Found;
            c.require(exists == (min_longest[n] < k), "decision k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
}

void factorial_coloring(Check & c)
{
    auto alpha = factorial_alpha(8);
    auto result = verify_avoidance(Coloring::beatty(alpha), GapSet::factorials(), 4, 1'000'000);
    c.require(std::holds_alternative<Certificate>(result), "no length-4 diffsequence on [1..10^6]");
    c.require(alpha.interval().inside(make_rational(7, 16), make_rational(1, 2)), "alpha in [7/16, 1/2)");
    BigInt d = 1;
    for (unsigned k = 1; k <= 20; ++k) {
        d *= k;
        c.require(scaled_mod2_range(alpha, d).inside(make_rational(1, 3), Rational(1)), "k!alpha mod 2 at k=" + std::to_string(k));
    }
}

void dividing_construction(Check & c)
{
    const std::uint64_t N = 100'000;
    for (const auto & gen : {DividingGenerator::counting({1}), DividingGenerator::periodic({1}, {3})}) {
        auto nested = nested_alpha(gen, N);
        const Rational floor_value = pow2_inverse(nested.run_bound);
        for (std::size_t t = 1; t <= nested.T; ++t) {
            std::vector<std::uint64_t> a;
            for (std::size_t i = 1; i <= t; ++i)
                a.push_back(gen.at(i));
            auto table = build_intervals(a);
            for (std::size_t b = 1; b <= t; ++b)
                c.require(floor_value <= table.lower[b - 1] && table.lower[b - 1] < table.upper[b - 1] && table.upper[b - 1] <= 1,
                    gen.descriptor() + " interval bounds");
        }
        for (const auto & d : nested.d)
            c.require(nested.window().contains(mod2(nested.alpha * d)), gen.descriptor() + " window");
        auto gaps = GapSet::dividing(gen);
        auto built = dividing_coloring(gaps, N);
        const std::size_t k = (std::size_t{1} << nested.run_bound) + 1;
        c.require(std::holds_alternative<Certificate>(verify_avoidance(built.coloring, gaps, k, N)), gen.descriptor() + " avoidance");
    }
}

void propagation(Check & c)
{
    std::mt19937_64 rng(20240);
    for (int g = 0; g < 10; ++g) {
        const std::size_t t = 2 + rng() % 7;
        std::vector<std::uint64_t> a{1};
        for (std::size_t i = 1; i < t; ++i)
            a.push_back(2 + rng() % 6);
        auto table = build_intervals(a);
        std::vector<BigInt> d{BigInt(1)};
        for (std::size_t i = 1; i < t; ++i)
            d.push_back(d.back() * big_from_u64(a[i]));
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t b = 1 + rng() % t;
            const auto level = table.level(b);
            const Rational x = level.lo + level.width() * make_rational(big_from_u64(rng() % 1000001), 1000000);
            const Rational gamma = (x + 2 * big_from_u64(rng() % 1000)) / d[b - 1];
            for (std::size_t h = b + 1; h <= t; ++h)
                c.require(table.level(h).contains(mod2(gamma * d[h - 1])), "propagation");
        }
    }
}

void closed_form(Check & c)
{
    auto oracle = [](std::uint64_t k) {
        using boost::multiprecision::pow;
        using boost::multiprecision::sqrt;
        const Float kk = k;
        return pow(Float(2), sqrt(2 * kk)) * ((sqrt(Float(2)) - 1) * kk / 8 - sqrt(kk) / 8) + sqrt(kk) / 2;
    };
    const Float v32 = to_float(theorem_bound(32).value), v50 = to_float(theorem_bound(50).value);
    c.require(boost::multiprecision::abs(v32 - Float("245.97")) <= Float("1e-2"), "k=32 near 245.97");
    c.require(boost::multiprecision::abs(v50 - Float("1749.4")) <= Float("1e-1"), "k=50 near 1749.4");
    c.require(boost::multiprecision::abs(v32 - oracle(32)) <= Float("1e-6"), "k=32 against oracle");
    c.require(boost::multiprecision::abs(v50 - oracle(50)) <= Float("1e-6"), "k=50 against oracle");
    for (std::uint64_t k = 2; k <= 200; ++k)
        if (auto standard = standard_params(k))
            c.require(best_params(k).bound >= standard->bound, "best_params at k=" + std::to_string(k));
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char * name;
        double limit;
        std::function<void(Check &)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Thue-Morse construction", 1, thue_morse},
        {2, "worked diffsequence under P_{2,2} and P_2", 1, worked_example},
        {3, "gap counts in P_t (t = 2..8)", 30, gap_counts},
        {4, "certified bounds 34 and 2052", 10, certified_bounds},
        {5, "exact Delta(pow2, k) for k = 2..5", 4 * 60, exact_delta},
        {6, "factorial Beatty coloring on [1..10^6]", 60, factorial_coloring},
        {7, "dividing construction on [1..10^5]", 60, dividing_construction},
        {8, "interval propagation", 10, propagation},
        {9, "closed-form bound and parameter search", 10, closed_form},
    };

    int failures = 0;
    for (const auto & criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        }
        catch (const std::exception & e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(seconds < criterion.limit, "over the time limit");
        failures += ! check.ok;
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", check.ok ? "PASS" : "FAIL", criterion.id, criterion.name,
            seconds, criterion.limit, check.ok ? "" : ": ", check.notes.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
