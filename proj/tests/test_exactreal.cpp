#include <diffseq/exactreal.hpp>

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace diffseq;
using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

// 2 - e/2 - 1/(2e), evaluated through exp rather than the series.
Float alpha_oracle()
{
    const Float e = boost::multiprecision::exp(Float(1));
    return 2 - e / 2 - 1 / (2 * e);
}

Float to_float(const Rational & x)
{
    return Float(x.get_num().get_str()) / Float(x.get_den().get_str());
}

Rational factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

} // namespace

TEST_CASE("factorial alpha localises to [7/16, 1/2)")
{
    for (std::size_t terms = 3; terms <= 12; ++terms) {
        auto a = factorial_alpha(terms);
        CHECK(a.interval().inside(make_rational(7, 16), make_rational(1, 2)));
    }
}

TEST_CASE("one-term enclosure")
{
    auto a = factorial_alpha(1);
    CHECK(a.hi() == make_rational(1, 2));
    CHECK(a.lo() == make_rational(1, 2) - factorial_tail_bound(1));
    CHECK(factorial_tail_bound(1) == make_rational(1, 12));
    CHECK(a.interval().contains(make_rational(45691, 100000)));
}

TEST_CASE("enclosures contain the exp-based value")
{
    const Float truth = alpha_oracle();
    for (std::size_t terms = 1; terms <= 30; ++terms) {
        auto a = factorial_alpha(terms);
        CHECK(to_float(a.lo()) <= truth);
        CHECK(truth <= to_float(a.hi()));
    }
}

TEST_CASE("width shrinks as terms grow")
{
    CHECK(factorial_alpha(5).interval().width() < factorial_alpha(2).interval().width());
    for (std::size_t terms = 1; terms < 20; ++terms)
        CHECK(factorial_alpha(terms + 1).interval().width() < factorial_alpha(terms).interval().width());
}

TEST_CASE("tail bound soundness")
{
    for (std::size_t terms = 1; terms <= 10; ++terms) {
        const Rational tail = factorial_tail_bound(terms);
        CHECK(make_rational(1, 1) / factorial(2 * terms + 2) < tail);
        CHECK(factorial_partial_sum(terms + 20) - factorial_partial_sum(terms) <= tail);
    }
    Rational sum = 0;
    for (unsigned i = 1; i <= 6; ++i)
        sum += 1 / factorial(2 * i);
    CHECK(factorial_partial_sum(6) == sum);
}

TEST_CASE("refinement never loosens the enclosure")
{
    auto a = factorial_alpha(1);
    for (int step = 0; step < 6; ++step) {
        auto b = a.refined();
        CHECK(b.terms() == 2 * a.terms());
        CHECK(b.lo() >= a.lo());
        CHECK(b.hi() <= a.hi());
        CHECK(b.interval().width() < a.interval().width());
        a = b;
    }
    auto exact = AlphaValue::exact(make_rational(3, 7));
    CHECK(exact.refined().lo() == exact.lo());
    auto narrow = factorial_alpha(2).refined_to_width(make_rational(1, 1000000000));
    CHECK(narrow.interval().width() <= make_rational(1, 1000000000));
}

TEST_CASE("floor parity of exact rationals")
{
    CHECK(floor_parity(AlphaValue::exact(make_rational(5, 6)), std::uint64_t{3}) == 0);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t p = rng() % 1000000, q = 1 + rng() % 1000000, m = 1 + rng() % 1000000000;
        const auto alpha = AlphaValue::exact(make_rational(big_from_u64(p), big_from_u64(q)));
        const unsigned __int128 prod = static_cast<unsigned __int128>(m) * p;
        const int expect = static_cast<int>((prod / q) % 2);
        REQUIRE(floor_parity(alpha, m) == expect);
    }
}

TEST_CASE("floor parity of the factorial alpha")
{
    auto alpha = factorial_alpha(3);
    CHECK(floor_parity(alpha, std::uint64_t{1}) == 0);
    CHECK(floor_parity(alpha, std::uint64_t{2}) == 0);

    const Float truth = alpha_oracle();
    auto bulk = floor_parities(alpha, 20000);
    REQUIRE(bulk.size() == 20000);
    for (std::uint64_t m = 1; m <= 20000; ++m) {
        const Float v = truth * m;
        const int expect = static_cast<int>(boost::multiprecision::floor(v).convert_to<std::uint64_t>() % 2);
        REQUIRE(bulk[m - 1] == expect);
        if (m % 97 == 0)
            REQUIRE(floor_parity(alpha, m) == expect);
    }
    const BigInt huge("123456789012345678901234567890");
    const Float v = truth * Float(huge.get_str());
    const Float fl = boost::multiprecision::floor(v);
    const int expect = static_cast<int>(boost::multiprecision::fmod(fl, Float(2)).convert_to<int>());
    CHECK(floor_parity(alpha, huge) == expect);
}

TEST_CASE("refine cap reports ambiguity")
{
    auto coarse = factorial_alpha(1);
    CHECK_THROWS_AS(floor_parity(coarse, std::uint64_t{2}, 0), AmbiguousError);
    CHECK(floor_parity(coarse, std::uint64_t{2}, 2) == 0);
    CHECK_THROWS_AS(scaled_mod2_range(coarse, BigInt(6), 0), AmbiguousError);
}

TEST_CASE("k! alpha mod 2 lies in [1/3, 1)")
{
    auto alpha = factorial_alpha(4);
    BigInt d = 1;
    for (unsigned k = 1; k <= 20; ++k) {
        d *= k;
        auto range = scaled_mod2_range(alpha, d);
        CHECK(range.width() < make_rational(1, 12));
        CHECK_MESSAGE(range.inside(make_rational(1, 3), Rational(1)), "k = " << k);
    }
}

TEST_CASE("10! alpha mod 2 agrees with direct summation")
{
    auto range = scaled_mod2_range(factorial_alpha(3), BigInt(3628800));
    const Float scaled = alpha_oracle() * 3628800;
    const Float residue = scaled - 2 * boost::multiprecision::floor(scaled / 2);
    CHECK(to_float(range.lo) <= residue);
    CHECK(residue <= to_float(range.hi));
    CHECK(range.inside(make_rational(1, 3), Rational(1)));
}
