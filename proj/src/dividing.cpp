#include <diffseq/dividing.hpp>

#include <algorithm>

namespace diffseq {

IntervalTable build_intervals(std::span<const std::uint64_t> a)
{
    if (a.empty())
        throw std::invalid_argument("interval table needs at least one generator value");
    if (a[0] != 1)
        throw std::invalid_argument("interval tables need a_1 = 1; reduce the gap set by its first value");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] < 2)
            throw std::invalid_argument("generator value a_" + std::to_string(i + 1) + " is below 2");

    IntervalTable table;
    table.a.assign(a.begin(), a.end());
    const std::size_t t = a.size();
    table.lower.resize(t);
    table.upper.resize(t);
    table.lower[t - 1] = make_rational(1, 2);
    table.upper[t - 1] = 1;
    for (std::size_t b = t; b >= 2; --b) {
        const std::uint64_t ab = a[b - 1];
        const Rational shift = ab % 2 == 1 ? ab - 1 : ab - 2;
        table.lower[b - 2] = (shift + table.lower[b - 1]) / ab;
        table.upper[b - 2] = (shift + table.upper[b - 1]) / ab;
    }

    std::size_t best = 0, run = 0;
    for (std::size_t i = 1; i < t; ++i) {
        run = a[i] == 2 ? run + 1 : 0;
        best = std::max(best, run);
    }
    table.run_bound = best + 1;
    return table;
}

std::vector<JtInterval> nested_intervals(const DividingGenerator & generator, std::size_t count)
{
    if (generator.at(1) != 1)
        throw std::invalid_argument("nested intervals need a_1 = 1");
    std::vector<JtInterval> out;
    std::vector<std::uint64_t> prefix;
    for (std::size_t t = 1; t <= count; ++t) {
        if (generator.is_finite() && t > generator.finite_length())
            break;
        prefix.push_back(generator.at(t));
        auto table = build_intervals(prefix);
        JtInterval j{t, table.lower[0], table.upper[0]};
        if (! out.empty()) {
            j.lower = std::max(j.lower, out.back().lower);
            j.upper = std::min(j.upper, out.back().upper);
        }
        out.push_back(std::move(j));
    }
    return out;
}

RationalInterval NestedAlpha::window() const
{
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), run_bound);
    return {make_rational(1, den), Rational(1)};
}

NestedAlpha nested_alpha(const DividingGenerator & generator, std::uint64_t N)
{
    if (N < 1)
        throw std::invalid_argument("nested alpha needs N >= 1");
    if (generator.at(1) != 1)
        throw std::invalid_argument("nested alpha needs a_1 = 1; reduce the gap set by its first value");
    auto max_run = generator.max_run_of_twos();
    if (! max_run)
        throw ConstructionError("generator " + generator.descriptor() + " has unbounded runs of 2's");

    NestedAlpha result;
    result.run_bound = *max_run + 1;
    const BigInt limit = big_from_u64(N);
    BigInt d = 1;
    for (std::size_t t = 1;; ++t) {
        if (generator.is_finite() && t > generator.finite_length())
            break;
        d *= big_from_u64(generator.at(t));
        result.d.push_back(d);
        if (d > limit)
            break;
    }
    result.T = result.d.size();

    auto js = nested_intervals(generator, result.T);
    result.J = js.back();
    if (result.J.empty()) {
        std::vector<std::uint64_t> prefix;
        for (std::size_t t = 1; t <= result.T; ++t)
            prefix.push_back(generator.at(t));
        result.source = NestedAlpha::Source::FinalTable;
        result.chosen = build_intervals(prefix).level(1);
    }
    else
        result.chosen = {result.J.lower, result.J.upper};
    result.alpha = (result.chosen.lo + result.chosen.hi) / 2;
    if (! window_holds(result))
        throw ConstructionError("alpha = " + to_string(result.alpha) + " leaves the window " + to_string(result.window()));
    return result;
}

bool window_holds(const NestedAlpha & nested)
{
    const auto window = nested.window();
    return std::all_of(nested.d.begin(), nested.d.end(),
        [&](const BigInt & d) { return window.contains(mod2(nested.alpha * d)); });
}

DividingColoring dividing_coloring(const GapSet & gaps, std::uint64_t N)
{
    auto generator = gaps.generator();
    if (! generator)
        throw std::invalid_argument("gap set " + gaps.descriptor() + " is not a dividing set");
    if (N < 1)
        throw std::invalid_argument("dividing coloring needs N >= 1");
    const std::uint64_t a1 = generator->at(1);
    const std::uint64_t reduced_n = (N + a1 - 1) / a1;
    auto nested = nested_alpha(generator->with_first(1), reduced_n);
    auto beatty = Coloring::beatty(AlphaValue::exact(nested.alpha), a1);
    auto colors = beatty.materialize(N);
    BitString bits(N);
    for (std::uint64_t i = 0; i < N; ++i)
        bits.set(i, colors[i]);
    return {Coloring::explicit_prefix(std::move(bits)), std::move(nested), a1};
}

} // namespace diffseq
