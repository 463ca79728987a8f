#include <diffseq/analysis.hpp>

#include <algorithm>

namespace diffseq {

bool is_mono_diffsequence(std::span<const std::uint64_t> positions, const GapSet & gaps, const Coloring & c)
{
    if (positions.empty() || positions.front() == 0)
        return false;
    const int color = c.color_of(positions.front());
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1])
            return false;
        if (! gaps.contains(positions[i] - positions[i - 1]))
            return false;
        if (c.color_of(positions[i]) != color)
            return false;
    }
    return true;
}

LongestResult longest_mono(std::span<const std::uint8_t> colors, std::span<const std::uint64_t> members)
{
    const std::uint64_t n = colors.size();
    LongestResult result;
    if (n == 0)
        return result;

    std::vector<std::uint64_t> len(n + 1, 0), pred(n + 1, 0);
    std::uint64_t best_end = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
        len[a] = 1;
        const auto color = colors[a - 1];
        // Largest gap first, so ties keep the smallest predecessor position.
        auto end = std::lower_bound(members.begin(), members.end(), a);
        for (auto it = end; it != members.begin();) {
            const std::uint64_t p = a - *--it;
            if (colors[p - 1] == color && len[p] + 1 > len[a]) {
                len[a] = len[p] + 1;
                pred[a] = p;
            }
        }
        if (len[a] > len[best_end])
            best_end = a;
    }

    result.length = len[best_end];
    result.witness.color = colors[best_end - 1];
    for (std::uint64_t p = best_end; p != 0; p = pred[p])
        result.witness.positions.push_back(p);
    std::reverse(result.witness.positions.begin(), result.witness.positions.end());
    return result;
}

LongestResult longest_mono(const Coloring & c, const GapSet & gaps, std::uint64_t n)
{
    auto colors = c.materialize(n);
    auto members = gaps.members_up_to(n);
    return longest_mono(colors, members);
}

std::optional<std::uint64_t> first_reaching(std::span<const std::uint8_t> colors, std::span<const std::uint64_t> members, std::size_t k)
{
    const std::uint64_t n = colors.size();
    std::vector<std::uint64_t> len(n + 1, 0);
    for (std::uint64_t a = 1; a <= n; ++a) {
        len[a] = 1;
        auto end = std::lower_bound(members.begin(), members.end(), a);
        for (auto it = members.begin(); it != end; ++it) {
            const std::uint64_t p = a - *it;
            if (colors[p - 1] == colors[a - 1])
                len[a] = std::max(len[a], len[p] + 1);
        }
        if (len[a] >= k)
            return a;
    }
    return std::nullopt;
}

std::uint64_t max_gap_count(const Coloring & c, const GapSet & gaps, std::uint64_t gap_size, std::uint64_t n)
{
    if (! gaps.contains(gap_size))
        return 0;
    auto colors = c.materialize(n);
    auto members = gaps.members_up_to(n);
    std::vector<std::uint64_t> count(n + 1, 0);
    std::uint64_t best = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
        auto end = std::lower_bound(members.begin(), members.end(), a);
        for (auto it = members.begin(); it != end; ++it) {
            const std::uint64_t p = a - *it;
            if (colors[p - 1] == colors[a - 1])
                count[a] = std::max(count[a], count[p] + (*it == gap_size ? 1 : 0));
        }
        best = std::max(best, count[a]);
    }
    return best;
}

AvoidanceResult verify_avoidance(const Coloring & c, const GapSet & gaps, std::size_t k, std::uint64_t n)
{
    if (k < 2)
        throw std::invalid_argument("verify_avoidance needs k >= 2");
    auto longest = longest_mono(c, gaps, n);
    if (longest.length < k)
        return Certificate{gaps.descriptor(), k, c.color_count(), n, c, longest.length};
    longest.witness.positions.resize(k);
    return longest.witness;
}

bool revalidate(const Certificate & cert)
{
    auto gaps = GapSet::parse(cert.gapset);
    auto rerun = longest_mono(cert.coloring, gaps, cert.n);
    return rerun.length == cert.longest_found && rerun.length < cert.k;
}

} // namespace diffseq
