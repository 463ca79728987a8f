#include <diffseq/solver.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

namespace diffseq {

namespace {

enum class DfsStatus
{
    Stopped,
    Exhausted,
    OverBudget,
    Aborted
};

/// Position-ordered depth-first search over colorings. Positions below `from`
/// are already assigned in `color`/`len`; the search fills `from..to` and hands
/// every complete assignment to `leaf`, which returns true to stop.
class Backtracker
{
public:
    Backtracker(const std::vector<std::uint64_t> & members, std::size_t k, unsigned r,
        const std::vector<std::uint8_t> & hint, std::uint64_t budget) :
        _members(members),
        _k(k),
        _r(r),
        _hint(hint),
        _budget(budget)
    {
    }

    template <typename Leaf, typename Abort>
    DfsStatus run(std::vector<std::uint8_t> & color, std::vector<std::uint32_t> & len, std::uint64_t from,
        std::uint64_t to, std::uint64_t & nodes, Leaf && leaf, Abort && should_abort) const
    {
        std::vector<unsigned> choice(to + 2, 0);
        std::uint64_t a = from;
        while (true) {
            if (a > to) {
                if (leaf(color, len, nodes))
                    return DfsStatus::Stopped;
                a = to;
                ++choice[a];
                continue;
            }
            if (a < from)
                return DfsStatus::Exhausted;
            const unsigned options = a == 1 ? 1 : _r;
            if (choice[a] >= options) {
                choice[a] = 0;
                --a;
                if (a >= from)
                    ++choice[a];
                continue;
            }
            const std::uint8_t c = pick(a, choice[a]);
            if (++nodes > _budget)
                return DfsStatus::OverBudget;
            if ((nodes & 0xfff) == 0 && should_abort())
                return DfsStatus::Aborted;

            std::uint32_t l = 1;
            for (auto d : _members) {
                if (d >= a)
                    break;
                const auto p = a - d;
                if (color[p] == c && len[p] + 1 > l)
                    l = len[p] + 1;
            }
            if (l >= _k) {
                ++choice[a];
                continue;
            }
            color[a] = c;
            len[a] = l;
            ++a;
        }
    }

private:
    // Position 1 is always color 0; elsewhere the hint's color goes first.
    std::uint8_t pick(std::uint64_t a, unsigned i) const
    {
        if (a == 1)
            return 0;
        if (a > _hint.size())
            return static_cast<std::uint8_t>(i);
        const unsigned preferred = _hint[a - 1];
        if (i == 0)
            return static_cast<std::uint8_t>(preferred);
        return static_cast<std::uint8_t>(i <= preferred ? i - 1 : i);
    }

    const std::vector<std::uint64_t> & _members;
    std::size_t _k;
    unsigned _r;
    const std::vector<std::uint8_t> & _hint;
    std::uint64_t _budget;
};

struct Task
{
    std::vector<std::uint8_t> color;
    std::vector<std::uint32_t> len;
    std::uint64_t nodes_before = 0; ///< sequential node count on reaching this prefix
};

struct TaskOutcome
{
    DfsStatus status = DfsStatus::Aborted;
    std::uint64_t nodes = 0;
    std::vector<std::uint8_t> coloring;
};

std::vector<std::uint8_t> extract(const std::vector<std::uint8_t> & color, std::uint64_t n)
{
    return {color.begin() + 1, color.begin() + 1 + static_cast<std::ptrdiff_t>(n)};
}

SearchOutcome sequential_search(const Backtracker & search, std::uint64_t n, std::uint64_t budget)
{
    std::vector<std::uint8_t> color(n + 1, 0);
    std::vector<std::uint32_t> len(n + 1, 0);
    std::uint64_t nodes = 0;
    auto status = search.run(color, len, 1, n, nodes, [](auto &, auto &, auto) { return true; }, [] { return false; });
    SearchOutcome out;
    out.nodes = nodes;
    switch (status) {
    case DfsStatus::Stopped:
        out.status = SearchOutcome::Status::Found;
        out.coloring = extract(color, n);
        break;
    case DfsStatus::Exhausted:
        out.status = SearchOutcome::Status::None;
        break;
    default:
        out.status = SearchOutcome::Status::Inconclusive;
        out.nodes = budget;
        break;
    }
    return out;
}

// Splits the tree at a shallow depth, explores subtrees concurrently and merges
// them in sequential order, so status, coloring and node count all match the
// sequential search.
SearchOutcome parallel_search(const Backtracker & search, unsigned r, std::uint64_t n, std::uint64_t budget, unsigned threads)
{
    std::uint64_t depth = 1, width = 1;
    while (width < 8ull * threads && depth < n) {
        width *= r;
        ++depth;
    }
    if (depth >= n)
        return sequential_search(search, n, budget);

    SearchOutcome inconclusive;
    inconclusive.status = SearchOutcome::Status::Inconclusive;
    inconclusive.nodes = budget;

    std::vector<Task> tasks;
    std::vector<std::uint8_t> color(n + 1, 0);
    std::vector<std::uint32_t> len(n + 1, 0);
    std::uint64_t prefix_nodes = 0;
    auto prefix_status = search.run(color, len, 1, depth, prefix_nodes,
        [&](const auto & c, const auto & l, std::uint64_t nodes) {
            tasks.push_back({c, l, nodes});
            return false;
        },
        [] { return false; });
    if (prefix_status == DfsStatus::OverBudget)
        return inconclusive;

    std::vector<TaskOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            if (best.load() < i)
                continue;
            auto c = tasks[i].color;
            auto l = tasks[i].len;
            auto & out = outcomes[i];
            out.status = search.run(c, l, depth + 1, n, out.nodes, [](auto &, auto &, auto) { return true; },
                [&] { return best.load() < i; });
            if (out.status == DfsStatus::Stopped) {
                out.coloring = extract(c, n);
                auto current = best.load();
                while (i < current && ! best.compare_exchange_weak(current, i)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();

    std::uint64_t finished_subtrees = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto & out = outcomes[i];
        const std::uint64_t sequential = tasks[i].nodes_before + finished_subtrees + out.nodes;
        if (out.status == DfsStatus::OverBudget || sequential > budget)
            return inconclusive;
        if (out.status == DfsStatus::Stopped) {
            SearchOutcome found;
            found.status = SearchOutcome::Status::Found;
            found.coloring = out.coloring;
            found.nodes = sequential;
            return found;
        }
        if (out.status != DfsStatus::Exhausted)
            throw std::logic_error("subtree before the first solution was not fully explored");
        finished_subtrees += out.nodes;
    }
    const std::uint64_t total = prefix_nodes + finished_subtrees;
    if (total > budget)
        return inconclusive;
    SearchOutcome none;
    none.status = SearchOutcome::Status::None;
    none.nodes = total;
    return none;
}

} // namespace

SearchOutcome exists_valid_coloring(const GapSet & gaps, std::size_t k, unsigned r, std::uint64_t n,
    const SolverOptions & options, const std::vector<std::uint8_t> & hint)
{
    if (k < 2)
        throw std::invalid_argument("exists_valid_coloring needs k >= 2");
    if (r < 2 || r > 255)
        throw std::invalid_argument("color count must lie in [2, 255]");
    if (n < 1)
        throw std::invalid_argument("exists_valid_coloring needs n >= 1");
    for (auto h : hint)
        if (h >= r)
            throw std::invalid_argument("hint uses a color outside [0, r)");

    const auto members = gaps.members_up_to(n);
    Backtracker search(members, k, r, hint, options.node_budget);
    if (options.threads <= 1)
        return sequential_search(search, n, options.node_budget);
    return parallel_search(search, r, n, options.node_budget, options.threads);
}

SolverResult delta(const GapSet & gaps, std::size_t k, unsigned r, std::uint64_t cap, const SolverOptions & options)
{
    if (k < 1)
        throw std::invalid_argument("delta needs k >= 1");
    const auto start = std::chrono::steady_clock::now();
    SolverResult result;
    auto finish = [&](SolverResult & res) -> SolverResult {
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    };

    if (k == 1) {
        result.status = SolverResult::Status::Found;
        result.delta = 1;
        return finish(result);
    }

    std::vector<std::uint8_t> best(k - 1, 0);
    for (std::uint64_t n = k; n <= cap; ++n) {
        SolverOptions step = options;
        step.node_budget = options.node_budget - result.nodes;
        auto outcome = exists_valid_coloring(gaps, k, r, n, step, best);
        result.nodes += outcome.nodes;
        switch (outcome.status) {
        case SearchOutcome::Status::Found:
            best = std::move(outcome.coloring);
            break;
        case SearchOutcome::Status::None:
            result.status = SolverResult::Status::Found;
            result.delta = n;
            result.coloring = std::move(best);
            return finish(result);
        case SearchOutcome::Status::Inconclusive:
            result.status = SolverResult::Status::Inconclusive;
            result.inconclusive_at = n;
            result.coloring = std::move(best);
            return finish(result);
        }
    }
    result.status = SolverResult::Status::ExceedsCap;
    result.cap = cap;
    best.resize(std::min<std::uint64_t>(best.size(), cap));
    result.coloring = std::move(best);
    return finish(result);
}

std::string colors_to_string(const std::vector<std::uint8_t> & colors)
{
    std::string s;
    s.reserve(colors.size());
    for (auto c : colors)
        s += static_cast<char>('0' + c);
    return s;
}

} // namespace diffseq
