#include <diffseq/gapset.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace diffseq {

namespace {

std::string join(const std::vector<std::uint64_t> & v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

void check_generator_values(const std::vector<std::uint64_t> & prefix, const std::vector<std::uint64_t> & tail)
{
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i == 0 && prefix[i] < 1)
            throw std::invalid_argument("generator value a_1 must be positive");
        if (i > 0 && prefix[i] < 2)
            throw std::invalid_argument("generator value a_" + std::to_string(i + 1) + " = " + std::to_string(prefix[i]) + " is below 2");
    }
    for (auto v : tail)
        if (v < 2)
            throw std::invalid_argument("repeating tail value " + std::to_string(v) + " is below 2");
}

} // namespace

std::vector<std::uint64_t> parse_uint_list(std::string_view text)
{
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto item = text.substr(pos, comma - pos);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v == 0)
            throw std::invalid_argument("expected a positive integer, got '" + std::string(item) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

DividingGenerator::DividingGenerator(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> tail, Tail kind) :
    _prefix(std::move(prefix)),
    _tail(std::move(tail)),
    _tail_kind(kind)
{
    check_generator_values(_prefix, _tail);
}

DividingGenerator DividingGenerator::finite(std::vector<std::uint64_t> values)
{
    if (values.empty())
        throw std::invalid_argument("finite generator needs at least one value");
    return DividingGenerator(std::move(values), {}, Tail::None);
}

DividingGenerator DividingGenerator::periodic(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> tail)
{
    if (tail.empty())
        return finite(std::move(prefix));
    return DividingGenerator(std::move(prefix), std::move(tail), Tail::Repeating);
}

DividingGenerator DividingGenerator::counting(std::vector<std::uint64_t> prefix)
{
    return DividingGenerator(std::move(prefix), {}, Tail::Counting);
}

DividingGenerator DividingGenerator::parse(std::string_view text)
{
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        return finite(parse_uint_list(text));
    auto head = text.substr(0, bar);
    auto rest = text.substr(bar + 1);
    std::vector<std::uint64_t> prefix = head.empty() ? std::vector<std::uint64_t>{} : parse_uint_list(head);
    if (rest == "+")
        return counting(std::move(prefix));
    return periodic(std::move(prefix), parse_uint_list(rest));
}

std::uint64_t DividingGenerator::at(std::size_t i) const
{
    if (i == 0)
        throw std::out_of_range("generator indices start at 1");
    if (i <= _prefix.size())
        return _prefix[i - 1];
    switch (_tail_kind) {
    case Tail::None:
        throw std::out_of_range("finite generator has no value a_" + std::to_string(i));
    case Tail::Repeating:
        return _tail[(i - _prefix.size() - 1) % _tail.size()];
    case Tail::Counting:
        return i;
    }
    return 0;
}

std::size_t DividingGenerator::max_run_of_twos_upto(std::size_t t) const
{
    if (is_finite())
        t = std::min(t, _prefix.size());
    std::size_t best = 0, run = 0;
    for (std::size_t i = 2; i <= t; ++i) {
        run = at(i) == 2 ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

std::optional<std::size_t> DividingGenerator::max_run_of_twos() const
{
    switch (_tail_kind) {
    case Tail::None:
        return max_run_of_twos_upto(_prefix.size());
    case Tail::Repeating:
        if (std::all_of(_tail.begin(), _tail.end(), [](auto v) { return v == 2; }))
            return std::nullopt;
        // Two full tail periods past the prefix expose every run, including wrap-around.
        return max_run_of_twos_upto(_prefix.size() + 2 * _tail.size());
    case Tail::Counting:
        return max_run_of_twos_upto(_prefix.size() + 3);
    }
    return std::nullopt;
}

DividingGenerator DividingGenerator::with_first(std::uint64_t a1) const
{
    auto prefix = _prefix;
    if (prefix.empty()) {
        // Only counting and repeating tails can have an empty prefix.
        prefix.push_back(a1);
        if (_tail_kind == Tail::Repeating) {
            // a_1 came from the tail; shift it so the rest of the sequence is unchanged.
            std::vector<std::uint64_t> rotated(_tail.begin() + 1, _tail.end());
            rotated.push_back(_tail.front());
            return DividingGenerator(std::move(prefix), std::move(rotated), _tail_kind);
        }
    }
    else
        prefix[0] = a1;
    return DividingGenerator(std::move(prefix), _tail, _tail_kind);
}

std::string DividingGenerator::descriptor() const
{
    switch (_tail_kind) {
    case Tail::None:
        return join(_prefix);
    case Tail::Repeating:
        return join(_prefix) + "|" + join(_tail);
    case Tail::Counting:
        return join(_prefix) + "|+";
    }
    return {};
}

std::vector<BigInt> partial_products(const DividingGenerator & generator, std::size_t t)
{
    std::vector<BigInt> out;
    BigInt d = 1;
    for (std::size_t i = 1; i <= t; ++i) {
        if (generator.is_finite() && i > generator.finite_length())
            break;
        d *= big_from_u64(generator.at(i));
        out.push_back(d);
    }
    return out;
}

GapSet::GapSet(GapKind kind, std::variant<std::monostate, DividingGenerator, std::vector<std::uint64_t>, FloorPowerParams> params) :
    _kind(kind),
    _params(std::move(params))
{
}

GapSet GapSet::powers_of_two()
{
    return GapSet(GapKind::PowersOfTwo, std::monostate{});
}

GapSet GapSet::factorials()
{
    return GapSet(GapKind::Factorials, std::monostate{});
}

GapSet GapSet::dividing(DividingGenerator generator)
{
    return GapSet(GapKind::Dividing, std::move(generator));
}

GapSet GapSet::explicit_set(std::vector<std::uint64_t> members)
{
    if (std::find(members.begin(), members.end(), 0u) != members.end())
        throw std::invalid_argument("explicit gap sets hold positive integers only");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return GapSet(GapKind::Explicit, std::move(members));
}

GapSet GapSet::floor_powers(Rational alpha, Rounding rounding)
{
    alpha.canonicalize();
    if (alpha <= 1)
        throw std::invalid_argument("floor-power base " + to_string(alpha) + " must exceed 1");
    return GapSet(GapKind::FloorPowers, FloorPowerParams{std::move(alpha), rounding});
}

GapSet GapSet::parse(std::string_view descriptor)
{
    if (descriptor == "pow2")
        return powers_of_two();
    if (descriptor == "factorial")
        return factorials();
    auto colon = descriptor.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("unknown gap set '" + std::string(descriptor) + "'");
    auto head = descriptor.substr(0, colon);
    auto body = descriptor.substr(colon + 1);
    if (head == "dividing")
        return dividing(DividingGenerator::parse(body));
    if (head == "explicit")
        return explicit_set(parse_uint_list(body));
    if (head == "floorpow") {
        auto second = body.find(':');
        auto alpha = parse_rational(body.substr(0, second));
        auto mode = second == std::string_view::npos ? std::string_view("floor") : body.substr(second + 1);
        if (mode != "floor" && mode != "ceiling")
            throw std::invalid_argument("floorpow rounding must be 'floor' or 'ceiling', got '" + std::string(mode) + "'");
        return floor_powers(alpha, mode == "floor" ? Rounding::Floor : Rounding::Ceiling);
    }
    throw std::invalid_argument("unknown gap set '" + std::string(descriptor) + "'");
}

std::vector<std::uint64_t> GapSet::members_up_to(std::uint64_t n) const
{
    std::vector<std::uint64_t> out;
    switch (_kind) {
    case GapKind::PowersOfTwo:
        for (std::uint64_t d = 1; d <= n; d <<= 1) {
            out.push_back(d);
            if (d > n / 2)
                break;
        }
        break;
    case GapKind::Factorials:
    case GapKind::Dividing: {
        auto gen = *generator();
        unsigned __int128 d = 1;
        for (std::size_t i = 1;; ++i) {
            if (gen.is_finite() && i > gen.finite_length())
                break;
            d *= gen.at(i);
            if (d > n)
                break;
            if (out.empty() || out.back() != static_cast<std::uint64_t>(d))
                out.push_back(static_cast<std::uint64_t>(d));
        }
        break;
    }
    case GapKind::Explicit: {
        const auto & members = std::get<std::vector<std::uint64_t>>(_params);
        auto end = std::upper_bound(members.begin(), members.end(), n);
        out.assign(members.begin(), end);
        break;
    }
    case GapKind::FloorPowers: {
        const auto & p = std::get<FloorPowerParams>(_params);
        BigInt num = 1, den = 1;
        const BigInt bound = big_from_u64(n);
        while (true) {
            BigInt v;
            if (p.rounding == Rounding::Floor)
                mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            else
                mpz_cdiv_q(v.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (v > bound)
                break;
            auto member = to_u64(v);
            if (member >= 1 && (out.empty() || out.back() != member))
                out.push_back(member);
            num *= p.alpha.get_num();
            den *= p.alpha.get_den();
        }
        break;
    }
    }
    return out;
}

bool GapSet::contains(std::uint64_t d) const
{
    if (d == 0)
        return false;
    if (_kind == GapKind::PowersOfTwo)
        return (d & (d - 1)) == 0;
    if (_kind == GapKind::Explicit) {
        const auto & members = std::get<std::vector<std::uint64_t>>(_params);
        return std::binary_search(members.begin(), members.end(), d);
    }
    auto members = members_up_to(d);
    return ! members.empty() && members.back() == d;
}

GapSet GapSet::reduce_by_first() const
{
    if (_kind != GapKind::Dividing)
        throw std::invalid_argument("reduce_by_first applies to dividing gap sets only");
    return dividing(std::get<DividingGenerator>(_params).with_first(1));
}

std::optional<DividingGenerator> GapSet::generator() const
{
    switch (_kind) {
    case GapKind::PowersOfTwo:
        return DividingGenerator::periodic({1}, {2});
    case GapKind::Factorials:
        return DividingGenerator::counting({});
    case GapKind::Dividing:
        return std::get<DividingGenerator>(_params);
    default:
        return std::nullopt;
    }
}

std::string GapSet::descriptor() const
{
    switch (_kind) {
    case GapKind::PowersOfTwo:
        return "pow2";
    case GapKind::Factorials:
        return "factorial";
    case GapKind::Dividing:
        return "dividing:" + std::get<DividingGenerator>(_params).descriptor();
    case GapKind::Explicit:
        return "explicit:" + join(std::get<std::vector<std::uint64_t>>(_params));
    case GapKind::FloorPowers: {
        const auto & p = std::get<FloorPowerParams>(_params);
        return "floorpow:" + to_string(p.alpha) + (p.rounding == Rounding::Floor ? ":floor" : ":ceiling");
    }
    }
    return {};
}

} // namespace diffseq
