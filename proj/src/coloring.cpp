#include <diffseq/coloring.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace diffseq {

BitString::BitString(std::size_t size, bool value) :
    _words((size + 63) / 64, value ? ~std::uint64_t{0} : 0),
    _size(size)
{
    if (value && (size & 63))
        _words.back() &= (std::uint64_t{1} << (size & 63)) - 1;
}

BitString BitString::from_string(std::string_view bits)
{
    BitString out;
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument(std::string("bit strings hold only '0' and '1', found '") + ch + "'");
        out.push_back(ch == '1');
    }
    return out;
}

void BitString::set(std::size_t i, bool value)
{
    auto mask = std::uint64_t{1} << (i & 63);
    if (value)
        _words[i >> 6] |= mask;
    else
        _words[i >> 6] &= ~mask;
}

void BitString::push_back(bool value)
{
    if ((_size & 63) == 0)
        _words.push_back(0);
    ++_size;
    set(_size - 1, value);
}

BitString BitString::doubled_with_complement() const
{
    BitString out = *this;
    if ((_size & 63) == 0) {
        out._words.reserve(2 * _words.size());
        for (auto w : _words)
            out._words.push_back(~w);
        out._size = 2 * _size;
        return out;
    }
    for (std::size_t i = 0; i < _size; ++i)
        out.push_back(! (*this)[i]);
    return out;
}

std::string BitString::to_string() const
{
    std::string s(_size, '0');
    for (std::size_t i = 0; i < _size; ++i)
        if ((*this)[i])
            s[i] = '1';
    return s;
}

bool operator==(const BitString & a, const BitString & b)
{
    return a._size == b._size && a._words == b._words;
}

namespace {

void check_cap(unsigned log2_bits, std::uint64_t cap)
{
    if (log2_bits >= 63 || (std::uint64_t{1} << log2_bits) > cap)
        throw MemoryCapError("block of 2^" + std::to_string(log2_bits) + " bits exceeds the memory cap of "
            + std::to_string(cap) + " bits");
}

} // namespace

BitString thue_morse_block(unsigned t, std::uint64_t memory_cap_bits)
{
    check_cap(t, memory_cap_bits);
    BitString block = BitString::from_string("1");
    for (unsigned i = 0; i < t; ++i)
        block = block.doubled_with_complement();
    return block;
}

BitString stretch_block(unsigned t, unsigned u, std::uint64_t memory_cap_bits)
{
    check_cap(t + u, memory_cap_bits);
    BitString base = thue_morse_block(t, memory_cap_bits);
    if (u == 0)
        return base;
    const std::size_t copies = std::size_t{1} << u;
    BitString out(base.size() * copies);
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i])
            for (std::size_t j = 0; j < copies; ++j)
                out.set(i * copies + j, true);
    return out;
}

Coloring::Coloring(Kind kind, BitString bits, std::optional<AlphaValue> alpha, std::uint64_t index_scale) :
    _kind(kind),
    _bits(std::move(bits)),
    _alpha(std::move(alpha)),
    _index_scale(index_scale)
{
}

Coloring Coloring::periodic(BitString block)
{
    if (block.empty())
        throw std::invalid_argument("periodic coloring needs a nonempty block");
    return Coloring(Kind::Periodic, std::move(block), std::nullopt, 1);
}

Coloring Coloring::explicit_prefix(BitString bits)
{
    return Coloring(Kind::Explicit, std::move(bits), std::nullopt, 1);
}

Coloring Coloring::beatty(AlphaValue alpha, std::uint64_t index_scale)
{
    if (index_scale == 0)
        throw std::invalid_argument("Beatty index scale must be positive");
    return Coloring(Kind::Beatty, {}, std::move(alpha), index_scale);
}

int Coloring::color_of(std::uint64_t n) const
{
    if (n == 0)
        throw std::out_of_range("colorings are defined on positive integers");
    switch (_kind) {
    case Kind::Periodic:
        return _bits[(n - 1) % _bits.size()];
    case Kind::Explicit:
        if (n > _bits.size())
            throw std::out_of_range("explicit coloring defined only on [1.." + std::to_string(_bits.size()) + "]");
        return _bits[n - 1];
    case Kind::Beatty:
        return floor_parity(*_alpha, (n - 1) / _index_scale + 1);
    }
    return 0;
}

std::optional<std::uint64_t> Coloring::defined_up_to() const
{
    if (_kind == Kind::Explicit)
        return _bits.size();
    return std::nullopt;
}

std::vector<std::uint8_t> Coloring::materialize(std::uint64_t n) const
{
    std::vector<std::uint8_t> out(n);
    switch (_kind) {
    case Kind::Periodic: {
        const std::size_t period = _bits.size();
        for (std::uint64_t i = 0; i < n; ++i)
            out[i] = _bits[i % period];
        break;
    }
    case Kind::Explicit:
        if (n > _bits.size())
            throw std::out_of_range("explicit coloring defined only on [1.." + std::to_string(_bits.size()) + "]");
        for (std::uint64_t i = 0; i < n; ++i)
            out[i] = _bits[i];
        break;
    case Kind::Beatty: {
        const std::uint64_t count = (n + _index_scale - 1) / _index_scale;
        auto parities = floor_parities(*_alpha, count);
        for (std::uint64_t i = 0; i < n; ++i)
            out[i] = parities[i / _index_scale];
        break;
    }
    }
    return out;
}

void write_coloring(std::ostream & out, const Coloring & c)
{
    if (c.kind() == Coloring::Kind::Beatty)
        throw std::invalid_argument("Beatty colorings must be materialized before writing");
    out << "# diffseq-coloring v1\n"
        << (c.kind() == Coloring::Kind::Periodic ? "periodic " : "explicit ") << c.bits().to_string() << "\n";
}

Coloring read_coloring(std::istream & in)
{
    std::string header, body;
    if (! std::getline(in, header) || header != "# diffseq-coloring v1")
        throw std::invalid_argument("coloring file must start with '# diffseq-coloring v1'");
    if (! std::getline(in, body))
        throw std::invalid_argument("coloring file is missing its body line");
    if (! body.empty() && body.back() == '\r')
        body.pop_back();
    auto space = body.find(' ');
    if (space == std::string::npos)
        throw std::invalid_argument("coloring body must be 'periodic <bits>' or 'explicit <bits>'");
    auto form = body.substr(0, space);
    auto bits = BitString::from_string(std::string_view(body).substr(space + 1));
    if (form == "periodic")
        return Coloring::periodic(std::move(bits));
    if (form == "explicit")
        return Coloring::explicit_prefix(std::move(bits));
    throw std::invalid_argument("unknown coloring form '" + form + "'");
}

void save_coloring(const std::string & path, const Coloring & c)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_coloring(out, c);
}

Coloring load_coloring(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_coloring(in);
}

} // namespace diffseq
