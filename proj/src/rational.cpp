#include <diffseq/rational.hpp>

#include <stdexcept>

namespace diffseq {

BigInt floor_of(const Rational & x)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt ceil_of(const Rational & x)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational mod2(const Rational & x)
{
    Rational half = x / 2;
    return x - Rational(2 * floor_of(half));
}

Rational make_rational(const BigInt & num, const BigInt & den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational & x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt & x)
{
    return x.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        BigInt v;
        if (v.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt big_from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

bool fits_u64(const BigInt & v)
{
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt & v)
{
    if (! fits_u64(v))
        throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

bool RationalInterval::inside(const Rational & a, const Rational & b, bool closed_right) const
{
    if (lo < a)
        return false;
    return closed_right ? hi <= b : hi < b;
}

std::string to_string(const RationalInterval & iv)
{
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

} // namespace diffseq
