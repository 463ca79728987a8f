#include <diffseq/exactreal.hpp>

namespace diffseq {

namespace {

BigInt factorial(std::size_t n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

bool floors_agree(const AlphaValue & alpha, const BigInt & m, BigInt & floor_out)
{
    BigInt lo_num = m * alpha.lo().get_num();
    BigInt hi_num = m * alpha.hi().get_num();
    BigInt lo_floor, hi_floor;
    mpz_fdiv_q(lo_floor.get_mpz_t(), lo_num.get_mpz_t(), alpha.lo().get_den_mpz_t());
    mpz_fdiv_q(hi_floor.get_mpz_t(), hi_num.get_mpz_t(), alpha.hi().get_den_mpz_t());
    if (lo_floor != hi_floor)
        return false;
    floor_out = lo_floor;
    return true;
}

} // namespace

AlphaValue::AlphaValue(Kind kind, Rational lo, Rational hi, std::size_t terms) :
    _kind(kind),
    _lo(std::move(lo)),
    _hi(std::move(hi)),
    _terms(terms)
{
}

AlphaValue AlphaValue::exact(Rational value)
{
    value.canonicalize();
    return AlphaValue(Kind::ExactRational, value, value, 0);
}

AlphaValue AlphaValue::factorial_series(std::size_t terms)
{
    if (terms < 1)
        throw std::invalid_argument("factorial alpha needs at least one series term");
    Rational hi = 1 - factorial_partial_sum(terms);
    Rational lo = hi - factorial_tail_bound(terms);
    return AlphaValue(Kind::SeriesInterval, std::move(lo), std::move(hi), terms);
}

AlphaValue AlphaValue::refined() const
{
    if (is_exact())
        return *this;
    return factorial_series(2 * _terms);
}

AlphaValue AlphaValue::refined_to_width(const Rational & width, unsigned refine_cap) const
{
    AlphaValue current = *this;
    for (unsigned i = 0; current._hi - current._lo > width; ++i) {
        if (i == refine_cap)
            throw AmbiguousError("alpha could not be refined below width " + to_string(width));
        current = current.refined();
    }
    return current;
}

Rational factorial_tail_bound(std::size_t terms)
{
    return make_rational(2, factorial(2 * terms + 2));
}

Rational factorial_partial_sum(std::size_t terms)
{
    // Common denominator (2I)!; term i contributes (2I)!/(2i)!.
    BigInt den = factorial(2 * terms);
    BigInt num = 0;
    BigInt ratio = 1; // (2I)! / (2i)! for i running down from I
    for (std::size_t i = terms; i >= 1; --i) {
        num += ratio;
        ratio *= (2 * i) * (2 * i - 1);
    }
    return make_rational(num, den);
}

AlphaValue factorial_alpha(std::size_t precision_terms)
{
    return AlphaValue::factorial_series(precision_terms);
}

int floor_parity(const AlphaValue & alpha, const BigInt & m, unsigned refine_cap)
{
    AlphaValue current = alpha;
    BigInt f;
    for (unsigned i = 0;; ++i) {
        if (floors_agree(current, m, f))
            return mpz_odd_p(f.get_mpz_t()) ? 1 : 0;
        if (i == refine_cap || current.is_exact())
            throw AmbiguousError("ambiguous: floor(" + m.get_str() + " * alpha) not resolved after "
                + std::to_string(i) + " refinements");
        current = current.refined();
    }
}

int floor_parity(const AlphaValue & alpha, std::uint64_t m, unsigned refine_cap)
{
    return floor_parity(alpha, big_from_u64(m), refine_cap);
}

std::vector<std::uint8_t> floor_parities(const AlphaValue & alpha, std::uint64_t count, unsigned refine_cap)
{
    std::vector<std::uint8_t> out(count);
    if (count == 0)
        return out;
    // Aim for count * width < 2^-32 so almost every m resolves on the first try.
    Rational target = make_rational(1, BigInt(4294967296.0) * big_from_u64(count));
    AlphaValue eager = alpha.refined_to_width(target, refine_cap);

    const BigInt lo_num = eager.lo().get_num(), lo_den = eager.lo().get_den();
    const BigInt hi_num = eager.hi().get_num(), hi_den = eager.hi().get_den();
    BigInt lo_acc = 0, hi_acc = 0, lo_floor, hi_floor;
    for (std::uint64_t m = 1; m <= count; ++m) {
        lo_acc += lo_num;
        hi_acc += hi_num;
        mpz_fdiv_q(lo_floor.get_mpz_t(), lo_acc.get_mpz_t(), lo_den.get_mpz_t());
        mpz_fdiv_q(hi_floor.get_mpz_t(), hi_acc.get_mpz_t(), hi_den.get_mpz_t());
        if (lo_floor == hi_floor)
            out[m - 1] = mpz_odd_p(lo_floor.get_mpz_t()) ? 1 : 0;
        else
            out[m - 1] = static_cast<std::uint8_t>(floor_parity(eager, m, refine_cap));
    }
    return out;
}

RationalInterval scaled_mod2_range(const AlphaValue & alpha, const BigInt & d, unsigned refine_cap)
{
    const Rational max_width = make_rational(1, 12);
    AlphaValue current = alpha;
    for (unsigned i = 0;; ++i) {
        Rational lo = current.lo() * d;
        Rational hi = current.hi() * d;
        BigInt lo_block = floor_of(lo / 2);
        BigInt hi_block = floor_of(hi / 2);
        const Rational shift = 2 * lo_block;
        // A series enclosure that still touches 1 cannot tell [1/3, 1) apart
        // from its complement; the true value is never exactly there.
        const bool touches_one = ! current.is_exact() && lo - shift <= 1 && 1 <= hi - shift;
        if (lo_block == hi_block && hi - lo < max_width && ! touches_one)
            return {lo - shift, hi - shift};
        if (i == refine_cap || current.is_exact())
            throw AmbiguousError("straddles boundary: " + d.get_str() + " * alpha mod 2 not localised after "
                + std::to_string(i) + " refinements");
        current = current.refined();
    }
}

} // namespace diffseq
