#include <diffseq/bounds.hpp>

#include <mpfr.h>

#include <stdexcept>

namespace diffseq {

namespace {

BigInt pow2(unsigned e)
{
    BigInt v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
    return v;
}

BigInt isqrt(const BigInt & v)
{
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

constexpr mpfr_prec_t interval_bits = 256;

// Closed interval of MPFR floats with outward rounding on every operation.
class Interval
{
public:
    explicit Interval(long v)
    {
        init();
        mpfr_set_si(_lo, v, MPFR_RNDD);
        mpfr_set_si(_hi, v, MPFR_RNDU);
    }

    Interval(const Interval & other)
    {
        init();
        mpfr_set(_lo, other._lo, MPFR_RNDD);
        mpfr_set(_hi, other._hi, MPFR_RNDU);
    }

    Interval & operator=(const Interval &) = delete;

    ~Interval()
    {
        mpfr_clear(_lo);
        mpfr_clear(_hi);
    }

    friend Interval operator+(const Interval & a, const Interval & b)
    {
        Interval r;
        mpfr_add(r._lo, a._lo, b._lo, MPFR_RNDD);
        mpfr_add(r._hi, a._hi, b._hi, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval & a, const Interval & b)
    {
        Interval r;
        mpfr_sub(r._lo, a._lo, b._hi, MPFR_RNDD);
        mpfr_sub(r._hi, a._hi, b._lo, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval & a, const Interval & b)
    {
        Interval r;
        mpfr_t tmp;
        mpfr_init2(tmp, interval_bits);
        bool first = true;
        for (auto x : {a._lo, a._hi})
            for (auto y : {b._lo, b._hi}) {
                mpfr_mul(tmp, x, y, MPFR_RNDD);
                if (first || mpfr_less_p(tmp, r._lo))
                    mpfr_set(r._lo, tmp, MPFR_RNDD);
                mpfr_mul(tmp, x, y, MPFR_RNDU);
                if (first || mpfr_greater_p(tmp, r._hi))
                    mpfr_set(r._hi, tmp, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(tmp);
        return r;
    }

    Interval divided_by(unsigned long d) const
    {
        Interval r;
        mpfr_div_ui(r._lo, _lo, d, MPFR_RNDD);
        mpfr_div_ui(r._hi, _hi, d, MPFR_RNDU);
        return r;
    }

    Interval sqrt() const
    {
        Interval r;
        mpfr_sqrt(r._lo, _lo, MPFR_RNDD);
        mpfr_sqrt(r._hi, _hi, MPFR_RNDU);
        return r;
    }

    Interval exp2() const
    {
        Interval r;
        mpfr_exp2(r._lo, _lo, MPFR_RNDD);
        mpfr_exp2(r._hi, _hi, MPFR_RNDU);
        return r;
    }

    RationalInterval to_rational() const { return {exact(_lo), exact(_hi)}; }

private:
    Interval() { init(); }

    void init()
    {
        mpfr_init2(_lo, interval_bits);
        mpfr_init2(_hi, interval_bits);
    }

    static Rational exact(const mpfr_t x)
    {
        BigInt mantissa;
        mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
        Rational r(mantissa);
        if (e >= 0)
            mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        else
            mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        return r;
    }

    mpfr_t _lo;
    mpfr_t _hi;
};

} // namespace

BigInt refined_bound(std::uint64_t k, unsigned t, unsigned u)
{
    const Rational scale(pow2(t + u));
    const Rational inner = Rational(big_from_u64(k)) - Rational(pow2(u + 1)) - make_rational(BigInt(t) * t, 2) + t;
    return floor_of(scale * inner + Rational(pow2(u + 1)));
}

BigInt simple_bound(std::uint64_t k)
{
    const BigInt s = isqrt(2 * big_from_u64(k));
    return pow2(static_cast<unsigned>(s.get_ui())) * (s - 2) + 2;
}

TheoremBound theorem_bound(std::uint64_t k)
{
    if (k < 1)
        throw std::invalid_argument("theorem_bound needs k >= 1");
    const long kk = static_cast<long>(k);
    const Interval kv(kk);
    const Interval root_k = kv.sqrt();
    const Interval root2 = Interval(2).sqrt();
    const Interval growth = Interval(2 * kk).sqrt().exp2();
    const Interval slope = ((root2 - Interval(1)) * kv).divided_by(8) - root_k.divided_by(8);
    const Interval value = growth * slope + root_k.divided_by(2);

    TheoremBound out;
    out.enclosure = value.to_rational();
    out.precision = make_rational(1, 1000000);
    const Rational mid = (out.enclosure.lo + out.enclosure.hi) / 2;
    out.value = make_rational(floor_of(mid * 1000000 + make_rational(1, 2)), 1000000);
    return out;
}

BestParams best_params(std::uint64_t k)
{
    if (k < 2)
        throw std::invalid_argument("best_params needs k >= 2");
    const BigInt two_k = 2 * big_from_u64(k);
    BigInt root = isqrt(two_k);
    if (root * root != two_k)
        root += 1;
    const unsigned t_max = 2 * static_cast<unsigned>(root.get_ui()) + 4;
    unsigned u_max = 0;
    while ((std::uint64_t{1} << u_max) < k)
        ++u_max;

    BestParams best;
    bool have = false;
    for (unsigned t = 2; t <= t_max; ++t)
        for (unsigned u = 0; u <= u_max; ++u) {
            BigInt b = refined_bound(k, t, u);
            const bool better = ! have || b > best.bound
                || (b == best.bound && (t + u < best.t + best.u || (t + u == best.t + best.u && t < best.t)));
            if (better) {
                best = {t, u, std::move(b)};
                have = true;
            }
        }
    return best;
}

std::optional<BestParams> standard_params(std::uint64_t k)
{
    if (k < 4)
        return std::nullopt;
    const unsigned t = static_cast<unsigned>(isqrt(2 * big_from_u64(k)).get_ui());
    // floor(log2(sqrt(k)/2)) = largest u with 4^{u+1} <= k.
    unsigned u = 0;
    while (BigInt(4) * pow2(2 * (u + 1)) <= big_from_u64(k))
        ++u;
    return BestParams{t, u, refined_bound(k, t, u)};
}

CertifyResult certify_bound(std::uint64_t k, unsigned t, unsigned u, std::uint64_t memory_cap_bits)
{
    if (k < 2 || t < 2)
        throw std::invalid_argument("certify_bound needs k >= 2 and t >= 2");
    const BigInt bound = refined_bound(k, t, u);
    if (bound < 2)
        throw std::invalid_argument("refined bound " + bound.get_str() + " is below 2; nothing to certify");
    const std::uint64_t n = to_u64(bound - 1);
    const auto coloring = Coloring::periodic(stretch_block(t, u, memory_cap_bits));
    const auto gaps = GapSet::powers_of_two();

    auto result = verify_avoidance(coloring, gaps, k, n);
    if (auto * cert = std::get_if<Certificate>(&result))
        return std::move(*cert);

    BoundDiscrepancy report{k, t, u, bound, std::get<DiffseqWitness>(result), 0};
    const auto colors = coloring.materialize(n);
    const auto members = gaps.members_up_to(n);
    report.largest_verified = *first_reaching(colors, members, k) - 1;
    return report;
}

BoundReport bound_report(std::uint64_t k, unsigned t, unsigned u, bool certify, std::uint64_t memory_cap_bits)
{
    BoundReport report;
    report.k = k;
    report.t = t;
    report.u = u;
    report.refined = refined_bound(k, t, u);
    report.theorem = theorem_bound(k);
    report.simple = simple_bound(k);
    if (certify && report.refined >= 2) {
        report.certification_run = true;
        auto result = certify_bound(k, t, u, memory_cap_bits);
        if (auto * cert = std::get_if<Certificate>(&result))
            report.certified = cert->implied_bound();
        else
            report.discrepancy = std::get<BoundDiscrepancy>(result);
        report.consistent = report.certified && big_from_u64(*report.certified) >= report.refined;
    }
    return report;
}

} // namespace diffseq
