#include <diffseq/serialize.hpp>

#include <cstdlib>
#include <limits>

namespace diffseq {

namespace {

// Exact decimal rendering of a multiple of 1/10^6, e.g. "245.963779".
std::string micro_decimal(const Rational & x)
{
    const BigInt scaled = floor_of(x * 1000000);
    BigInt magnitude = abs(scaled);
    std::string digits = magnitude.get_str();
    if (digits.size() < 7)
        digits.insert(0, 7 - digits.size(), '0');
    digits.insert(digits.size() - 6, ".");
    return (scaled < 0 ? "-" : "") + digits;
}

} // namespace

Json big_to_json(const BigInt & v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return v.get_si();
    return v.get_str();
}

Json alpha_to_json(const AlphaValue & alpha)
{
    if (alpha.is_exact())
        return to_string(alpha.lo());
    return Json{{"family", "factorial"}, {"terms", alpha.terms()}, {"interval", to_string(alpha.interval())}};
}

Json coloring_to_json(const Coloring & c)
{
    switch (c.kind()) {
    case Coloring::Kind::Periodic:
        return Json{{"type", "periodic"}, {"block", c.bits().to_string()}};
    case Coloring::Kind::Explicit:
        return Json{{"type", "explicit"}, {"bits", c.bits().to_string()}};
    case Coloring::Kind::Beatty:
        return Json{{"type", "beatty"}, {"alpha", alpha_to_json(c.alpha())}, {"index_scale", c.index_scale()}};
    }
    return {};
}

Coloring coloring_from_json(const Json & j)
{
    const auto type = j.at("type").get<std::string>();
    if (type == "periodic")
        return Coloring::periodic(BitString::from_string(j.at("block").get<std::string>()));
    if (type == "explicit")
        return Coloring::explicit_prefix(BitString::from_string(j.at("bits").get<std::string>()));
    if (type == "beatty") {
        const auto & alpha = j.at("alpha");
        const auto scale = j.value("index_scale", std::uint64_t{1});
        if (alpha.is_string())
            return Coloring::beatty(AlphaValue::exact(parse_rational(alpha.get<std::string>())), scale);
        if (alpha.at("family").get<std::string>() != "factorial")
            throw std::invalid_argument("unknown alpha family");
        return Coloring::beatty(factorial_alpha(alpha.at("terms").get<std::size_t>()), scale);
    }
    throw std::invalid_argument("unknown coloring type '" + type + "'");
}

Json witness_to_json(const DiffseqWitness & w)
{
    return Json{{"positions", w.positions}, {"color", w.color}};
}

Json certificate_to_json(const Certificate & cert)
{
    return Json{
        {"gapset", cert.gapset},
        {"k", cert.k},
        {"r", cert.r},
        {"n", cert.n},
        {"coloring", coloring_to_json(cert.coloring)},
        {"longestFound", cert.longest_found},
        {"impliedBound", cert.implied_bound()},
        {"statement", "Delta(" + cert.gapset + ", " + std::to_string(cert.k) + "; " + std::to_string(cert.r)
                + ") >= " + std::to_string(cert.implied_bound())},
    };
}

Certificate certificate_from_json(const Json & j)
{
    return Certificate{
        j.at("gapset").get<std::string>(),
        j.at("k").get<std::size_t>(),
        j.at("r").get<unsigned>(),
        j.at("n").get<std::uint64_t>(),
        coloring_from_json(j.at("coloring")),
        j.at("longestFound").get<std::size_t>(),
    };
}

Json solver_result_to_json(const SolverResult & result)
{
    Json j;
    switch (result.status) {
    case SolverResult::Status::Found:
        j["status"] = "found";
        j["delta"] = result.delta;
        break;
    case SolverResult::Status::ExceedsCap:
        j["status"] = "exceeds_cap";
        j["cap"] = result.cap;
        break;
    case SolverResult::Status::Inconclusive:
        j["status"] = "inconclusive";
        j["inconclusive_at"] = result.inconclusive_at;
        break;
    }
    j["coloring"] = colors_to_string(result.coloring);
    j["stats"] = Json{{"nodes", result.nodes}, {"seconds", result.seconds}};
    return j;
}

Json theorem_bound_to_json(const TheoremBound & tb)
{
    return Json{
        {"value", to_string(tb.value)},
        {"decimal", std::strtod(micro_decimal(tb.value).c_str(), nullptr)},
        {"precision", to_string(tb.precision)},
        {"enclosure", to_string(tb.enclosure)},
    };
}

Json discrepancy_to_json(const BoundDiscrepancy & d)
{
    return Json{
        {"k", d.k},
        {"t", d.t},
        {"u", d.u},
        {"claimedBound", big_to_json(d.claimed_bound)},
        {"counterexample", witness_to_json(d.counterexample)},
        {"largestVerified", d.largest_verified},
    };
}

Json bound_report_to_json(const BoundReport & report)
{
    Json j{
        {"k", report.k},
        {"t", report.t},
        {"u", report.u},
        {"refinedBound", big_to_json(report.refined)},
        {"theoremBound", theorem_bound_to_json(report.theorem)},
        {"simpleBound", big_to_json(report.simple)},
    };
    if (! report.certification_run)
        j["certifiedBound"] = "not run";
    else if (report.certified)
        j["certifiedBound"] = *report.certified;
    else
        j["certifiedBound"] = nullptr;
    if (report.discrepancy)
        j["discrepancy"] = discrepancy_to_json(*report.discrepancy);
    j["consistent"] = report.consistent;
    return j;
}

Json interval_table_to_json(const IntervalTable & table)
{
    Json lower = Json::array(), upper = Json::array();
    for (std::size_t b = 0; b < table.t(); ++b) {
        lower.push_back(to_string(table.lower[b]));
        upper.push_back(to_string(table.upper[b]));
    }
    return Json{{"t", table.t()}, {"a", table.a}, {"C", lower}, {"D", upper}, {"k_run", table.run_bound}};
}

Json nested_alpha_to_json(const NestedAlpha & nested)
{
    Json d = Json::array();
    for (const auto & v : nested.d)
        d.push_back(big_to_json(v));
    return Json{
        {"alpha", to_string(nested.alpha)},
        {"T", nested.T},
        {"k_run", nested.run_bound},
        {"window", to_string(nested.window())},
        {"J", nested.J.empty() ? Json("empty") : Json(to_string(RationalInterval{nested.J.lower, nested.J.upper}))},
        {"source", nested.source == NestedAlpha::Source::Intersection ? "intersection" : "final_table"},
        {"chosen", to_string(nested.chosen)},
        {"d", d},
    };
}

} // namespace diffseq
