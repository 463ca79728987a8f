#include <diffseq/cli.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace diffseq::cli {

namespace {

struct HelpRequested
{
    std::string text;
};

std::uint64_t parse_count(const std::string & flag, const std::string & text)
{
    try {
        std::size_t used = 0;
        if (text.find_first_of("eE.") != std::string::npos) {
            const double v = std::stod(text, &used);
            if (used == text.size() && v >= 1 && v < 1.8e19 && std::floor(v) == v)
                return static_cast<std::uint64_t>(v);
        }
        else {
            const auto v = std::stoull(text, &used);
            if (used == text.size() && v >= 1 && text.front() != '-')
                return v;
        }
    }
    catch (const std::exception &) {
    }
    throw UsageError(flag + ": expected a positive integer, got '" + text + "'");
}

GapSet parse_gapset(const std::string & flag, const std::string & text)
{
    try {
        return GapSet::parse(text);
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(flag + ": " + e.what());
    }
}

GapSet parse_generator(const std::string & flag, const std::string & text)
{
    try {
        return GapSet::dividing(DividingGenerator::parse(text));
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Json error_doc(const std::string & kind, const std::string & message)
{
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

Execution failure(int code, const std::string & kind, const std::string & message)
{
    Execution ex;
    ex.exit_code = code;
    ex.error = error_doc(kind, message);
    return ex;
}

Execution success(Json output)
{
    Execution ex;
    ex.output = std::move(output);
    return ex;
}

Execution run_delta(const DeltaCommand & cmd)
{
    auto result = delta(cmd.gapset, cmd.k, cmd.r, cmd.cap, cmd.solver);
    Json doc{{"gapset", cmd.gapset.descriptor()}, {"k", cmd.k}, {"r", cmd.r}};
    doc.update(solver_result_to_json(result));
    if (result.status == SolverResult::Status::Inconclusive) {
        auto ex = failure(ResourceCap, "resource_cap",
            "node budget of " + std::to_string(cmd.solver.node_budget) + " exhausted at n = " + std::to_string(result.inconclusive_at));
        ex.error["error"]["partial"] = doc;
        return ex;
    }
    return success(doc);
}

Execution run_bound(const BoundCommand & cmd)
{
    unsigned t = 0, u = cmd.u;
    Json params;
    if (cmd.t) {
        t = *cmd.t;
        params = "given";
    }
    else {
        auto best = best_params(cmd.k);
        t = best.t;
        u = best.u;
        params = "optimized";
    }
    auto report = bound_report(cmd.k, t, u, cmd.certify, cmd.memory_cap);
    auto doc = bound_report_to_json(report);
    doc["params"] = params;
    if (auto standard = standard_params(cmd.k))
        doc["standardParams"] = Json{{"t", standard->t}, {"u", standard->u}, {"refinedBound", big_to_json(standard->bound)}};
    return success(doc);
}

Execution run_certify(const CertifyCommand & cmd)
{
    auto result = certify_bound(cmd.k, cmd.t, cmd.u, cmd.memory_cap);
    if (auto * cert = std::get_if<Certificate>(&result)) {
        auto doc = certificate_to_json(*cert);
        doc["refinedBound"] = big_to_json(refined_bound(cmd.k, cmd.t, cmd.u));
        return success(doc);
    }
    const auto & d = std::get<BoundDiscrepancy>(result);
    auto ex = failure(Counterexample, "counterexample",
        "P_{t,u} coloring contains a monochromatic diffsequence of length " + std::to_string(cmd.k) + " below the claimed bound");
    ex.error["error"]["discrepancy"] = discrepancy_to_json(d);
    return ex;
}

Execution run_color(const ColorCommand & cmd)
{
    Json doc;
    std::optional<Coloring> file_coloring;
    std::optional<Json> sidecar;
    switch (cmd.family) {
    case ColorCommand::Family::ThueMorse:
    case ColorCommand::Family::Stretched: {
        const bool stretched = cmd.family == ColorCommand::Family::Stretched;
        auto block = stretch_block(cmd.t, stretched ? cmd.u : 0, cmd.memory_cap);
        doc = Json{{"family", stretched ? "ptu" : "pt"}, {"t", cmd.t}};
        if (stretched)
            doc["u"] = cmd.u;
        doc["n"] = cmd.n;
        doc["block"] = block.to_string();
        file_coloring = Coloring::periodic(std::move(block));
        break;
    }
    case ColorCommand::Family::Factorial: {
        auto alpha = factorial_alpha(cmd.terms);
        auto colors = Coloring::beatty(alpha).materialize(cmd.n);
        BitString bits(cmd.n);
        for (std::uint64_t i = 0; i < cmd.n; ++i)
            bits.set(i, colors[i]);
        doc = Json{{"family", "factorial"}, {"n", cmd.n}, {"alpha", alpha_to_json(alpha)}};
        file_coloring = Coloring::explicit_prefix(std::move(bits));
        break;
    }
    case ColorCommand::Family::Dividing: {
        auto built = dividing_coloring(cmd.gapset, cmd.n);
        const std::size_t forbidden = (std::size_t{1} << built.nested.run_bound) + 1;
        auto check = verify_avoidance(built.coloring, cmd.gapset, forbidden, cmd.n);
        if (auto * witness = std::get_if<DiffseqWitness>(&check)) {
            auto ex = failure(Internal, "construction_failure",
                "nested-interval alpha admits a monochromatic diffsequence of length " + std::to_string(forbidden));
            ex.error["error"]["witness"] = witness_to_json(*witness);
            ex.error["error"]["alpha"] = nested_alpha_to_json(built.nested);
            return ex;
        }
        doc = Json{{"family", "dividing"}, {"gapset", cmd.gapset.descriptor()}, {"n", cmd.n}};
        doc.update(nested_alpha_to_json(built.nested));
        doc["index_scale"] = built.index_scale;
        doc["avoids_length"] = forbidden;
        sidecar = doc;
        file_coloring = std::move(built.coloring);
        break;
    }
    }

    if (cmd.out) {
        save_coloring(*cmd.out, *file_coloring);
        doc["out"] = *cmd.out;
        if (sidecar) {
            std::ofstream side(*cmd.out + ".json");
            side << sidecar->dump(2) << "\n";
            doc["sidecar"] = *cmd.out + ".json";
        }
    }
    else {
        auto colors = file_coloring->materialize(cmd.n);
        std::string bits(cmd.n, '0');
        for (std::uint64_t i = 0; i < cmd.n; ++i)
            bits[i] = static_cast<char>('0' + colors[i]);
        doc["bits"] = bits;
    }
    return success(doc);
}

std::uint64_t resolve_n(const Coloring & c, const std::optional<std::uint64_t> & n)
{
    if (n)
        return *n;
    if (auto limit = c.defined_up_to())
        return *limit;
    throw UsageError("--n is required for periodic colorings");
}

Execution run_verify(const VerifyCommand & cmd)
{
    auto coloring = load_coloring(cmd.coloring_path);
    const auto n = resolve_n(coloring, cmd.n);
    auto result = verify_avoidance(coloring, cmd.gapset, cmd.k, n);
    if (auto * cert = std::get_if<Certificate>(&result)) {
        if (! revalidate(*cert))
            return failure(Internal, "internal", "certificate did not revalidate");
        return success(certificate_to_json(*cert));
    }
    auto ex = failure(Counterexample, "counterexample",
        "monochromatic diffsequence of length " + std::to_string(cmd.k) + " found in [1.." + std::to_string(n) + "]");
    ex.error["error"]["witness"] = witness_to_json(std::get<DiffseqWitness>(result));
    return ex;
}

Execution run_longest(const LongestCommand & cmd)
{
    auto coloring = load_coloring(cmd.coloring_path);
    const auto n = resolve_n(coloring, cmd.n);
    auto result = longest_mono(coloring, cmd.gapset, n);
    return success(Json{{"gapset", cmd.gapset.descriptor()}, {"n", n}, {"length", result.length},
        {"witness", witness_to_json(result.witness)}});
}

Execution run_alpha(const AlphaCommand & cmd)
{
    if (cmd.dividing) {
        auto generator = *cmd.dividing->generator();
        const std::uint64_t a1 = generator.at(1);
        auto nested = nested_alpha(generator.with_first(1), (cmd.n + a1 - 1) / a1);
        auto doc = nested_alpha_to_json(nested);
        doc["windowHolds"] = window_holds(nested);
        doc["index_scale"] = a1;
        return success(doc);
    }
    auto alpha = factorial_alpha(cmd.terms);
    Json doc{
        {"alpha", alpha_to_json(alpha)},
        {"lo", to_string(alpha.lo())},
        {"hi", to_string(alpha.hi())},
        {"width", to_string(alpha.hi() - alpha.lo())},
        {"within_7_16_to_1_2", alpha.interval().inside(make_rational(7, 16), make_rational(1, 2))},
    };
    Json scaled = Json::array();
    BigInt d = 1;
    for (std::size_t k = 1; k <= cmd.scaled_upto; ++k) {
        d *= static_cast<unsigned long>(k);
        auto range = scaled_mod2_range(alpha, d);
        scaled.push_back(Json{{"k", k}, {"d", big_to_json(d)}, {"range", to_string(range)},
            {"within_1_3_to_1", range.inside(make_rational(1, 3), Rational(1))}});
    }
    if (cmd.scaled_upto > 0)
        doc["scaled"] = scaled;
    return success(doc);
}

Execution run_intervals(const IntervalsCommand & cmd)
{
    std::size_t t = 0;
    if (cmd.t)
        t = *cmd.t;
    else if (cmd.generator.is_finite())
        t = cmd.generator.finite_length();
    else
        throw UsageError("--t is required for infinite generators");
    std::vector<std::uint64_t> a;
    for (std::size_t i = 1; i <= t; ++i)
        a.push_back(cmd.generator.at(i));
    auto table = build_intervals(a);
    auto doc = interval_table_to_json(table);
    Json js = Json::array();
    for (const auto & j : nested_intervals(cmd.generator, t))
        js.push_back(j.empty() ? Json("empty") : Json(to_string(RationalInterval{j.lower, j.upper})));
    doc["J"] = js;
    return success(doc);
}

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};

} // namespace

Command parse_command(const std::vector<std::string> & argv)
{
    CLI::App app{"Diffsequence Ramsey numbers: exact search, colorings, bounds and certificates", "diffseq"};
    app.require_subcommand(1, 1);

    std::string gapset_text, a_text, family, coloring_path, budget_text = "1e8", out_path;
    std::size_t k = 0, terms = 8, scaled_upto = 0, interval_t = 0;
    std::uint64_t n = 0, cap = 4096, memory_cap = default_memory_cap_bits;
    unsigned r = 2, threads = 1, t = 0, u = 0;
    bool optimize = false, certify = false;

    auto * delta_cmd = app.add_subcommand("delta", "compute Delta(D,k;r) by exhaustive search");
    delta_cmd->add_option("--gapset", gapset_text, "gap set descriptor")->required();
    delta_cmd->add_option("--k", k, "target length")->required();
    delta_cmd->add_option("--r", r, "number of colors");
    delta_cmd->add_option("--cap", cap, "largest n to search");
    delta_cmd->add_option("--budget", budget_text, "node budget, e.g. 1e9");
    delta_cmd->add_option("--threads", threads, "search workers");

    auto * bound_cmd = app.add_subcommand("bound", "evaluate lower bounds for powers of two");
    bound_cmd->add_option("--k", k)->required();
    auto * bound_t = bound_cmd->add_option("--t", t);
    auto * bound_u = bound_cmd->add_option("--u", u);
    bound_cmd->add_flag("--optimize", optimize, "search (t,u) exhaustively");
    bound_cmd->add_flag("--certify", certify, "machine-check the bound with P_{t,u}");
    bound_cmd->add_option("--memory-cap", memory_cap, "largest block in bits");

    auto * certify_cmd = app.add_subcommand("certify", "certify the P_{t,u} bound");
    certify_cmd->add_option("--k", k)->required();
    certify_cmd->add_option("--t", t)->required();
    certify_cmd->add_option("--u", u);
    certify_cmd->add_option("--memory-cap", memory_cap);

    auto * color_cmd = app.add_subcommand("color", "emit a coloring");
    color_cmd->add_option("--family", family, "pt | ptu | factorial | dividing")->required();
    auto * color_t = color_cmd->add_option("--t", t);
    auto * color_u = color_cmd->add_option("--u", u);
    color_cmd->add_option("--n", n)->required();
    color_cmd->add_option("--terms", terms, "series terms for the factorial alpha");
    auto * color_a = color_cmd->add_option("--a", a_text, "dividing generator, e.g. 1,2,3|2,3");
    auto * color_gapset = color_cmd->add_option("--gapset", gapset_text);
    auto * color_out = color_cmd->add_option("--out", out_path, "coloring file to write");
    color_cmd->add_option("--memory-cap", memory_cap);

    auto * verify_cmd = app.add_subcommand("verify", "check that a coloring avoids length-k diffsequences");
    verify_cmd->add_option("--coloring", coloring_path)->required();
    verify_cmd->add_option("--gapset", gapset_text)->required();
    verify_cmd->add_option("--k", k)->required();
    auto * verify_n = verify_cmd->add_option("--n", n);

    auto * longest_cmd = app.add_subcommand("longest", "longest monochromatic diffsequence of a coloring");
    longest_cmd->add_option("--coloring", coloring_path)->required();
    longest_cmd->add_option("--gapset", gapset_text)->required();
    auto * longest_n = longest_cmd->add_option("--n", n);

    auto * alpha_cmd = app.add_subcommand("alpha", "inspect the factorial alpha or a nested-interval alpha");
    alpha_cmd->add_option("--terms", terms);
    alpha_cmd->add_option("--scaled-upto", scaled_upto, "report k!*alpha mod 2 for k = 1..scaled_upto");
    auto * alpha_a = alpha_cmd->add_option("--a", a_text);
    auto * alpha_gapset = alpha_cmd->add_option("--gapset", gapset_text);
    auto * alpha_n = alpha_cmd->add_option("--n", n);

    auto * intervals_cmd = app.add_subcommand("intervals", "nested interval table for a generator");
    intervals_cmd->add_option("--a", a_text)->required();
    auto * intervals_t = intervals_cmd->add_option("--t", interval_t);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    }
    catch (const CLI::CallForHelp &) {
        throw HelpRequested{app.help()};
    }
    catch (const CLI::ParseError & e) {
        throw UsageError(e.what());
    }

    auto require_positive = [](const std::string & flag, std::uint64_t v) {
        if (v < 1)
            throw UsageError(flag + " must be positive");
    };

    if (delta_cmd->parsed()) {
        DeltaCommand cmd;
        cmd.gapset = parse_gapset("--gapset", gapset_text);
        require_positive("--k", k);
        if (r < 2 || r > 255)
            throw UsageError("--r must lie in [2, 255]");
        cmd.k = k;
        cmd.r = r;
        cmd.cap = cap;
        cmd.solver.node_budget = parse_count("--budget", budget_text);
        cmd.solver.threads = std::max(1u, threads);
        return cmd;
    }
    if (bound_cmd->parsed()) {
        BoundCommand cmd;
        if (k < 2)
            throw UsageError("--k must be at least 2");
        if (optimize && (bound_t->count() || bound_u->count()))
            throw UsageError("--optimize cannot be combined with --t/--u");
        if (bound_u->count() && ! bound_t->count())
            throw UsageError("--u requires --t");
        if (bound_t->count()) {
            if (t < 2)
                throw UsageError("--t must be at least 2");
            cmd.t = t;
        }
        cmd.k = k;
        cmd.u = u;
        cmd.optimize = optimize || ! bound_t->count();
        cmd.certify = certify;
        cmd.memory_cap = memory_cap;
        return cmd;
    }
    if (certify_cmd->parsed()) {
        if (k < 2)
            throw UsageError("--k must be at least 2");
        if (t < 2)
            throw UsageError("--t must be at least 2");
        return CertifyCommand{k, t, u, memory_cap};
    }
    if (color_cmd->parsed()) {
        ColorCommand cmd;
        require_positive("--n", n);
        cmd.n = n;
        cmd.memory_cap = memory_cap;
        cmd.terms = terms;
        if (color_out->count())
            cmd.out = out_path;
        if (family == "pt" || family == "ptu") {
            if (! color_t->count())
                throw UsageError("--family " + family + " requires --t");
            if (family == "ptu" && ! color_u->count())
                throw UsageError("--family ptu requires --u");
            if (family == "pt" && color_u->count())
                throw UsageError("--u applies only to --family ptu");
            cmd.family = family == "pt" ? ColorCommand::Family::ThueMorse : ColorCommand::Family::Stretched;
            cmd.t = t;
            cmd.u = u;
        }
        else if (family == "factorial") {
            require_positive("--terms", terms);
            cmd.family = ColorCommand::Family::Factorial;
        }
        else if (family == "dividing") {
            if (color_a->count() == color_gapset->count())
                throw UsageError("--family dividing needs exactly one of --a or --gapset");
            cmd.family = ColorCommand::Family::Dividing;
            cmd.gapset = color_a->count() ? parse_generator("--a", a_text) : parse_gapset("--gapset", gapset_text);
            if (! cmd.gapset.generator())
                throw UsageError("--gapset must describe a dividing set for --family dividing");
        }
        else
            throw UsageError("--family: expected pt, ptu, factorial or dividing, got '" + family + "'");
        return cmd;
    }
    if (verify_cmd->parsed()) {
        VerifyCommand cmd;
        cmd.coloring_path = coloring_path;
        cmd.gapset = parse_gapset("--gapset", gapset_text);
        if (k < 2)
            throw UsageError("--k must be at least 2");
        cmd.k = k;
        if (verify_n->count()) {
            require_positive("--n", n);
            cmd.n = n;
        }
        return cmd;
    }
    if (longest_cmd->parsed()) {
        LongestCommand cmd;
        cmd.coloring_path = coloring_path;
        cmd.gapset = parse_gapset("--gapset", gapset_text);
        if (longest_n->count()) {
            require_positive("--n", n);
            cmd.n = n;
        }
        return cmd;
    }
    if (alpha_cmd->parsed()) {
        AlphaCommand cmd;
        require_positive("--terms", terms);
        cmd.terms = terms;
        cmd.scaled_upto = scaled_upto;
        if (alpha_a->count() && alpha_gapset->count())
            throw UsageError("--a and --gapset are mutually exclusive");
        if (alpha_a->count() || alpha_gapset->count()) {
            cmd.dividing = alpha_a->count() ? parse_generator("--a", a_text) : parse_gapset("--gapset", gapset_text);
            if (! cmd.dividing->generator())
                throw UsageError("--gapset must describe a dividing set");
            if (! alpha_n->count())
                throw UsageError("--n is required with --a/--gapset");
            require_positive("--n", n);
            cmd.n = n;
        }
        return cmd;
    }
    IntervalsCommand cmd;
    try {
        cmd.generator = DividingGenerator::parse(a_text);
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(std::string("--a: ") + e.what());
    }
    if (cmd.generator.at(1) != 1)
        throw UsageError("--a: interval tables need a_1 = 1");
    if (intervals_t->count()) {
        require_positive("--t", interval_t);
        cmd.t = interval_t;
    }
    return cmd;
}

Execution execute(const Command & cmd)
{
    try {
        return std::visit(overloaded{
                              [](const DeltaCommand & c) { return run_delta(c); },
                              [](const BoundCommand & c) { return run_bound(c); },
                              [](const CertifyCommand & c) { return run_certify(c); },
                              [](const ColorCommand & c) { return run_color(c); },
                              [](const VerifyCommand & c) { return run_verify(c); },
                              [](const LongestCommand & c) { return run_longest(c); },
                              [](const AlphaCommand & c) { return run_alpha(c); },
                              [](const IntervalsCommand & c) { return run_intervals(c); },
                          },
            cmd);
    }
    catch (const MemoryCapError & e) {
        return failure(ResourceCap, "resource_cap", e.what());
    }
    catch (const AmbiguousError & e) {
        return failure(ResourceCap, "ambiguous", e.what());
    }
    catch (const ConstructionError & e) {
        return failure(Internal, "construction_failure", e.what());
    }
    catch (const std::logic_error & e) {
        // std::invalid_argument and std::out_of_range are caller mistakes.
        if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const std::out_of_range *>(&e))
            return failure(Usage, "usage", e.what());
        return failure(Internal, "internal", e.what());
    }
    catch (const std::exception & e) {
        return failure(Usage, "io", e.what());
    }
}

int run(const std::vector<std::string> & argv, std::ostream & out, std::ostream & err)
{
    Execution ex;
    try {
        ex = execute(parse_command(argv));
    }
    catch (const HelpRequested & help) {
        out << help.text;
        return Success;
    }
    catch (const UsageError & e) {
        ex = failure(Usage, "usage", e.what());
    }
    if (ex.exit_code == Success)
        out << ex.output.dump(2) << "\n";
    else
        err << ex.error.dump(2) << "\n";
    return ex.exit_code;
}

} // namespace diffseq::cli
