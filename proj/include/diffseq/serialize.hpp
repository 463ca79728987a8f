#pragma once

// JSON forms of the library's records. Integers stay exact: values beyond
// 64 bits are written as decimal strings, rationals as "p/q".

#include <diffseq/analysis.hpp>
#include <diffseq/bounds.hpp>
#include <diffseq/dividing.hpp>
#include <diffseq/solver.hpp>

#include <json.hpp>

namespace diffseq {

using Json = nlohmann::ordered_json;

Json big_to_json(const BigInt & v);

Json coloring_to_json(const Coloring & c);
Coloring coloring_from_json(const Json & j);

Json witness_to_json(const DiffseqWitness & w);
Json certificate_to_json(const Certificate & cert);
Certificate certificate_from_json(const Json & j);

Json solver_result_to_json(const SolverResult & result);
Json theorem_bound_to_json(const TheoremBound & tb);
Json discrepancy_to_json(const BoundDiscrepancy & d);
Json bound_report_to_json(const BoundReport & report);

Json interval_table_to_json(const IntervalTable & table);
Json nested_alpha_to_json(const NestedAlpha & nested);
Json alpha_to_json(const AlphaValue & alpha);

} // namespace diffseq
