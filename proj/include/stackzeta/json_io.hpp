#ifndef STACKZETA_JSON_IO_HPP
#define STACKZETA_JSON_IO_HPP

#include <json.hpp>

#include "stackzeta/zeta.hpp"

namespace stackzeta {

using json = nlohmann::ordered_json;

// Wire formats: Rat as "p/q"; AlgNum as {"field": "x^2-<a>x+<q>" | "Q",
// "c0": "...", "c1": "..."}; WeilNum adds "weight"; series as
// {"order": N, "coeffs": [...]}. Key order is fixed so identical configs
// yield byte-identical reports.

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json algnum_to_json(const AlgNum& x);
AlgNum algnum_from_json(const json& j);

json weil_to_json(const WeilNum& w);
WeilNum weil_from_json(const json& j);

json series_to_json(const PowerSeries& f);

json spectrum_to_json(const FrobSpectrum& s);

json rationalfn_to_json(const RationalFn& f);

json report_to_json(const VerificationReport& r);

json weight_audit_to_json(const WeightAuditReport& r);

json pole_catalog_to_json(const std::vector<PoleEntry>& poles);

json zeta_result_to_json(const ZetaResult& z);

json existence_to_json(const PointExistenceResult& r);

/// Reads {"n": ..., "mul": [[...]], "sigma": [...]} (sigma optional) and
/// validates the table.
GroupTable group_table_from_json(const json& j);

}  // namespace stackzeta

#endif
