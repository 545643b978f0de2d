#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "entroscope/ae_limit.hpp"
#include "entroscope/catalog.hpp"
#include "entroscope/distribution.hpp"
#include "entroscope/fq_example.hpp"
#include "entroscope/profile.hpp"
#include "entroscope/shannon_lp.hpp"

namespace entroscope {

// Artifact formats. Every writer is deterministic and every reader accepts
// exactly what its writer emits, so emit → read → emit is a fixpoint.
// Readers throw FormatError on malformed input.

/// {"variables":[{"name","alphabet"}], "outcomes":[{"values":[..],"p":"n/d"}]}
/// Probabilities must be exact: integer or "n/d" strings, never floats.
void write_distribution_json(std::ostream& out, const JointDistribution& d);
std::string distribution_to_json(const JointDistribution& d);
/// Also accepts {"report": {...}, "distribution": {...}} as printed by the CLI.
JointDistribution distribution_from_json(std::string_view text);

/// Key of a subset in profile-like objects: names concatenated in declared
/// order ("ab"), comma-joined when some name is longer than one character.
std::string coordinate_key(SubsetMask s, const std::vector<std::string>& names);

/// {"n", "order":[..], "coords":{"a":..,"ab":..}}
std::string profile_to_json(const EntropyProfile& p);
/// Also accepts {"profile": {...}, ...} as written by profile_report_to_json.
EntropyProfile profile_from_json(std::string_view text);

/// {"profile": {...}, "polymatroid": {"pass", "checked", "violations"}}
std::string profile_report_to_json(const EntropyProfile& p, const PolymatroidVerdict& v);

/// {"decision", "variables", "expression", "dual_weights":{label:"n/d"}} or
/// {"decision", "variables", "expression", "witness":{key:"n/d"}, "objective"}.
std::string shannon_to_json(const ShannonTypeVerdict& v, const InfoExpression& e);
/// Returns the verdict; `expression` receives the parsed expression.
ShannonTypeVerdict shannon_from_json(std::string_view text, InfoExpression* expression = nullptr);

/// {target, q, gap, half_width, zero_set, provenance, bodies, variables, center, half_widths}
std::string certificate_to_json(const ViolationCertificate& c);
ViolationCertificate certificate_from_json(std::string_view text);

std::string example_report_to_json(const ExampleReport& r);
ExampleReport example_report_from_json(std::string_view text);

std::string verdict_to_json(const ConditionalVerdict& v);
ConditionalVerdict verdict_from_json(std::string_view text);

}  // namespace entroscope
