#pragma once

// JSON encodings of parameters and reports. Complex numbers are [re, im]
// pairs; non-finite reals are written as null and read back as +infinity.
// Every *_from_json function throws ParseError on a schema violation.

#include <nlohmann/json.hpp>

#include "cyclab/experiments.hpp"
#include "cyclab/exp_poly.hpp"
#include "cyclab/jet.hpp"
#include "cyclab/report.hpp"
#include "cyclab/wronskian.hpp"
#include "cyclab/zero_counter.hpp"

namespace cyclab {

using Json = nlohmann::json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const FamilyShape& shape);
FamilyShape shape_from_json(const Json& j);

/// {"m", "p", "q", "c": [[[re, im], ...] per summand], "d": [...]}.
/// Extra keys are ignored, so a parameter document may carry run options.
Json to_json(const ExpPolyParams& lambda);
ExpPolyParams params_from_json(const Json& j);

/// Array of [re, im] coefficients.
Json to_json(const Jet& jet);
Jet jet_from_json(const Json& j);

/// {"m", "p", "q", "entries": {"<mask>": order or -1}}.
Json to_json(const WronskianTable& table);
WronskianTable table_from_json(const Json& j);

Json to_json(const Disk& disk);
Disk disk_from_json(const Json& j);

/// {"disk", "count", "residual", "nodes", "roots": [{"root", "multiplicity"}], "agreed", "oracle_note"?}.
Json to_json(const ZeroCountReport& rep);
ZeroCountReport zero_report_from_json(const Json& j);

/// {"lhs", "rhs", "margin", "satisfied", "empirical_exponent"?, "empirical_constant"?, "witness"?, "note"}.
Json to_json(const InequalityReport& rep);
InequalityReport inequality_report_from_json(const Json& j);

/// {"ord_sum" (-1: vanishes to truncation), "bound" (null if none), "satisfied", "vacuous", "table"}.
Json to_json(const RolleReport& rep);
RolleReport rolle_report_from_json(const Json& j);

Json to_json(const FrobeniusReport& rep);
FrobeniusReport frobenius_report_from_json(const Json& j);

/// Shape keys at top level plus "base_point"?, "epsilon", "delta", "samples",
/// "seed", "workers", "with_oracle"; all but the shape are optional.
Json to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const Json& j);

Json to_json(const SweepReport& rep);
SweepReport sweep_report_from_json(const Json& j);

const char* to_string(SampleStatus status);
SampleStatus sample_status_from_string(const std::string& s);

/// 16 lowercase hex digits.
std::string hash_string(std::uint64_t hash);

}  // namespace cyclab
