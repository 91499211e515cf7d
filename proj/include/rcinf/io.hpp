#pragma once

// JSON encodings of every model object. Parsers validate shape and invariants and throw
// ParseError with a path-like hint; they never return a partially valid object.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rcinf/highest_weight.hpp"
#include "rcinf/report.hpp"
#include "rcinf/tableau.hpp"

namespace rcinf {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// {"n": n, "parts": [[{"len": l, "rig": r}, ...], ...]}
Json to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const Json& j);

/// {"n": n, "x": [[x_{1,1}, x_{2,1}, ...], [x_{1,2}, ...], ...]}
Json to_json(const ForwardExponents& x);
ForwardExponents forward_from_json(const Json& j);

/// {"n": n, "psi": [[psi_{1,1}, ..., psi_{n,1}], [psi_{2,2}, ...], ...]}
Json to_json(const ReverseExponents& psi);
ReverseExponents reverse_from_json(const Json& j);

/// {"n": n, "counts": [{"row": r, "value": y, "count": c}, ...]}; only the non-zero counts with
/// y > r are written. On input, an entry with y == r must agree with marginality.
Json to_json(const MarginallyLargeTableau& t);
MarginallyLargeTableau mlt_from_json(const Json& j);

/// {"n": n, "counts": [{"part": x, "row": y, "value": x - y + 2, "count": c}, ...]}; rows count
/// from the bottom of their part. Only non-zero counts are written.
Json to_json(const MarginallyLargeReverseTableau& t);
MarginallyLargeReverseTableau mlrt_from_json(const Json& j);

/// {"n": n, "lambda": [λ(h_1), ..., λ(h_n)]}
Json to_json(const DominantWeight& lambda);
DominantWeight lambda_from_json(const Json& j);

/// {"n": n, "side": "forward" | "reverse", "entries": [{"i": i, "j": j, "k": k, "value": v}, ...]};
/// entries missing on input read as zero.
Json to_json(const ForwardExtendedTable& t);
Json to_json(const ReverseExtendedTable& t);
Side table_side(const Json& j);
ForwardExtendedTable forward_table_from_json(const Json& j);
ReverseExtendedTable reverse_table_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const InequalityReport& report);

/// Compact dump with sorted keys; equal objects give equal strings.
std::string canonical(const Json& j);

/// 64-bit FNV-1a, used for stable graph node identifiers.
std::uint64_t fnv1a(const std::string& bytes);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

} // namespace rcinf
