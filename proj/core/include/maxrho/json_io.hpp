#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "maxrho/enumeration.hpp"
#include "maxrho/families.hpp"
#include "maxrho/matrix.hpp"
#include "maxrho/partition.hpp"
#include "maxrho/polynomial.hpp"
#include "maxrho/switching.hpp"

namespace maxrho {

using Json = nlohmann::json;

/// Parses text, turning syntax errors into ParseError with the byte offset.
Json parse_json(const std::string& text);

/// [[v, ...], ...]
Json to_json(const Partition& p);
Partition partition_from_json(std::size_t n, const Json& j);

/// Rows of [numerator, denominator] pairs; big values as decimal strings.
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);

/// Integer coefficients, constant term first; big values as decimal strings.
Json to_json(const IntPolynomial& p);

/// {"type1": m, "type2": [inner sizes], "type3": [cycle lengths]}
Json to_json(const ComplementProfile& p);
ComplementProfile profile_from_json(const Json& j);

/// {"family": tag, "n": n, "delta": d?, "profile": {...}?}
Json to_json(const FamilyId& id);
FamilyId family_id_from_json(const Json& j);

/// {"kind": "LS", "vertices": [...]}
Json to_json(const SwitchMove& m);
SwitchMove move_from_json(const Json& j);

Json to_json(const SwitchCertificate& c);
Json to_json(const ExtremalReport& r);

}  // namespace maxrho
