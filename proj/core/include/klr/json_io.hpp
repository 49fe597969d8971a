#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "klr/charalg.hpp"
#include "klr/combinat.hpp"
#include "klr/convex.hpp"
#include "klr/qseries.hpp"
#include "klr/report.hpp"
#include "klr/strata.hpp"

namespace klr {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in a long, as decimal
// strings otherwise; both forms are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"-1": 1, "1": 1} keyed by exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"coeffs": {...}, "lower": l, "trunc": d} with trunc null for exact series.
Json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

Json to_json(const RootVector& v);
RootVector root_from_json(const Json& j);

/// {"theta": [...], "blocks": [[...]], "entries": {"0,1": series}}
Json to_json(const Character& c);
Character character_from_json(const Json& j);

/// {"type": "A1~", "functionals": [[1,1],[0,1]]}; the first functional must be
/// positive on simple roots.
Json to_json(const ConvexPreorder& order);
ConvexPreorder order_from_json(const Json& j);

/// [[root, mult], ...] from the largest part down.
Json to_json(const KostantPartition& xi);
Json to_json(const RootPartition& pi);
Json to_json(const Report& r);

Json to_json(const StandardCharTable& t);
/// Reads a table written by to_json. The gamma data is recomputed from the order.
StandardCharTable table_from_json(const Json& j, const ConvexPreorder& order);

}  // namespace klr
