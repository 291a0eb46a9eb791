#pragma once

// JSON forms of parameter tuples, designs, instances and reports. Indices in
// JSON are 1-based; the library is 0-based.

#include "json.hpp"

#include "twodist/designs.hpp"
#include "twodist/paramspace.hpp"
#include "twodist/searcher.hpp"

namespace twodist::io {

using nlohmann::json;

json indices_json(const BitMask& m);
/// Throws ParseError on indices outside 1..limit or repeated indices.
BitMask indices_from_json(const json& j, int limit);

json param_json(const paramspace::ParamTuple& p);

json design_json(const designs::Design& d);
designs::Design design_from_json(const json& j);

json instance_json(const searcher::Instance& inst);
/// Rebuilds the tuple from (s, branch, d, k) and checks the stored kPrime,
/// beta and alpha against it. Throws ParseError on malformed input.
searcher::Instance instance_from_json(const json& j, std::optional<paramspace::MSetRule> m_rule = std::nullopt);

json report_json(const searcher::Report& r);
json maximality_json(const searcher::MaximalityReport& r);

}  // namespace twodist::io
