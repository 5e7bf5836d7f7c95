#pragma once

#include <json.hpp>

#include "gallai/bounds.hpp"
#include "gallai/coloring.hpp"
#include "gallai/partition.hpp"
#include "gallai/pattern.hpp"
#include "gallai/search.hpp"

namespace gallai {

using Json = nlohmann::ordered_json;

/// {"n":…,"k":…,"rows":[[…],…]} with the same row layout as the text format.
Json coloring_to_json(const EdgeColoring& g);
EdgeColoring coloring_from_json(const Json& j);

/// {"parts":[[…]],"between_colors":[…],"pair_colors":[[i,j,c],…]}.
/// pair_colors may be omitted on input; it is then read off g.
Json partition_to_json(const GallaiPartition& p);
GallaiPartition partition_from_json(const EdgeColoring& g, const Json& j);

Json report_to_json(const PartitionReport& r);
Json hit_to_json(const PatternHit& hit);

/// Values outside the signed 64-bit range are written as decimal strings.
Json bound_to_json(const BoundResult& r);

Json stats_to_json(const SearchStats& s, bool timing);
Json outcome_to_json(const SearchOutcome& o, bool timing);
Json least_order_to_json(const LeastOrder& r, bool timing);

/// {"n":…,"k":…,"forbidden":["C3@0",…],"limits":{"nodes":…,"seconds":…}}.
SearchTask task_from_json(const Json& j);
Json task_to_json(const SearchTask& t);

}  // namespace gallai
