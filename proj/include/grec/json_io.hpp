#pragma once

#include <json.hpp>

#include <span>
#include <string>

#include "grec/enumerate.hpp"
#include "grec/genrect.hpp"

namespace grec {

/// {"n":., "rects":[{"id","x0","y0","x1","y1"}], "walls":[{"orientation",
/// "coord","lo","hi"}]}; coordinates are the canonical [0,n] integers.
nlohmann::json to_json(const DiagRect& diag);

/// Same schema with a "shuffle" array per wall.
nlohmann::json to_json(const GenRect& g);

/// Parses and fully validates a GenRect document. Throws
/// std::invalid_argument naming the violated invariant.
GenRect genrect_from_json(const nlohmann::json& doc);

/// CSV with header "n,count", one row per level starting at first_n.
std::string counts_csv(std::span<const BigCount> counts, int first_n = 1);

/// [{"n":., "count":"decimal string"}, ...]; counts are strings, never floats.
nlohmann::json counts_json(std::span<const BigCount> counts, int first_n = 1);

}  // namespace grec
