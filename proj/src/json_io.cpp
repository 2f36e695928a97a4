#include "grec/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace grec {

namespace {

nlohmann::json rects_to_json(const std::vector<Rect>& rects) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rect& r : rects)
        out.push_back({{"id", r.id}, {"x0", r.x0}, {"y0", r.y0}, {"x1", r.x1}, {"y1", r.y1}});
    return out;
}

nlohmann::json wall_to_json(const Wall& wall) {
    return {{"orientation", wall.orientation == Orientation::vertical ? "v" : "h"},
            {"coord", wall.coord},
            {"lo", wall.lo},
            {"hi", wall.hi}};
}

[[noreturn]] void invalid(const std::string& what) {
    throw std::invalid_argument("invalid genrect document: " + what);
}

int require_int(const nlohmann::json& node, const char* key) {
    if (!node.contains(key) || !node[key].is_number_integer())
        invalid(std::string("missing integer field '") + key + "'");
    return node[key].get<int>();
}

}  // namespace

nlohmann::json to_json(const DiagRect& diag) {
    nlohmann::json walls = nlohmann::json::array();
    for (const Wall& wall : diag.walls()) walls.push_back(wall_to_json(wall));
    return {{"n", diag.size()}, {"rects", rects_to_json(diag.rects())}, {"walls", walls}};
}

nlohmann::json to_json(const GenRect& g) {
    nlohmann::json walls = nlohmann::json::array();
    for (std::size_t w = 0; w < g.diag().walls().size(); ++w) {
        nlohmann::json wall = wall_to_json(g.diag().walls()[w]);
        wall["shuffle"] = g.shuffles()[w];
        walls.push_back(std::move(wall));
    }
    return {{"n", g.size()}, {"rects", rects_to_json(g.diag().rects())}, {"walls", walls}};
}

GenRect genrect_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) invalid("document is not a JSON object");
    const int n = require_int(doc, "n");
    if (n < 1) invalid("n must be at least 1");
    if (!doc.contains("rects") || !doc["rects"].is_array() ||
        doc["rects"].size() != static_cast<std::size_t>(n))
        invalid("'rects' must be an array of n rectangles");

    std::vector<Rect> rects(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const nlohmann::json& node : doc["rects"]) {
        Rect r{require_int(node, "id"), require_int(node, "x0"), require_int(node, "y0"),
               require_int(node, "x1"), require_int(node, "y1")};
        if (r.id < 1 || r.id > n || seen[static_cast<std::size_t>(r.id)])
            invalid("rect ids must cover 1..n exactly once");
        seen[static_cast<std::size_t>(r.id)] = true;
        if (r.x0 < 0 || r.y0 < 0 || r.x1 > n || r.y1 > n || r.x0 >= r.x1 || r.y0 >= r.y1)
            invalid("rect coordinates must satisfy 0 <= x0 < x1 <= n, 0 <= y0 < y1 <= n");
        rects[static_cast<std::size_t>(r.id - 1)] = r;
    }

    bool generic = false;
    try {
        generic = is_generic_tiling(rects);
    } catch (const std::invalid_argument& error) {
        invalid(error.what());
    }
    if (!generic) invalid("tiling has a cross");

    // Rectangle v must cover the diagonal cell between (v-1, n-v+1) and (v, n-v).
    for (const Rect& r : rects)
        if (!(r.x0 <= r.id - 1 && r.x1 >= r.id && r.y0 <= n - r.id && r.y1 >= n - r.id + 1))
            invalid("rect ids are not in diagonal position");

    // The document must be in canonical form: redrawing any compatible order
    // with rho must reproduce the same coordinates.
    DiagRect diag(n, rects);
    std::vector<int> order;
    {
        std::vector<int> heights(static_cast<std::size_t>(n), 0);
        std::vector<bool> drawn(static_cast<std::size_t>(n) + 1, false);
        auto drawable = [&](const Rect& r) {
            if (r.x0 > 0 && heights[static_cast<std::size_t>(r.x0 - 1)] < r.y1) return false;
            for (int c = r.x0; c < r.x1; ++c)
                if (heights[static_cast<std::size_t>(c)] != r.y0) return false;
            return true;
        };
        for (int step = 0; step < n; ++step) {
            int picked = 0;
            for (int id = 1; id <= n && picked == 0; ++id)
                if (!drawn[static_cast<std::size_t>(id)] && drawable(diag.rect(id))) picked = id;
            if (picked == 0) invalid("not a canonical diagonal rectangulation");
            drawn[static_cast<std::size_t>(picked)] = true;
            const Rect& r = diag.rect(picked);
            for (int c = r.x0; c < r.x1; ++c) heights[static_cast<std::size_t>(c)] = r.y1;
            order.push_back(picked);
        }
    }
    if (!(rho(Permutation(order)) == diag)) invalid("not a canonical diagonal rectangulation");

    if (!doc.contains("walls") || !doc["walls"].is_array() ||
        doc["walls"].size() != diag.walls().size())
        invalid("'walls' must list exactly the tiling's walls");
    std::vector<std::vector<int>> shuffles(diag.walls().size());
    std::vector<bool> matched(diag.walls().size(), false);
    for (const nlohmann::json& node : doc["walls"]) {
        if (!node.contains("orientation") || !node["orientation"].is_string())
            invalid("wall lacks an orientation");
        const std::string orientation = node["orientation"].get<std::string>();
        if (orientation != "v" && orientation != "h") invalid("wall orientation must be 'v' or 'h'");
        const Wall probe{orientation == "v" ? Orientation::vertical : Orientation::horizontal,
                         require_int(node, "coord"), require_int(node, "lo"),
                         require_int(node, "hi"), {}, {}};
        std::size_t found = diag.walls().size();
        for (std::size_t w = 0; w < diag.walls().size(); ++w) {
            const Wall& wall = diag.walls()[w];
            if (wall.orientation == probe.orientation && wall.coord == probe.coord &&
                wall.lo == probe.lo && wall.hi == probe.hi) {
                found = w;
                break;
            }
        }
        if (found == diag.walls().size() || matched[found])
            invalid("walls do not match the tiling geometry");
        matched[found] = true;
        if (!node.contains("shuffle") || !node["shuffle"].is_array())
            invalid("wall lacks a shuffle array");
        std::vector<int> shuffle;
        for (const nlohmann::json& entry : node["shuffle"]) {
            if (!entry.is_number_integer()) invalid("shuffle entries must be integers");
            shuffle.push_back(entry.get<int>());
        }
        if (!is_legal_shuffle(diag.walls()[found], shuffle))
            invalid("illegal wall shuffle: not an interleaving of the wall's side sequences");
        shuffles[found] = std::move(shuffle);
    }

    return GenRect(std::move(diag), std::move(shuffles));
}

std::string counts_csv(std::span<const BigCount> counts, int first_n) {
    std::string out = "n,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out += std::to_string(first_n + static_cast<int>(i));
        out += ',';
        out += counts[i].get_str();
        out += '\n';
    }
    return out;
}

nlohmann::json counts_json(std::span<const BigCount> counts, int first_n) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < counts.size(); ++i)
        out.push_back({{"n", first_n + static_cast<int>(i)}, {"count", counts[i].get_str()}});
    return out;
}

}  // namespace grec
