#include "grec/realize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "grec/errors.hpp"

namespace grec {

namespace {

// Longest-path layers of a DAG given as edge list; sources sit at layer 0.
std::vector<int> longest_path_layers(int nodes, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
    std::vector<int> indegree(static_cast<std::size_t>(nodes), 0);
    for (const auto& [from, to] : edges) {
        out[static_cast<std::size_t>(from)].push_back(to);
        ++indegree[static_cast<std::size_t>(to)];
    }
    std::vector<int> layer(static_cast<std::size_t>(nodes), 0);
    std::vector<int> ready;
    for (int v = 0; v < nodes; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int processed = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++processed;
        for (int w : out[static_cast<std::size_t>(v)]) {
            layer[static_cast<std::size_t>(w)] =
                std::max(layer[static_cast<std::size_t>(w)], layer[static_cast<std::size_t>(v)] + 1);
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
        }
    }
    if (processed != nodes)
        throw internal_error("cyclic constraints: the wall graph of the input is not a DAG");
    return layer;
}

// Node helpers: 0 is the low border, 1..count are walls of one orientation in
// canonical order, count+1 is the high border.
struct WallIndexer {
    const DiagRect* diag;
    Orientation orientation;
    std::vector<int> wall_ids;  // indices into diag->walls()
    std::map<std::tuple<int, int, int>, int> by_span;  // (coord, lo, hi) -> node

    explicit WallIndexer(const DiagRect& d, Orientation o) : diag(&d), orientation(o) {
        for (std::size_t w = 0; w < d.walls().size(); ++w) {
            if (d.walls()[w].orientation != o) continue;
            wall_ids.push_back(static_cast<int>(w));
            const Wall& wall = d.walls()[w];
            by_span[{wall.coord, wall.lo, wall.hi}] =
                static_cast<int>(wall_ids.size());  // nodes start at 1
        }
    }

    int node_count() const { return static_cast<int>(wall_ids.size()) + 2; }
    int low_border() const { return 0; }
    int high_border() const { return static_cast<int>(wall_ids.size()) + 1; }

    // Node of the wall containing the edge segment [lo, hi] at the given coord.
    int segment_node(int coord, int lo, int hi) const {
        if (coord == 0) return low_border();
        if (coord == diag->size()) return high_border();
        for (const auto& [span, node] : by_span) {
            const auto& [c, wlo, whi] = span;
            if (c == coord && wlo <= lo && hi <= whi) return node;
        }
        throw internal_error("no wall contains the requested edge segment");
    }

    // Node of the wall whose interior contains the given point offset.
    int point_node(int coord, int offset) const {
        if (coord == 0) return low_border();
        if (coord == diag->size()) return high_border();
        for (const auto& [span, node] : by_span) {
            const auto& [c, wlo, whi] = span;
            if (c == coord && wlo < offset && offset < whi) return node;
        }
        throw internal_error("no wall interior contains the requested junction point");
    }
};

}  // namespace

Layout realize(const GenRect& g) {
    const DiagRect& diag = g.diag();
    const int n = diag.size();
    const std::vector<Wall>& walls = diag.walls();

    const WallIndexer xwalls(diag, Orientation::vertical);
    const WallIndexer ywalls(diag, Orientation::horizontal);

    // Bounding wall node of each rectangle edge.
    std::vector<int> left_node(static_cast<std::size_t>(n) + 1);
    std::vector<int> right_node(static_cast<std::size_t>(n) + 1);
    std::vector<int> bottom_node(static_cast<std::size_t>(n) + 1);
    std::vector<int> top_node(static_cast<std::size_t>(n) + 1);
    for (int id = 1; id <= n; ++id) {
        const Rect& r = diag.rect(id);
        left_node[static_cast<std::size_t>(id)] = xwalls.segment_node(r.x0, r.y0, r.y1);
        right_node[static_cast<std::size_t>(id)] = xwalls.segment_node(r.x1, r.y0, r.y1);
        bottom_node[static_cast<std::size_t>(id)] = ywalls.segment_node(r.y0, r.x0, r.x1);
        top_node[static_cast<std::size_t>(id)] = ywalls.segment_node(r.y1, r.x0, r.x1);
    }

    std::vector<std::pair<int, int>> x_edges;
    std::vector<std::pair<int, int>> y_edges;
    for (int id = 1; id <= n; ++id) {
        x_edges.emplace_back(left_node[static_cast<std::size_t>(id)],
                             right_node[static_cast<std::size_t>(id)]);
        y_edges.emplace_back(bottom_node[static_cast<std::size_t>(id)],
                             top_node[static_cast<std::size_t>(id)]);
    }

    // Per wall, a strict chain across its junctions in shuffle order, framed
    // by the walls supporting its two endpoints.
    for (std::size_t w = 0; w < walls.size(); ++w) {
        const Wall& wall = walls[w];
        const auto [seq_a, seq_b] = shuffle_alphabets(wall);
        const std::set<int> in_a(seq_a.begin(), seq_a.end());
        std::vector<int> chain;
        if (wall.orientation == Orientation::vertical) {
            chain.push_back(ywalls.point_node(wall.lo, wall.coord));
            for (int id : g.shuffle(static_cast<int>(w)))
                chain.push_back(in_a.contains(id) ? bottom_node[static_cast<std::size_t>(id)]
                                                  : top_node[static_cast<std::size_t>(id)]);
            chain.push_back(ywalls.point_node(wall.hi, wall.coord));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                y_edges.emplace_back(chain[i], chain[i + 1]);
        } else {
            chain.push_back(xwalls.point_node(wall.lo, wall.coord));
            for (int id : g.shuffle(static_cast<int>(w)))
                chain.push_back(in_a.contains(id) ? right_node[static_cast<std::size_t>(id)]
                                                  : left_node[static_cast<std::size_t>(id)]);
            chain.push_back(xwalls.point_node(wall.hi, wall.coord));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                x_edges.emplace_back(chain[i], chain[i + 1]);
        }
    }

    const std::vector<int> x_layer = longest_path_layers(xwalls.node_count(), x_edges);
    const std::vector<int> y_layer = longest_path_layers(ywalls.node_count(), y_edges);

    Layout layout;
    layout.source = g;
    layout.rects.reserve(static_cast<std::size_t>(n));
    for (int id = 1; id <= n; ++id) {
        layout.rects.push_back(
            Rect{id, x_layer[static_cast<std::size_t>(left_node[static_cast<std::size_t>(id)])],
                 y_layer[static_cast<std::size_t>(bottom_node[static_cast<std::size_t>(id)])],
                 x_layer[static_cast<std::size_t>(right_node[static_cast<std::size_t>(id)])],
                 y_layer[static_cast<std::size_t>(top_node[static_cast<std::size_t>(id)])]});
    }
    return layout;
}

GenRect extract(const Layout& layout) {
    const std::vector<Rect>& rects = layout.rects;
    if (!is_generic_tiling(rects))
        throw std::invalid_argument("layout is not generic: a cross was found");

    std::map<int, const Rect*> by_id;
    for (const Rect& r : rects)
        if (!by_id.emplace(r.id, &r).second)
            throw std::invalid_argument("layout repeats a rectangle id");

    // Read each wall's shuffle by walking its junctions in the prescribed
    // direction: bottom-to-top for vertical walls, left-to-right for
    // horizontal ones.
    std::map<std::pair<bool, std::vector<int>>, std::vector<int>> shuffle_by_side_set;
    for (const Wall& wall : extract_walls(rects)) {
        std::vector<std::pair<int, int>> events;  // (position along wall, id)
        if (wall.orientation == Orientation::vertical) {
            for (std::size_t i = 0; i + 1 < wall.side_a.size(); ++i) {
                const Rect& upper = *by_id.at(wall.side_a[i + 1]);
                events.emplace_back(upper.y0, upper.id);
            }
            for (std::size_t i = 0; i + 1 < wall.side_b.size(); ++i) {
                const Rect& lower = *by_id.at(wall.side_b[i]);
                events.emplace_back(lower.y1, lower.id);
            }
        } else {
            for (std::size_t i = 0; i + 1 < wall.side_a.size(); ++i) {
                const Rect& right = *by_id.at(wall.side_a[i + 1]);
                events.emplace_back(right.x0, right.id);
            }
            for (std::size_t i = 0; i + 1 < wall.side_b.size(); ++i) {
                const Rect& left = *by_id.at(wall.side_b[i]);
                events.emplace_back(left.x1, left.id);
            }
        }
        std::sort(events.begin(), events.end());
        std::vector<int> shuffle;
        shuffle.reserve(events.size());
        for (const auto& [position, id] : events) shuffle.push_back(id);

        std::vector<int> side_set = wall.side_a;
        std::sort(side_set.begin(), side_set.end());
        shuffle_by_side_set[{wall.orientation == Orientation::vertical, std::move(side_set)}] =
            std::move(shuffle);
    }

    // Walls correspond across wall slides via their adjacent rectangle sets.
    const DiagRect& diag = layout.source.diag();
    std::vector<std::vector<int>> shuffles;
    shuffles.reserve(diag.walls().size());
    for (const Wall& wall : diag.walls()) {
        std::vector<int> side_set = wall.side_a;
        std::sort(side_set.begin(), side_set.end());
        const auto it = shuffle_by_side_set.find(
            {wall.orientation == Orientation::vertical, side_set});
        if (it == shuffle_by_side_set.end())
            throw std::invalid_argument("layout walls do not match the source rectangulation");
        shuffles.push_back(it->second);
    }
    if (shuffle_by_side_set.size() != diag.walls().size())
        throw std::invalid_argument("layout wall count differs from the source rectangulation");
    return GenRect(diag, std::move(shuffles));
}

std::string render_svg(const Layout& layout, const RenderOptions& options) {
    const int scale = options.scale;
    int max_x = 0;
    int max_y = 0;
    for (const Rect& r : layout.rects) {
        max_x = std::max(max_x, r.x1);
        max_y = std::max(max_y, r.y1);
    }
    const int margin = scale / 2;
    const int width = max_x * scale + 2 * margin;
    const int height = max_y * scale + 2 * margin;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    std::vector<Rect> ordered = layout.rects;
    std::sort(ordered.begin(), ordered.end(),
              [](const Rect& a, const Rect& b) { return a.id < b.id; });
    for (const Rect& r : ordered) {
        const int x = margin + r.x0 * scale;
        const int y = margin + (max_y - r.y1) * scale;
        svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
               "\" width=\"" + std::to_string((r.x1 - r.x0) * scale) + "\" height=\"" +
               std::to_string((r.y1 - r.y0) * scale) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (options.diagonal) {
        svg += "  <line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(margin) +
               "\" x2=\"" + std::to_string(margin + max_x * scale) + "\" y2=\"" +
               std::to_string(margin + max_y * scale) +
               "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,6\"/>\n";
    }
    if (options.labels) {
        for (const Rect& r : ordered) {
            const int cx = margin + (r.x0 + r.x1) * scale / 2;
            const int cy = margin + (2 * max_y - r.y0 - r.y1) * scale / 2;
            svg += "  <text x=\"" + std::to_string(cx) + "\" y=\"" + std::to_string(cy) +
                   "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(scale / 3) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
                   std::to_string(r.id) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace grec
