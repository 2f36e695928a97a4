#pragma once

#include <string>
#include <vector>

#include "grec/genrect.hpp"

namespace grec {

/// A concrete crossing-free tiling realizing a generic rectangulation.
/// Coordinates are the integer layers produced by longest-path compaction of
/// the two wall constraint graphs.
struct Layout {
    std::vector<Rect> rects;  // indexed by id - 1, ids propagated from source
    GenRect source;
};

/// Builds a layout whose extracted walls and shuffles reproduce g.
Layout realize(const GenRect& g);

/// Recomputes walls and shuffles from the layout geometry and pairs them with
/// the source diagonal rectangulation. Throws std::invalid_argument if the
/// rectangles do not tile or the tiling has a cross.
GenRect extract(const Layout& layout);

struct RenderOptions {
    int scale = 48;
    bool labels = true;
    bool diagonal = false;
};

/// Deterministic SVG 1.1 document, byte-for-byte stable for equal inputs.
std::string render_svg(const Layout& layout, const RenderOptions& options = {});

}  // namespace grec
