#ifndef CASED_SVG_H
#define CASED_SVG_H

#include "cased/crossing_graph.h"

#include <optional>
#include <string>

namespace cased {

struct SvgStyle {
    double scale = 32;                  // SVG units per drawing unit
    std::string background = "#ffffff";
    std::string edge_color = "#20242c";
    std::string vertex_color = "#20242c";
    std::optional<double> edge_width;    // drawing units; default 0.6 * casing width
    std::optional<double> casing_margin; // extra stroke on each side; default 0.5 * casing width
    std::optional<double> vertex_radius; // default 1.2 * casing width
};

/// Draws every edge, then repaints the top edge of each crossing twice over
/// a window of length 2 * tunnel_length centred on the crossing: first a
/// background-coloured stroke widened by the casing margin, then the edge
/// stroke.  The crossing-local overpaint renders weaving casings (which
/// admit no global order) correctly one crossing at a time.  Vertices are
/// drawn last as disks.
std::string render_svg(const Arrangement& arr, const Casing& c, const SvgStyle& style = {});

} // namespace cased

#endif
