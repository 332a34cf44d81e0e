#include "cased/svg.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cased {

namespace {

std::string num(double v) {
    // fixed formatting keeps repeated renders byte-identical
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0); // normalize -0
    return buf;
}

struct Frame {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double pad = 0;
};

void line(std::ostream& os, double x1, double y1, double x2, double y2,
          const std::string& color, double width, const char* css_class,
          const char* linecap = "round") {
    os << "  <line class=\"" << css_class << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1)
       << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << color
       << "\" stroke-width=\"" << num(width) << "\" stroke-linecap=\"" << linecap << "\"/>\n";
}

} // namespace

std::string render_svg(const Arrangement& arr, const Casing& c, const SvgStyle& style) {
    if (c.a_on_top.size() != arr.crossing_count())
        throw Error("casing-mismatch");
    const Drawing& d = arr.drawing;

    const double w = to_double(d.casing_width);
    const double edge_width = style.edge_width.value_or(0.6 * w);
    const double margin = style.casing_margin.value_or(0.5 * w);
    const double vertex_radius = style.vertex_radius.value_or(1.2 * w);
    const double casing_width = edge_width + 2 * margin;

    Frame fr;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            fr.min_x = fr.max_x = x;
            fr.min_y = fr.max_y = y;
            first = false;
        } else {
            fr.min_x = std::min(fr.min_x, x);
            fr.max_x = std::max(fr.max_x, x);
            fr.min_y = std::min(fr.min_y, y);
            fr.max_y = std::max(fr.max_y, y);
        }
    };
    for (const auto& v : d.vertices)
        grow(to_double(v.pos.x), to_double(v.pos.y));
    if (first)
        grow(0, 0);
    fr.pad = std::max({vertex_radius, casing_width, 0.5});

    const double s = style.scale;
    const double width_px = ((fr.max_x - fr.min_x) + 2 * fr.pad) * s;
    const double height_px = ((fr.max_y - fr.min_y) + 2 * fr.pad) * s;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width_px)
       << "\" height=\"" << num(height_px) << "\" viewBox=\"0 0 " << num(width_px) << " "
       << num(height_px) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";
    // flip y so the drawing's axes point the usual way
    os << "<g transform=\"matrix(" << num(s) << ",0,0," << num(-s) << ","
       << num((fr.pad - fr.min_x) * s) << "," << num((fr.max_y + fr.pad) * s) << ")\">\n";

    auto px = [&](const Point& p) {
        return std::pair<double, double>(to_double(p.x), to_double(p.y));
    };

    for (size_t e = 0; e < d.edges.size(); ++e) {
        auto [x1, y1] = px(d.segment(e).a);
        auto [x2, y2] = px(d.segment(e).b);
        line(os, x1, y1, x2, y2, style.edge_color, edge_width, "edge");
    }

    for (const auto& cr : arr.crossings) {
        EdgeIndex top = c.top(cr);
        Segment seg = d.segment(top);
        auto [ax, ay] = px(seg.a);
        auto [bx, by] = px(seg.b);
        double len = std::hypot(bx - ax, by - ay);
        double window = tunnel_length(d.casing_width, cr.sin_sq).approx();
        double t = to_double(cr.param_on(top));
        double lo = std::max(0.0, t - window / len);
        double hi = std::min(1.0, t + window / len);
        double x1 = ax + lo * (bx - ax), y1 = ay + lo * (by - ay);
        double x2 = ax + hi * (bx - ax), y2 = ay + hi * (by - ay);
        // butt caps keep the repainted window at exactly twice the tunnel length
        line(os, x1, y1, x2, y2, style.background, casing_width, "casing-bg", "butt");
        line(os, x1, y1, x2, y2, style.edge_color, edge_width, "casing-top", "butt");
    }

    for (const auto& v : d.vertices) {
        auto [x, y] = px(v.pos);
        os << "  <circle class=\"vertex\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\""
           << num(vertex_radius) << "\" fill=\"" << style.vertex_color << "\"/>\n";
    }

    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace cased
