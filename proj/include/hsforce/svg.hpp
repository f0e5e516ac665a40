#pragma once

// SVG rendering of the symbol plane: the unit square under embed_coordinate
// at a fixed depth, pruning rectangles as shaded boxes, orbit points as
// dots.  The picture is a finite-depth visualization of exact data; the
// depth is recorded in the file.  Output bytes are a pure function of the
// inputs.

#include <cstdio>
#include <string>
#include <vector>

#include "plane.hpp"
#include "region.hpp"
#include "tailseq.hpp"

namespace hsforce {

struct SvgOptions {
    int size_px = 640;
    int depth = 24;  // embed_coordinate depth, in [1, 64]
};

struct SvgPoint {
    PlanePoint point;
    bool forced = true;       // style class: forced or excluded
    std::string label;        // tooltip text (orbit code)
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// x grows rightward, y grows upward (SVG's y axis is flipped).
inline std::string svg_x(const TailSeq& s, const SvgOptions& o) {
    return svg_num(embed_coordinate(s, o.depth).value() * o.size_px);
}
inline std::string svg_y(const TailSeq& s, const SvgOptions& o) {
    return svg_num((1.0 - embed_coordinate(s, o.depth).value()) * o.size_px);
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace detail

inline std::string emit_svg(const PruningRegion& region, const std::vector<SvgPoint>& points,
                            const SvgOptions& opt) {
    const int s = opt.size_px;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(s) +
           "\" height=\"" + std::to_string(s) + "\" viewBox=\"0 0 " + std::to_string(s) +
           " " + std::to_string(s) + "\">\n";
    out += "<metadata>embed-depth=" + std::to_string(opt.depth) + "</metadata>\n";
    out += "<style>.frame{fill:none;stroke:#24292f;stroke-width:1}"
           ".domain{fill:#0969da;fill-opacity:0.18;stroke:#0969da;stroke-width:1}"
           ".forced{fill:#1a7f37}.excluded{fill:#cf222e}</style>\n";
    out += "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" + std::to_string(s) +
           "\" height=\"" + std::to_string(s) + "\"/>\n";

    out += "<g id=\"region\">\n";
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Rectangle& r = region[i];
        const double x0 = embed_coordinate(r.x_min, opt.depth).value() * s;
        const double x1 = embed_coordinate(r.x_max, opt.depth).value() * s;
        const double y0 = embed_coordinate(r.y_min, opt.depth).value() * s;
        const double y1 = embed_coordinate(r.y_max, opt.depth).value() * s;
        out += "<rect class=\"domain\" id=\"domain-" + std::to_string(i) + "\" x=\"" +
               detail::svg_num(x0) + "\" y=\"" + detail::svg_num(s - y1) + "\" width=\"" +
               detail::svg_num(x1 - x0) + "\" height=\"" + detail::svg_num(y1 - y0) +
               "\"><title>" + detail::xml_escape(r.provenance) + "</title></rect>\n";
    }
    out += "</g>\n";

    out += "<g id=\"points\">\n";
    for (const SvgPoint& p : points) {
        out += "<circle class=\"";
        out += p.forced ? "forced" : "excluded";
        out += "\" cx=\"" + detail::svg_x(p.point.forward, opt) + "\" cy=\"" +
               detail::svg_y(p.point.backward, opt) + "\" r=\"2.5\">";
        out += "<title>" + detail::xml_escape(p.label) + "</title></circle>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace hsforce
