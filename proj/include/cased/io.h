#ifndef CASED_IO_H
#define CASED_IO_H

#include "cased/crossing_graph.h"

#include <optional>
#include <string>

namespace cased {

/// Parses a drawing document: JSON with casing_width, vertices [{id,x,y}]
/// and edges [{id,u,v}].  Coordinates are decimal strings (or integers) and
/// parse to exact rationals; "p/q" fraction strings are also accepted.
/// Throws InputError with field context on malformed documents.
Drawing parse_drawing(const std::string& text);

/// Exact serialization; parse(serialize(d)) == d on values.
std::string serialize_drawing(const Drawing& d);

Drawing load_drawing(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

struct CasingProvenance {
    std::string model;
    std::string objective;
    std::string version;
};

/// One record per crossing (edge ids), the top edge, an optional metrics
/// block mirroring the objective report, and solver provenance.
std::string serialize_casing(const Arrangement& arr, const Casing& c,
                             const ObjectiveReport* report, const CasingProvenance& provenance);

/// Reads a casing document against the arrangement; requires exactly one
/// record per crossing.
Casing parse_casing(const std::string& text, const Arrangement& arr);

} // namespace cased

#endif
