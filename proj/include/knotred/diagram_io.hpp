#pragma once

#include <string>

#include "json.hpp"
#include "knotred/diagram.hpp"

namespace knotred {

using Json = nlohmann::ordered_json;

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

std::string export_json(const Diagram& d);
Diagram import_json(const std::string& text);

// One `X(a,b,c,d)` line per crossing; arc labels are 1-based and listed
// counterclockwise from the incoming under arc. Crossing-free components
// are written as `Loop(k)` lines with their 1-based component index.
std::string export_pd(const Diagram& d);

// One line per component: `O<k><sign>` / `U<k><sign>` per passage, where k
// is the 1-based crossing index and sign is the crossing sign.
std::string export_gauss(const Diagram& d);

}  // namespace knotred
