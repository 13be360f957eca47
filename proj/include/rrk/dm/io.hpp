// JSON files for channels and distributions.
//
// Channel:
//   {"X1": 2, "X2": 2, "Y1": 2, "Y2": 2, "p": [...]}
// with p flattened as ((x1 * |X2| + x2) * |Y1| + y1) * |Y2| + y2.
//
// Distribution:
//   {"roles": [{"name": "U", "size": 2}, {"name": "X1", "size": 2}, ...],
//    "p": [...]}
// with p row-major over the listed roles, last role fastest.
#pragma once

#include <string>

#include "rrk/dm/channel.hpp"

namespace rrk::dm {

DmChannel channel_from_json(const std::string& text);
std::string channel_to_json(const DmChannel& ch);
JointDistribution distribution_from_json(const std::string& text);
std::string distribution_to_json(const JointDistribution& d);

}  // namespace rrk::dm
