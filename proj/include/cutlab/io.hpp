#pragma once

#include "cutlab/accessibility.hpp"
#include "cutlab/cone_off.hpp"
#include "cutlab/structure_tree.hpp"

#include <json.hpp>

#include <string>

namespace cutlab {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

std::string graph_hash(const Graph& g);

json window_to_json(const Window& w);
Window window_from_json(const json& j);

json system_to_json(const PeripheralSystem& sys);
PeripheralSystem system_from_json(const Window& w, const json& j);

json pool_to_json(const Window& w, const CutPool& pool);
std::vector<VertexSet> cuts_from_json(const Window& w, const json& j);

json tree_to_json(const StructureTree& T);
json cone_to_json(const ConeOff& c);
json profile_to_json(const AccessProfile& p);

std::string window_to_dot(const Window& w, const std::string& name = "window");
std::string tree_to_dot(const StructureTree& T);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cutlab
