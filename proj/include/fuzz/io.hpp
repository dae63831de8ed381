#ifndef FUZZ_IO_HPP
#define FUZZ_IO_HPP

#include <json.hpp>

#include "fuzz/simplicial.hpp"

namespace fuzz::io {

using nlohmann::json;

json to_json(const IntervalLocale& L);
IntervalLocale locale_from_json(const json& j);

json to_json(const FuzzySet& f);
FuzzySet fuzzy_set_from_json(const json& j);

json to_json(const MonoPresheaf& F);
MonoPresheaf mono_presheaf_from_json(const json& j);

json to_json(const StepPresheaf& E);
StepPresheaf step_presheaf_from_json(const json& j);

// Node bodies may omit "locale" when the diagram carries a top-level one.
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json to_json(const PointCloud& cloud);
PointCloud point_cloud_from_json(const json& j, int precision = 12);
// One point per line, comma separated, '#' comments allowed. Entries are
// rational literals and parse exactly.
PointCloud point_cloud_from_csv(const std::string& text);

json to_json(const VRSystem& v);
// Rebuilds the system from its recorded metadata; grades are deterministic.
VRSystem vr_system_from_json(const json& j, Execution exec = Execution::Parallel);

json levels_to_json(const SimplexLevels& levels);

json to_json(const StalkVerdict& verdict);
json to_json(const CompareReport& report);
json to_json(const MorphismReport& report);
json to_json(const SimplicialReport& report);

// 1-skeleton of a simplex family as an undirected DOT graph.
std::string to_dot(const SimplexLevels& family);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace fuzz::io

#endif
