#include "fuzz/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fuzz::io {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return *it;
}

Rational rational_field(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    throw std::invalid_argument("rationals must be strings like \"0.3\" or \"3/10\"");
}

}  // namespace

json to_json(const IntervalLocale& L) {
    return json{{"lo", format_rational(L.lo)},
                {"hi", format_rational(L.hi)},
                {"orientation", L.orientation == Orientation::Standard ? "standard" : "opposite"}};
}

IntervalLocale locale_from_json(const json& j) {
    const std::string orientation = field(j, "orientation").get<std::string>();
    if (orientation != "standard" && orientation != "opposite")
        throw std::invalid_argument("orientation must be \"standard\" or \"opposite\"");
    return make_interval(rational_field(field(j, "lo")), rational_field(field(j, "hi")),
                         orientation == "standard" ? Orientation::Standard
                                                   : Orientation::Opposite);
}

json to_json(const FuzzySet& f) {
    json elements = json::array();
    for (const auto& [id, grade] : f.grades)
        elements.push_back(json{{"id", id}, {"grade", format_rational(grade)}});
    return json{{"locale", to_json(f.locale)}, {"elements", elements}};
}

FuzzySet fuzzy_set_from_json(const json& j) {
    const IntervalLocale L = locale_from_json(field(j, "locale"));
    std::vector<std::pair<std::string, Rational>> elems;
    for (const json& e : field(j, "elements"))
        elems.emplace_back(field(e, "id").get<std::string>(), rational_field(field(e, "grade")));
    return make_fuzzy_set(L, elems);
}

json to_json(const MonoPresheaf& F) {
    json elements = json::array();
    for (const auto& [id, entry] : F.elements)
        elements.push_back(json{{"id", id},
                                {"grade", format_rational(entry.grade)},
                                {"attained", entry.attained}});
    return json{{"locale", to_json(F.locale)}, {"elements", elements}};
}

MonoPresheaf mono_presheaf_from_json(const json& j) {
    const IntervalLocale L = locale_from_json(field(j, "locale"));
    std::vector<std::tuple<std::string, Rational, bool>> elems;
    for (const json& e : field(j, "elements")) {
        bool attained = true;
        if (e.contains("attained")) attained = e["attained"].get<bool>();
        elems.emplace_back(field(e, "id").get<std::string>(), rational_field(field(e, "grade")),
                           attained);
    }
    return make_mono_presheaf(L, elems);
}

json to_json(const StepPresheaf& E) {
    json generic = json::array();
    for (const auto& id : E.levels[0]) generic.push_back(id);
    json steps = json::array();
    for (std::size_t k = 0; k < E.cuts.size(); ++k) {
        json set = json::array();
        for (const auto& id : E.levels[k + 1]) set.push_back(id);
        json rho = json::object();
        for (const auto& [x, y] : E.maps[k]) rho[x] = y;
        steps.push_back(json{{"cut", format_rational(E.cuts[k])}, {"set", set}, {"rho", rho}});
    }
    return json{{"locale", to_json(E.locale)}, {"generic", generic}, {"steps", steps}};
}

StepPresheaf step_presheaf_from_json(const json& j) {
    const IntervalLocale L = locale_from_json(field(j, "locale"));
    std::vector<Rational> cuts;
    std::vector<std::set<std::string>> levels;
    std::vector<std::map<std::string, std::string>> maps;

    std::set<std::string> generic;
    for (const json& id : field(j, "generic")) generic.insert(id.get<std::string>());
    levels.push_back(std::move(generic));

    for (const json& step : field(j, "steps")) {
        cuts.push_back(rational_field(field(step, "cut")));
        std::set<std::string> level;
        for (const json& id : field(step, "set")) level.insert(id.get<std::string>());
        levels.push_back(std::move(level));
        std::map<std::string, std::string> rho;
        for (const auto& [x, y] : field(step, "rho").items()) rho[x] = y.get<std::string>();
        maps.push_back(std::move(rho));
    }
    return make_step_presheaf(L, std::move(cuts), std::move(levels), std::move(maps));
}

json to_json(const Diagram& d) {
    json nodes = json::object();
    for (const auto& [label, node] : d.nodes) nodes[label] = to_json(node);
    json arrows = json::array();
    for (const auto& arrow : d.arrows) {
        json map = json::object();
        for (const auto& [x, y] : arrow.map) map[x] = y;
        arrows.push_back(json{{"from", arrow.from}, {"to", arrow.to}, {"map", map}});
    }
    json out{{"nodes", nodes}, {"arrows", arrows}};
    if (d.locale) out["locale"] = to_json(*d.locale);
    return out;
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    if (j.contains("locale")) d.locale = locale_from_json(j["locale"]);
    for (const auto& [label, body] : field(j, "nodes").items()) {
        json node = body;
        if (!node.contains("locale")) {
            if (!d.locale)
                throw std::invalid_argument("node '" + label +
                                            "' has no locale and the diagram has none either");
            node["locale"] = to_json(*d.locale);
        }
        d.nodes[label] = fuzzy_set_from_json(node);
    }
    if (j.contains("arrows"))
        for (const json& a : j["arrows"]) {
            Diagram::Arrow arrow;
            arrow.from = field(a, "from").get<std::string>();
            arrow.to = field(a, "to").get<std::string>();
            for (const auto& [x, y] : field(a, "map").items()) arrow.map[x] = y.get<std::string>();
            d.arrows.push_back(std::move(arrow));
        }
    validate_diagram(d);
    return d;
}

json to_json(const PointCloud& cloud) {
    json points = json::array();
    for (const auto& p : cloud.points) {
        json coords = json::array();
        for (const auto& c : p) coords.push_back(format_rational(c));
        points.push_back(coords);
    }
    return json{{"points", points}};
}

PointCloud point_cloud_from_json(const json& j, int precision) {
    const json& points = j.is_array() ? j : field(j, "points");
    std::vector<std::vector<Rational>> rows;
    for (const json& p : points) {
        std::vector<Rational> row;
        for (const json& c : p) {
            if (c.is_string())
                row.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer())
                row.push_back(Rational(mpz_class(std::to_string(c.get<long long>()))));
            else if (c.is_number())
                row.push_back(rational_from_double(c.get<double>(), precision));
            else
                throw std::invalid_argument("coordinates must be numbers or rational strings");
        }
        rows.push_back(std::move(row));
    }
    return make_point_cloud(std::move(rows));
}

PointCloud point_cloud_from_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                row.push_back(parse_rational(cell));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return make_point_cloud(std::move(rows));
}

json to_json(const VRSystem& v) {
    json levels = json::array();
    for (std::size_t k = 0; k < v.complex.levels.size(); ++k) {
        std::vector<std::pair<Simplex, std::string>> ordered;
        for (const auto& [id, grade] : v.complex.levels[k].grades)
            ordered.emplace_back(parse_simplex_id(id), format_rational(grade));
        std::sort(ordered.begin(), ordered.end());
        json simplices = json::array();
        for (const auto& [simplex, grade] : ordered) {
            json vertices = json::array();
            for (int vertex : simplex) vertices.push_back(vertex);
            simplices.push_back(json{{"vertices", vertices}, {"grade", grade}});
        }
        levels.push_back(json{{"k", k}, {"simplices", simplices}});
    }
    return json{{"mode", v.mode == DistanceMode::Squared ? "squared" : "euclidean"},
                {"R", format_rational(v.scale_bound)},
                {"dim_cap", v.dim_cap},
                {"precision", v.precision},
                {"locale", to_json(v.complex.locale)},
                {"points", to_json(v.cloud)["points"]},
                {"levels", levels}};
}

VRSystem vr_system_from_json(const json& j, Execution exec) {
    const std::string mode_name = field(j, "mode").get<std::string>();
    if (mode_name != "squared" && mode_name != "euclidean")
        throw std::invalid_argument("mode must be \"squared\" or \"euclidean\"");
    const DistanceMode mode =
        mode_name == "squared" ? DistanceMode::Squared : DistanceMode::Euclidean;
    const int precision = j.contains("precision") ? j["precision"].get<int>() : 12;
    const PointCloud cloud = point_cloud_from_json(field(j, "points"), precision);
    return vr_build(cloud, rational_field(field(j, "R")), field(j, "dim_cap").get<int>(), mode,
                    precision, exec);
}

json levels_to_json(const SimplexLevels& levels) {
    json out = json::array();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        json simplices = json::array();
        for (const Simplex& s : levels[k]) {
            json vertices = json::array();
            for (int vertex : s) vertices.push_back(vertex);
            simplices.push_back(json{{"vertices", vertices}});
        }
        out.push_back(json{{"k", k}, {"count", levels[k].size()}, {"simplices", simplices}});
    }
    return json{{"levels", out}};
}

namespace {

const char* mode_name(MapMode mode) {
    switch (mode) {
        case MapMode::Mono: return "mono";
        case MapMode::Epi: return "epi";
        default: return "iso";
    }
}

}  // namespace

json to_json(const StalkVerdict& verdict) {
    json out{{"mode", mode_name(verdict.mode)}, {"ok", verdict.ok}};
    if (!verdict.ok)
        out["witness"] = json{{"point", format_stalk_point(*verdict.point)},
                              {"element", verdict.element},
                              {"reason", verdict.reason}};
    return out;
}

json to_json(const CompareReport& report) {
    json out{{"ok", report.ok}};
    if (!report.ok)
        out["witness"] = json{{"level", report.level},
                              {"point", format_stalk_point(*report.point)},
                              {"element", report.element},
                              {"reason", report.reason}};
    return out;
}

json to_json(const MorphismReport& report) {
    return json{{"ok", report.ok}, {"violations", report.violations}};
}

json to_json(const SimplicialReport& report) {
    return json{{"ok", report.ok}, {"violations", report.violations}};
}

std::string to_dot(const SimplexLevels& family) {
    std::ostringstream out;
    out << "graph skeleton {\n";
    if (!family.empty())
        for (const Simplex& v : family[0]) out << "  v" << v[0] << ";\n";
    if (family.size() > 1)
        for (const Simplex& e : family[1]) out << "  v" << e[0] << " -- v" << e[1] << ";\n";
    out << "}\n";
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
    return j;
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write to '" + path + "'");
    out << text;
}

}  // namespace fuzz::io
