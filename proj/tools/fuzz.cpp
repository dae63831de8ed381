// Batch front end: point clouds in, exact sections/stalks/verdicts out.
// Exit codes: 0 ok, 1 input error, 2 check failed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fuzz/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

struct Output {
    std::string path;  // empty = stdout

    void emit(const fuzz::io::json& j) const { emit_text(j.dump(2) + "\n"); }
    void emit_text(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            fuzz::io::save_text_file(path, text);
    }
};

fuzz::io::json inline_or_file(const std::string& source) {
    if (!source.empty() && source.front() == '{') return fuzz::io::json::parse(source);
    return fuzz::io::load_json_file(source);
}

fuzz::PointCloud load_points(const std::string& path, int precision) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return fuzz::io::point_cloud_from_csv(text.str());
    }
    return fuzz::io::point_cloud_from_json(fuzz::io::load_json_file(path), precision);
}

struct VrOptions {
    std::string points_path;
    std::string system_path;
    std::string bound;
    int dim_cap = 2;
    std::string mode = "squared";
    int precision = 12;
    bool serial = false;

    fuzz::Execution exec() const {
        return serial ? fuzz::Execution::Serial : fuzz::Execution::Parallel;
    }

    fuzz::VRSystem load() const {
        if (!system_path.empty())
            return fuzz::io::vr_system_from_json(fuzz::io::load_json_file(system_path), exec());
        if (points_path.empty())
            throw std::invalid_argument("provide --points or --system");
        std::optional<fuzz::Rational> scale;
        if (!bound.empty()) scale = fuzz::parse_rational(bound);
        return fuzz::vr_build(load_points(points_path, precision), scale, dim_cap,
                              mode == "euclidean" ? fuzz::DistanceMode::Euclidean
                                                  : fuzz::DistanceMode::Squared,
                              precision, exec());
    }
};

void add_vr_source_flags(CLI::App* cmd, VrOptions& opt) {
    cmd->add_option("--points", opt.points_path, "point cloud file (.csv or JSON)");
    cmd->add_option("--system", opt.system_path, "previously built system (JSON)");
    cmd->add_option("--R", opt.bound, "scale bound, in mode units (default: 9/8 of the max)");
    cmd->add_option("--dim-cap", opt.dim_cap, "largest simplex dimension kept");
    cmd->add_option("--mode", opt.mode, "squared | euclidean")
        ->check(CLI::IsMember({"squared", "euclidean"}));
    cmd->add_option("--precision", opt.precision, "decimal digits kept in euclidean mode");
    cmd->add_flag("--serial", opt.serial, "run the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fuzzy sets, sheaves and Vietoris-Rips systems over intervals"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Output out;
    app.add_option("--out", out.path, "write the result here instead of stdout");

    // ---- vr ----------------------------------------------------------
    CLI::App* vr = app.add_subcommand("vr", "Vietoris-Rips systems from point clouds");
    vr->require_subcommand(1);

    VrOptions vr_opt;
    std::string at;
    std::string other_path;
    std::string format = "json";
    bool use_stalk = false;

    CLI::App* vr_build_cmd = vr->add_subcommand("build", "grade every simplex by its diameter");
    add_vr_source_flags(vr_build_cmd, vr_opt);

    CLI::App* vr_sections_cmd = vr->add_subcommand("sections", "simplices of diameter <= s");
    add_vr_source_flags(vr_sections_cmd, vr_opt);
    vr_sections_cmd->add_option("--at", at, "threshold, in mode units")->required();
    vr_sections_cmd->add_option("--format", format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* vr_stalk_cmd = vr->add_subcommand("stalk", "simplices of diameter < t");
    add_vr_source_flags(vr_stalk_cmd, vr_opt);
    vr_stalk_cmd->add_option("--at", at, "point in (0, R], or 'bottom'")->required();
    vr_stalk_cmd->add_option("--format", format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* vr_pi0_cmd = vr->add_subcommand("pi0", "connected components of the 1-skeleton");
    add_vr_source_flags(vr_pi0_cmd, vr_opt);
    vr_pi0_cmd->add_option("--at", at, "threshold (or stalk point with --stalk)")->required();
    vr_pi0_cmd->add_flag("--stalk", use_stalk, "take the stalk instead of the sections");

    CLI::App* vr_compare_cmd =
        vr->add_subcommand("compare", "stalkwise comparison against a larger system");
    add_vr_source_flags(vr_compare_cmd, vr_opt);
    vr_compare_cmd->add_option("--other", other_path, "the larger system or its points")
        ->required();

    // ---- fuzzy -------------------------------------------------------
    CLI::App* fuzzy = app.add_subcommand("fuzzy", "graded sets and their (co)limits");
    fuzzy->require_subcommand(1);

    std::string diagram_path, fuzzy_path, first_path, second_path, ambient_path, locale_arg;
    bool meet_instead = false;

    CLI::App* fuzzy_limit_cmd = fuzzy->add_subcommand("limit", "compatible families, meet grades");
    fuzzy_limit_cmd->add_option("--diagram", diagram_path, "diagram file")->required();
    fuzzy_limit_cmd->add_option("--locale", locale_arg, "locale file or inline JSON");

    CLI::App* fuzzy_colimit_cmd = fuzzy->add_subcommand("colimit", "glued classes, join grades");
    fuzzy_colimit_cmd->add_option("--diagram", diagram_path, "diagram file")->required();
    fuzzy_colimit_cmd->add_option("--locale", locale_arg, "locale file or inline JSON");

    CLI::App* fuzzy_validate_cmd =
        fuzzy->add_subcommand("validate", "check a fuzzy set or a whole diagram");
    fuzzy_validate_cmd->add_option("--fuzzy", fuzzy_path, "fuzzy set file");
    fuzzy_validate_cmd->add_option("--diagram", diagram_path, "diagram file");
    fuzzy_validate_cmd->add_option("--locale", locale_arg, "locale file or inline JSON");

    CLI::App* fuzzy_union_cmd =
        fuzzy->add_subcommand("union", "union (or meet) of two subobjects");
    fuzzy_union_cmd->add_option("--first", first_path, "subobject file")->required();
    fuzzy_union_cmd->add_option("--second", second_path, "subobject file")->required();
    fuzzy_union_cmd->add_option("--ambient", ambient_path, "ambient fuzzy set file")->required();
    fuzzy_union_cmd->add_flag("--meet", meet_instead, "intersect instead of uniting");

    // ---- sheaf -------------------------------------------------------
    CLI::App* sheaf = app.add_subcommand("sheaf", "presheaves of monomorphisms on the interval");
    sheaf->require_subcommand(1);

    std::string presheaf_path, step_path, source_path, target_path, map_path, mode_name = "iso";

    CLI::App* sheaf_levelcut_cmd = sheaf->add_subcommand("levelcut", "fuzzy set -> sheaf");
    sheaf_levelcut_cmd->add_option("--fuzzy", fuzzy_path, "fuzzy set file")->required();

    CLI::App* sheaf_psi_cmd = sheaf->add_subcommand("psi", "sheaf -> fuzzy set");
    sheaf_psi_cmd->add_option("--presheaf", presheaf_path, "presheaf file")->required();

    CLI::App* sheaf_image_cmd =
        sheaf->add_subcommand("image", "images of a step presheaf in its generic fibre");
    sheaf_image_cmd->add_option("--step", step_path, "step presheaf file")->required();

    CLI::App* sheaf_sheafify_cmd = sheaf->add_subcommand("sheafify", "attain every supremum");
    sheaf_sheafify_cmd->add_option("--presheaf", presheaf_path, "presheaf file")->required();

    CLI::App* sheaf_roundtrip_cmd =
        sheaf->add_subcommand("roundtrip", "check both equivalence identities exactly");
    sheaf_roundtrip_cmd->add_option("--fuzzy", fuzzy_path, "fuzzy set file")->required();

    CLI::App* sheaf_stalk_cmd = sheaf->add_subcommand("stalk", "sections just above a point");
    sheaf_stalk_cmd->add_option("--presheaf", presheaf_path, "presheaf file")->required();
    sheaf_stalk_cmd->add_option("--at", at, "interval value below top, or 'bottom'")->required();

    CLI::App* sheaf_stalkwise_cmd =
        sheaf->add_subcommand("stalkwise", "mono/epi/iso verdict on every stalk");
    sheaf_stalkwise_cmd->add_option("--source", source_path, "source presheaf file")->required();
    sheaf_stalkwise_cmd->add_option("--target", target_path, "target presheaf file")->required();
    sheaf_stalkwise_cmd->add_option("--map", map_path, "generic-fibre map file")->required();
    sheaf_stalkwise_cmd->add_option("--mode", mode_name, "mono | epi | iso")
        ->check(CLI::IsMember({"mono", "epi", "iso"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        using fuzz::io::json;
        using fuzz::io::to_json;

        // vr
        if (vr_build_cmd->parsed()) {
            out.emit(to_json(vr_opt.load()));
            return kExitOk;
        }
        if (vr_sections_cmd->parsed()) {
            const fuzz::VRSystem v = vr_opt.load();
            const fuzz::SimplexLevels levels = vr_sections(v, fuzz::parse_rational(at));
            out.emit_text(format == "dot" ? fuzz::io::to_dot(levels)
                                          : fuzz::io::levels_to_json(levels).dump(2) + "\n");
            return kExitOk;
        }
        if (vr_stalk_cmd->parsed()) {
            const fuzz::VRSystem v = vr_opt.load();
            std::optional<fuzz::Rational> t;
            if (at != "bottom") t = fuzz::parse_rational(at);
            const fuzz::SimplexLevels levels = vr_stalk(v, t);
            out.emit_text(format == "dot" ? fuzz::io::to_dot(levels)
                                          : fuzz::io::levels_to_json(levels).dump(2) + "\n");
            return kExitOk;
        }
        if (vr_pi0_cmd->parsed()) {
            const fuzz::VRSystem v = vr_opt.load();
            fuzz::SimplexLevels levels;
            if (use_stalk) {
                std::optional<fuzz::Rational> t;
                if (at != "bottom") t = fuzz::parse_rational(at);
                levels = vr_stalk(v, t);
            } else {
                levels = vr_sections(v, fuzz::parse_rational(at));
            }
            const auto components = fuzz::connected_components(levels);
            json parts = json::array();
            for (const auto& part : components) parts.push_back(part);
            out.emit(json{{"count", components.size()}, {"components", parts}});
            return kExitOk;
        }
        if (vr_compare_cmd->parsed()) {
            const fuzz::VRSystem sub = vr_opt.load();
            fuzz::VRSystem super = [&] {
                if (other_path.size() > 4 && other_path.substr(other_path.size() - 4) == ".csv")
                    return fuzz::vr_build(load_points(other_path, sub.precision),
                                          sub.scale_bound, sub.dim_cap, sub.mode, sub.precision,
                                          vr_opt.exec());
                const json other_json = fuzz::io::load_json_file(other_path);
                if (other_json.contains("mode"))
                    return fuzz::io::vr_system_from_json(other_json, vr_opt.exec());
                return fuzz::vr_build(fuzz::io::point_cloud_from_json(other_json, sub.precision),
                                      sub.scale_bound, sub.dim_cap, sub.mode, sub.precision,
                                      vr_opt.exec());
            }();
            const fuzz::CompareReport report = vr_compare(sub, super);
            out.emit(to_json(report));
            return report.ok ? kExitOk : kExitCheckFailed;
        }

        // fuzzy
        if (fuzzy_limit_cmd->parsed() || fuzzy_colimit_cmd->parsed()) {
            json dj = fuzz::io::load_json_file(diagram_path);
            if (!locale_arg.empty()) dj["locale"] = inline_or_file(locale_arg);
            const fuzz::Diagram d = fuzz::io::diagram_from_json(dj);
            json legs = json::object();
            fuzz::FuzzySet object;
            if (fuzzy_limit_cmd->parsed()) {
                fuzz::LimitResult r = fuzz::limit(d);
                object = r.object;
                for (const auto& [label, leg] : r.legs) {
                    json m = json::object();
                    for (const auto& [x, y] : leg.map) m[x] = y;
                    legs[label] = m;
                }
            } else {
                fuzz::ColimitResult r = fuzz::colimit(d);
                object = r.object;
                for (const auto& [label, leg] : r.legs) {
                    json m = json::object();
                    for (const auto& [x, y] : leg.map) m[x] = y;
                    legs[label] = m;
                }
            }
            out.emit(json{{"object", to_json(object)}, {"legs", legs}});
            return kExitOk;
        }
        if (fuzzy_validate_cmd->parsed()) {
            if (fuzzy_path.empty() == diagram_path.empty())
                throw std::invalid_argument("provide exactly one of --fuzzy / --diagram");
            if (!fuzzy_path.empty()) {
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(fuzzy_path));
                out.emit(json{{"ok", true}});
                return kExitOk;
            }
            json dj = fuzz::io::load_json_file(diagram_path);
            if (!locale_arg.empty()) dj["locale"] = inline_or_file(locale_arg);
            try {
                fuzz::io::diagram_from_json(dj);
            } catch (const std::invalid_argument& e) {
                out.emit(json{{"ok", false}, {"error", e.what()}});
                return kExitCheckFailed;
            }
            out.emit(json{{"ok", true}});
            return kExitOk;
        }
        if (fuzzy_union_cmd->parsed()) {
            const fuzz::FuzzySet a =
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(first_path));
            const fuzz::FuzzySet b =
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(second_path));
            const fuzz::FuzzySet ambient =
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(ambient_path));
            out.emit(to_json(meet_instead ? fuzz::subobject_meet(a, b, ambient)
                                          : fuzz::subobject_union(a, b, ambient)));
            return kExitOk;
        }

        // sheaf
        if (sheaf_levelcut_cmd->parsed()) {
            out.emit(to_json(fuzz::level_cut(
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(fuzzy_path)))));
            return kExitOk;
        }
        if (sheaf_psi_cmd->parsed()) {
            const fuzz::MonoPresheaf F =
                fuzz::io::mono_presheaf_from_json(fuzz::io::load_json_file(presheaf_path));
            out.emit(to_json(fuzz::to_fuzzy_set(F)));
            return kExitOk;
        }
        if (sheaf_image_cmd->parsed()) {
            out.emit(to_json(fuzz::image_presheaf(
                fuzz::io::step_presheaf_from_json(fuzz::io::load_json_file(step_path)))));
            return kExitOk;
        }
        if (sheaf_sheafify_cmd->parsed()) {
            out.emit(to_json(fuzz::sheafify(
                fuzz::io::mono_presheaf_from_json(fuzz::io::load_json_file(presheaf_path)))));
            return kExitOk;
        }
        if (sheaf_roundtrip_cmd->parsed()) {
            const fuzz::FuzzySet f =
                fuzz::io::fuzzy_set_from_json(fuzz::io::load_json_file(fuzzy_path));
            const fuzz::MonoPresheaf F = fuzz::level_cut(f);
            bool ok = fuzz::to_fuzzy_set(F) == f;
            for (const fuzz::LocaleElement& a : fuzz::sample_points({&F})) {
                std::set<std::string> preimage;
                for (const auto& [id, grade] : f.grades)
                    if (fuzz::leq(a, fuzz::LocaleElement::value(grade), f.locale))
                        preimage.insert(id);
                ok = ok && fuzz::sections(F, a) == preimage;
            }
            out.emit(json{{"ok", ok}});
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (sheaf_stalk_cmd->parsed()) {
            const fuzz::MonoPresheaf F =
                fuzz::io::mono_presheaf_from_json(fuzz::io::load_json_file(presheaf_path));
            const fuzz::StalkPoint p =
                at == "bottom"
                    ? fuzz::StalkPoint::bottom()
                    : fuzz::StalkPoint::at(fuzz::LocaleElement::value(fuzz::parse_rational(at)),
                                           F.locale);
            json elems = json::array();
            for (const std::string& id : fuzz::stalk(F, p)) elems.push_back(id);
            out.emit(json{{"point", fuzz::format_stalk_point(p)}, {"elements", elems}});
            return kExitOk;
        }
        if (sheaf_stalkwise_cmd->parsed()) {
            const fuzz::MonoPresheaf E =
                fuzz::io::mono_presheaf_from_json(fuzz::io::load_json_file(source_path));
            const fuzz::MonoPresheaf F =
                fuzz::io::mono_presheaf_from_json(fuzz::io::load_json_file(target_path));
            json mj = fuzz::io::load_json_file(map_path);
            if (mj.contains("map")) mj = mj["map"];
            std::map<std::string, std::string> m;
            for (const auto& [x, y] : mj.items()) m[x] = y.get<std::string>();
            const fuzz::MapMode mode = mode_name == "mono"  ? fuzz::MapMode::Mono
                                       : mode_name == "epi" ? fuzz::MapMode::Epi
                                                            : fuzz::MapMode::Iso;
            const fuzz::StalkVerdict verdict = fuzz::stalkwise_check(m, E, F, mode);
            out.emit(to_json(verdict));
            return verdict.ok ? kExitOk : kExitCheckFailed;
        }

        throw std::invalid_argument("no subcommand handled");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
