#include "fuzz/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace fuzz {

namespace {

Rational default_bound(const Rational& max_grade, DistanceMode mode) {
    if (max_grade == 0) return 1;
    return mode == DistanceMode::Squared ? max_grade * Rational(81, 64)
                                         : max_grade * Rational(9, 8);
}

}  // namespace

VRSystem vr_build(const PointCloud& cloud, std::optional<Rational> bound, int dim_cap,
                  DistanceMode mode, int precision, Execution exec) {
    const int n = static_cast<int>(cloud.points.size());
    if (dim_cap < 0) throw std::invalid_argument("dim_cap must be nonnegative");
    if (dim_cap > n - 1)
        throw std::invalid_argument("dim_cap " + std::to_string(dim_cap) +
                                    " exceeds the maximum simplex dimension " +
                                    std::to_string(n - 1));

    std::vector<Rational> pair_grades = pairwise_squared_distances(cloud, exec);
    if (mode == DistanceMode::Euclidean)
        for (auto& g : pair_grades) g = rational_from_double(std::sqrt(g.get_d()), precision);

    Rational max_grade = 0;
    for (const auto& g : pair_grades)
        if (g > max_grade) max_grade = g;

    Rational scale = bound ? *bound : default_bound(max_grade, mode);
    if (scale <= 0) throw std::invalid_argument("the scale bound must be positive");
    if (scale <= max_grade)
        throw std::invalid_argument("scale bound " + format_rational(scale) +
                                    " does not strictly exceed the largest pair grade " +
                                    format_rational(max_grade));

    VRSystem v;
    v.cloud = cloud;
    v.mode = mode;
    v.dim_cap = dim_cap;
    v.precision = precision;
    v.scale_bound = scale;
    v.complex.locale = make_interval(0, scale, Orientation::Opposite);
    v.complex.dim_cap = dim_cap;

    for (int k = 0; k <= dim_cap; ++k) {
        const std::vector<Simplex> simplices = level_simplices(n, k);
        const std::vector<Rational> diameters =
            k == 0 ? std::vector<Rational>(simplices.size(), 0)
                   : simplex_diameters(simplices, pair_grades, n, exec);
        FuzzySet level{v.complex.locale, {}};
        for (std::size_t i = 0; i < simplices.size(); ++i)
            level.grades[simplex_id(simplices[i])] = diameters[i];
        v.complex.levels.push_back(std::move(level));
    }
    return v;
}

namespace {

void check_scale(const Rational& s, const VRSystem& v) {
    if (s < 0 || s > v.scale_bound)
        throw std::domain_error("parameter " + format_rational(s) + " outside [0, " +
                                format_rational(v.scale_bound) + "]");
}

}  // namespace

namespace {

// string ids sort "0-10" before "0-2"; keep levels in vertex-tuple order
void sort_levels(SimplexLevels& levels) {
    for (auto& level : levels) std::sort(level.begin(), level.end());
}

}  // namespace

SimplexLevels vr_sections(const VRSystem& v, const Rational& s) {
    check_scale(s, v);
    SimplexLevels out(v.complex.levels.size());
    for (std::size_t k = 0; k < v.complex.levels.size(); ++k)
        for (const auto& [id, grade] : v.complex.levels[k].grades)
            if (grade <= s) out[k].push_back(parse_simplex_id(id));
    sort_levels(out);
    return out;
}

SimplexLevels vr_stalk(const VRSystem& v, const std::optional<Rational>& t) {
    SimplexLevels out(v.complex.levels.size());
    if (!t) {
        for (std::size_t k = 0; k < v.complex.levels.size(); ++k)
            for (const auto& [id, _] : v.complex.levels[k].grades)
                out[k].push_back(parse_simplex_id(id));
        sort_levels(out);
        return out;
    }
    check_scale(*t, v);
    if (*t == 0)
        throw std::invalid_argument(
            "stalks are indexed strictly below the top element; t = 0 is the top of the "
            "reversed interval");
    for (std::size_t k = 0; k < v.complex.levels.size(); ++k)
        for (const auto& [id, grade] : v.complex.levels[k].grades)
            if (grade < *t) out[k].push_back(parse_simplex_id(id));
    sort_levels(out);
    return out;
}

namespace {

void check_face_closed(const SimplexLevels& family) {
    for (std::size_t k = 1; k < family.size(); ++k) {
        std::set<Simplex> below(family[k - 1].begin(), family[k - 1].end());
        for (const Simplex& s : family[k])
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                if (!below.count(face))
                    throw std::invalid_argument("family not closed under faces: " +
                                                simplex_id(s) + " lacks " + simplex_id(face));
            }
    }
}

}  // namespace

std::vector<std::vector<int>> connected_components(const SimplexLevels& family) {
    check_face_closed(family);
    if (family.empty()) return {};

    std::vector<int> vertices;
    for (const Simplex& s : family[0]) vertices.push_back(s.at(0));
    std::sort(vertices.begin(), vertices.end());

    std::map<int, int> leader;
    for (int v : vertices) leader[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (leader[v] != v) v = leader[v] = leader[leader[v]];
        return v;
    };
    if (family.size() > 1)
        for (const Simplex& e : family[1]) {
            int a = find(e[0]), b = find(e[1]);
            if (a != b) leader[std::max(a, b)] = std::min(a, b);
        }

    std::map<int, std::vector<int>> classes;
    for (int v : vertices) classes[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [_, members] : classes) out.push_back(std::move(members));
    return out;
}

CompareReport vr_compare(const VRSystem& sub, const VRSystem& super) {
    if (sub.mode != super.mode || !(sub.complex.locale == super.complex.locale) ||
        sub.dim_cap != super.dim_cap)
        throw std::invalid_argument("systems must share the scale bound, mode and dim_cap");

    // Identify each point of the smaller cloud inside the larger one.
    std::map<int, int> vertex_map;
    for (std::size_t i = 0; i < sub.cloud.points.size(); ++i) {
        auto it = std::find(super.cloud.points.begin(), super.cloud.points.end(),
                            sub.cloud.points[i]);
        if (it == super.cloud.points.end())
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " of the first system is not a point of the second");
        vertex_map[static_cast<int>(i)] =
            static_cast<int>(std::distance(super.cloud.points.begin(), it));
    }

    CompareReport report;
    for (int k = 0; k <= sub.dim_cap; ++k) {
        const MonoPresheaf source = level_cut(sub.complex.levels[k]);
        const MonoPresheaf target = level_cut(super.complex.levels[k]);
        std::map<std::string, std::string> simplex_map;
        for (const auto& [id, _] : source.elements) {
            Simplex mapped;
            for (int vertex : parse_simplex_id(id)) mapped.push_back(vertex_map.at(vertex));
            std::sort(mapped.begin(), mapped.end());
            simplex_map[id] = simplex_id(mapped);
        }
        const StalkVerdict verdict = stalkwise_check(simplex_map, source, target, MapMode::Iso);
        if (!verdict.ok) {
            report.ok = false;
            report.level = k;
            report.point = verdict.point;
            report.element = verdict.element;
            report.reason = verdict.reason;
            return report;
        }
    }
    return report;
}

SimplicialComplex make_complex(SimplexLevels levels) {
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::set<Simplex> seen;
        for (const Simplex& s : levels[k]) {
            if (s.size() != k + 1)
                throw std::invalid_argument("tuple " + simplex_id(s) + " is not a " +
                                            std::to_string(k) + "-simplex");
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("tuple " + simplex_id(s) +
                                            " is not strictly increasing");
            if (!seen.insert(s).second)
                throw std::invalid_argument("duplicate simplex " + simplex_id(s));
        }
        std::sort(levels[k].begin(), levels[k].end());
    }
    check_face_closed(levels);
    return SimplicialComplex{std::move(levels)};
}

SimplicialFuzzySet graded_complex(const LocaleElement& s, const SimplicialComplex& k,
                                  const IntervalLocale& L, int dim_cap) {
    if (s.is_bottom()) throw std::invalid_argument("grade must lie in the interval");
    if (dim_cap < 0) throw std::invalid_argument("dim_cap must be nonnegative");
    SimplicialFuzzySet z;
    z.locale = L;
    z.dim_cap = dim_cap;
    const std::size_t depth =
        std::min<std::size_t>(k.levels.size(), static_cast<std::size_t>(dim_cap) + 1);
    for (std::size_t level = 0; level < depth; ++level) {
        FuzzySet f{L, {}};
        for (const Simplex& simplex : k.levels[level]) f.grades[simplex_id(simplex)] = s.rational();
        z.levels.push_back(std::move(f));
    }
    return z;
}

SimplicialReport simplicial_validate(const SimplicialFuzzySet& z) {
    SimplicialReport report;
    auto blame = [&report](std::string text) {
        report.ok = false;
        report.violations.push_back(std::move(text));
    };

    for (std::size_t k = 0; k < z.levels.size(); ++k) {
        if (!(z.levels[k].locale == z.locale)) blame("level " + std::to_string(k) + ": stray locale");
        for (const auto& [id, grade] : z.levels[k].grades) {
            const Simplex s = parse_simplex_id(id);
            if (s.size() != k + 1 || !std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end()) {
                blame("level " + std::to_string(k) + ": malformed simplex " + id);
                continue;
            }
            if (k == 0) continue;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = z.levels[k - 1].grades.find(simplex_id(face));
                if (it == z.levels[k - 1].grades.end()) {
                    blame("missing face " + simplex_id(face) + " of " + id);
                    continue;
                }
                if (!leq(LocaleElement::value(grade), LocaleElement::value(it->second), z.locale))
                    blame("face " + simplex_id(face) + " of " + id +
                          " does not dominate its grade");
            }
        }
    }
    return report;
}

namespace {

std::vector<int> complex_vertices(const SimplicialComplex& k) {
    std::vector<int> verts;
    if (!k.levels.empty())
        for (const Simplex& s : k.levels[0]) verts.push_back(s.at(0));
    std::sort(verts.begin(), verts.end());
    return verts;
}

// Shared enumeration: all vertex assignments that are weakly monotone on
// every simplex and whose simplex supports pass the acceptor.
std::vector<std::map<int, int>> enumerate_maps(
    const SimplicialComplex& k, const std::vector<int>& target_vertices,
    const std::function<bool(const Simplex&)>& support_ok) {
    std::vector<std::map<int, int>> out;
    const std::vector<int> domain = complex_vertices(k);
    if (domain.empty()) {
        out.push_back({});
        return out;
    }
    if (target_vertices.empty()) return out;

    std::vector<std::size_t> pick(domain.size(), 0);
    while (true) {
        std::map<int, int> f;
        for (std::size_t i = 0; i < domain.size(); ++i) f[domain[i]] = target_vertices[pick[i]];

        bool ok = true;
        for (std::size_t level = 0; ok && level < k.levels.size(); ++level)
            for (const Simplex& s : k.levels[level]) {
                Simplex image;
                for (int v : s) image.push_back(f.at(v));
                if (!std::is_sorted(image.begin(), image.end())) {
                    ok = false;
                    break;
                }
                Simplex support = image;
                support.erase(std::unique(support.begin(), support.end()), support.end());
                if (!support_ok(support)) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(std::move(f));

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < target_vertices.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace

std::vector<std::map<int, int>> simplicial_hom(const SimplicialComplex& k,
                                               const SimplicialComplex& z) {
    std::set<Simplex> present;
    for (const auto& level : z.levels) present.insert(level.begin(), level.end());
    return enumerate_maps(k, complex_vertices(z), [&present](const Simplex& support) {
        return present.count(support) > 0;
    });
}

std::vector<std::map<int, int>> graded_hom(const LocaleElement& s, const SimplicialComplex& k,
                                           const VRSystem& v) {
    if (s.is_bottom() || s.rational() < 0 || s.rational() > v.scale_bound)
        throw std::domain_error("grade outside the system's interval");
    std::vector<int> target;
    for (std::size_t i = 0; i < v.cloud.points.size(); ++i) target.push_back(static_cast<int>(i));

    const IntervalLocale& L = v.complex.locale;
    return enumerate_maps(k, target, [&](const Simplex& support) {
        if (support.size() > v.complex.levels.size()) return false;
        const FuzzySet& level = v.complex.levels[support.size() - 1];
        const Rational& grade = level.grades.at(simplex_id(support));
        return leq(s, LocaleElement::value(grade), L);
    });
}

}  // namespace fuzz
