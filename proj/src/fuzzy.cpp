#include "fuzz/fuzzy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fuzz {

FuzzySet make_fuzzy_set(const IntervalLocale& locale,
                        const std::vector<std::pair<std::string, Rational>>& elems) {
    FuzzySet out{locale, {}};
    for (const auto& [id, grade] : elems) {
        if (grade < locale.lo || grade > locale.hi)
            throw std::domain_error("grade of '" + id + "' outside the interval");
        if (!out.grades.emplace(id, grade).second)
            throw std::invalid_argument("duplicate element id '" + id + "'");
    }
    return out;
}

MorphismReport validate_morphism(const FuzzyMorphism& m) {
    if (!(m.source.locale == m.target.locale))
        throw std::invalid_argument("morphism endpoints live over different locales");
    for (const auto& [x, _] : m.source.grades)
        if (!m.map.count(x)) throw std::invalid_argument("map not defined on '" + x + "'");
    for (const auto& [x, y] : m.map) {
        if (!m.source.grades.count(x))
            throw std::invalid_argument("map defined on stray element '" + x + "'");
        if (!m.target.grades.count(y))
            throw std::invalid_argument("'" + x + "' sent outside the target carrier");
    }
    MorphismReport report;
    const IntervalLocale& L = m.source.locale;
    for (const auto& [x, y] : m.map) {
        if (!leq(LocaleElement::value(m.source.grades.at(x)),
                 LocaleElement::value(m.target.grades.at(y)), L)) {
            report.ok = false;
            report.violations.push_back(x);
        }
    }
    return report;
}

FuzzyMorphism identity_morphism(const FuzzySet& x) {
    FuzzyMorphism m{x, x, {}};
    for (const auto& [id, _] : x.grades) m.map[id] = id;
    return m;
}

FuzzyMorphism compose(const FuzzyMorphism& outer, const FuzzyMorphism& inner) {
    if (!(inner.target == outer.source))
        throw std::invalid_argument("non-composable morphisms");
    FuzzyMorphism m{inner.source, outer.target, {}};
    for (const auto& [x, y] : inner.map) m.map[x] = outer.map.at(y);
    return m;
}

void validate_diagram(const Diagram& d) {
    const IntervalLocale L = diagram_locale(d);
    for (const auto& [label, node] : d.nodes)
        if (!(node.locale == L))
            throw std::invalid_argument("node '" + label + "' uses a different locale");
    for (const auto& arrow : d.arrows) {
        auto src = d.nodes.find(arrow.from);
        auto dst = d.nodes.find(arrow.to);
        if (src == d.nodes.end() || dst == d.nodes.end())
            throw std::invalid_argument("arrow references unknown node '" +
                                        (src == d.nodes.end() ? arrow.from : arrow.to) + "'");
        FuzzyMorphism m{src->second, dst->second, arrow.map};
        MorphismReport report = validate_morphism(m);
        if (!report.ok)
            throw std::invalid_argument("arrow " + arrow.from + " -> " + arrow.to +
                                        " drops the grade at '" + report.violations.front() + "'");
    }
}

IntervalLocale diagram_locale(const Diagram& d) {
    if (!d.nodes.empty()) return d.nodes.begin()->second.locale;
    if (d.locale) return *d.locale;
    throw std::invalid_argument("empty diagram without an explicit locale");
}

LimitResult limit(const Diagram& d) {
    validate_diagram(d);
    const IntervalLocale L = diagram_locale(d);

    if (d.nodes.empty()) {
        // Empty limit: the terminal object, a point graded at the top.
        FuzzySet terminal = make_fuzzy_set(L, {{"*", top(L).rational()}});
        return LimitResult{terminal, {}};
    }

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> carriers;
    for (const auto& [label, node] : d.nodes) {
        labels.push_back(label);
        std::vector<std::string> ids;
        for (const auto& [id, _] : node.grades) ids.push_back(id);
        carriers.push_back(std::move(ids));
    }

    LimitResult result;
    result.object.locale = L;
    std::map<std::string, std::map<std::string, std::string>> leg_maps;

    std::vector<std::size_t> pick(labels.size(), 0);
    const bool any_empty =
        std::any_of(carriers.begin(), carriers.end(), [](const auto& c) { return c.empty(); });
    bool done = any_empty;
    while (!done) {
        std::map<std::string, std::string> family;
        for (std::size_t i = 0; i < labels.size(); ++i) family[labels[i]] = carriers[i][pick[i]];

        bool compatible = true;
        for (const auto& arrow : d.arrows) {
            if (arrow.map.at(family[arrow.from]) != family[arrow.to]) {
                compatible = false;
                break;
            }
        }
        if (compatible) {
            std::string id = "(";
            std::vector<LocaleElement> parts;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (i) id += ",";
                id += family[labels[i]];
                parts.push_back(LocaleElement::value(d.nodes.at(labels[i]).grades.at(family[labels[i]])));
            }
            id += ")";
            if (!result.object.grades.emplace(id, meet(parts, L).rational()).second)
                throw std::invalid_argument("element ids containing ',' make the tuple name " +
                                            id + " ambiguous");
            for (std::size_t i = 0; i < labels.size(); ++i) leg_maps[labels[i]][id] = family[labels[i]];
        }

        // advance the odometer
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < carriers[i].size()) break;
            pick[i] = 0;
        }
        done = i == pick.size();
    }

    for (const auto& label : labels)
        result.legs[label] = FuzzyMorphism{result.object, d.nodes.at(label), leg_maps[label]};
    return result;
}

namespace {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);  // keep the least index as root
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace

ColimitResult colimit(const Diagram& d) {
    validate_diagram(d);
    const IntervalLocale L = diagram_locale(d);

    if (d.nodes.empty()) {
        // Empty colimit: the empty fuzzy set.
        return ColimitResult{FuzzySet{L, {}}, {}};
    }

    // Index the disjoint union; (node, element) pairs in map order, so index
    // order agrees with lexicographic order on the pairs.
    std::vector<std::pair<std::string, std::string>> members;
    std::map<std::string, std::map<std::string, std::size_t>> index;
    for (const auto& [label, node] : d.nodes)
        for (const auto& [id, _] : node.grades) {
            index[label][id] = members.size();
            members.emplace_back(label, id);
        }

    UnionFind uf(members.size());
    for (const auto& arrow : d.arrows)
        for (const auto& [x, y] : arrow.map) uf.unite(index[arrow.from][x], index[arrow.to][y]);

    // Name each class after its least member and take the join of the grades
    // over the whole class.
    std::vector<std::string> class_name(members.size());
    std::map<std::string, std::size_t> name_owner;
    std::map<std::string, std::vector<LocaleElement>> class_grades;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (class_name[root].empty()) {
            class_name[root] = members[root].first + ":" + members[root].second;
            auto [owner, fresh] = name_owner.emplace(class_name[root], root);
            if (!fresh)
                throw std::invalid_argument("node labels containing ':' make the class name " +
                                            class_name[root] + " ambiguous");
        }
        class_name[i] = class_name[root];
        class_grades[class_name[root]].push_back(
            LocaleElement::value(d.nodes.at(members[i].first).grades.at(members[i].second)));
    }

    ColimitResult result;
    result.object.locale = L;
    for (const auto& [name, grades] : class_grades)
        result.object.grades[name] = join(grades, L).rational();

    for (const auto& [label, node] : d.nodes) {
        FuzzyMorphism leg{node, result.object, {}};
        for (const auto& [id, _] : node.grades) leg.map[id] = class_name[index[label][id]];
        result.legs[label] = std::move(leg);
    }
    return result;
}

bool is_subobject(const FuzzySet& a, const FuzzySet& ambient) {
    if (!(a.locale == ambient.locale)) return false;
    for (const auto& [id, grade] : a.grades) {
        auto it = ambient.grades.find(id);
        if (it == ambient.grades.end()) return false;
        if (!leq(LocaleElement::value(grade), LocaleElement::value(it->second), a.locale))
            return false;
    }
    return true;
}

namespace {

void require_subobject(const FuzzySet& a, const FuzzySet& ambient, const char* which) {
    if (!is_subobject(a, ambient))
        throw std::invalid_argument(std::string(which) + " is not a subobject of the ambient set");
}

}  // namespace

FuzzySet subobject_union(const FuzzySet& a, const FuzzySet& b, const FuzzySet& ambient) {
    require_subobject(a, ambient, "first argument");
    require_subobject(b, ambient, "second argument");
    FuzzySet out{ambient.locale, {}};
    for (const auto& [id, grade] : a.grades) out.grades[id] = grade;
    for (const auto& [id, grade] : b.grades) {
        auto it = out.grades.find(id);
        if (it == out.grades.end())
            out.grades[id] = grade;
        else
            it->second = join({LocaleElement::value(it->second), LocaleElement::value(grade)},
                              ambient.locale)
                             .rational();
    }
    return out;
}

FuzzySet subobject_meet(const FuzzySet& a, const FuzzySet& b, const FuzzySet& ambient) {
    require_subobject(a, ambient, "first argument");
    require_subobject(b, ambient, "second argument");
    FuzzySet out{ambient.locale, {}};
    for (const auto& [id, grade] : a.grades) {
        auto it = b.grades.find(id);
        if (it != b.grades.end())
            out.grades[id] = meet({LocaleElement::value(grade), LocaleElement::value(it->second)},
                                  ambient.locale)
                                 .rational();
    }
    return out;
}

}  // namespace fuzz
