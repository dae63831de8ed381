#include "fuzz/sheaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzz {

MonoPresheaf make_mono_presheaf(
    const IntervalLocale& locale,
    const std::vector<std::tuple<std::string, Rational, bool>>& elems) {
    MonoPresheaf out{locale, {}};
    for (const auto& [id, grade, attained] : elems) {
        if (grade < locale.lo || grade > locale.hi)
            throw std::domain_error("grade of '" + id + "' outside the interval");
        if (!attained && LocaleElement::value(grade) == initial(locale))
            throw std::invalid_argument(
                "'" + id + "' would be absent from every section yet present in the generic "
                "fibre; grades at the initial element must be attained");
        if (!out.elements.emplace(id, MonoPresheaf::Entry{grade, attained}).second)
            throw std::invalid_argument("duplicate element id '" + id + "'");
    }
    return out;
}

StepPresheaf make_step_presheaf(const IntervalLocale& locale, std::vector<Rational> cuts,
                                std::vector<std::set<std::string>> levels,
                                std::vector<std::map<std::string, std::string>> maps) {
    if (cuts.empty()) throw std::invalid_argument("step presheaf needs at least one cut");
    if (levels.size() != cuts.size() + 1 || maps.size() != cuts.size())
        throw std::invalid_argument("level/cut/map counts are inconsistent");
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        const LocaleElement c = LocaleElement::value(cuts[k]);
        if (!lt(initial(locale), c, locale))
            throw std::invalid_argument("cuts must lie strictly above the initial element");
        if (k + 1 < cuts.size() &&
            !lt(c, LocaleElement::value(cuts[k + 1]), locale))
            throw std::invalid_argument("cuts must be strictly ascending in the locale order");
    }
    if (LocaleElement::value(cuts.back()) != top(locale))
        throw std::invalid_argument("the last cut must be the top element");
    for (std::size_t k = 0; k < maps.size(); ++k) {
        for (const std::string& x : levels[k + 1])
            if (!maps[k].count(x))
                throw std::invalid_argument("restriction not defined on '" + x + "'");
        for (const auto& [x, y] : maps[k]) {
            if (!levels[k + 1].count(x))
                throw std::invalid_argument("restriction defined on stray element '" + x + "'");
            if (!levels[k].count(y))
                throw std::invalid_argument("restriction sends '" + x + "' outside its level");
        }
    }
    return StepPresheaf{locale, std::move(cuts), std::move(levels), std::move(maps)};
}

MonoPresheaf level_cut(const FuzzySet& f) {
    MonoPresheaf out{f.locale, {}};
    for (const auto& [id, grade] : f.grades) out.elements[id] = {grade, true};
    return out;
}

std::set<std::string> sections(const MonoPresheaf& F, const LocaleElement& a) {
    if (a.is_bottom()) return {"*"};
    if (a.rational() < F.locale.lo || a.rational() > F.locale.hi)
        throw std::domain_error("section point outside the interval");
    std::set<std::string> out;
    for (const auto& [id, entry] : F.elements) {
        const LocaleElement g = LocaleElement::value(entry.grade);
        if (lt(a, g, F.locale) || (g == a && entry.attained)) out.insert(id);
    }
    return out;
}

std::set<std::string> sections(const StepPresheaf& E, const LocaleElement& a) {
    if (a.is_bottom()) return {"*"};
    if (a.rational() < E.locale.lo || a.rational() > E.locale.hi)
        throw std::domain_error("section point outside the interval");
    std::size_t level = 0;
    for (std::size_t k = 0; k < E.cuts.size(); ++k)
        if (leq(LocaleElement::value(E.cuts[k]), a, E.locale)) level = k + 1;
    return E.levels[level];
}

bool is_sheaf(const MonoPresheaf& F) {
    return std::all_of(F.elements.begin(), F.elements.end(),
                       [](const auto& kv) { return kv.second.attained; });
}

FuzzySet to_fuzzy_set(const MonoPresheaf& F) {
    if (!is_sheaf(F))
        throw std::invalid_argument(
            "presheaf has non-attained suprema and is not a sheaf; apply sheafify() first");
    FuzzySet out{F.locale, {}};
    for (const auto& [id, entry] : F.elements) out.grades[id] = entry.grade;
    return out;
}

MonoPresheaf image_presheaf(const StepPresheaf& E) {
    const std::size_t n = E.cuts.size();

    // Follow each top-level chain down to the generic fibre, recording which
    // generic elements are reached from each level.
    std::vector<std::set<std::string>> reached(n + 1);
    reached[0] = E.levels[0];
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::string x : E.levels[k]) {
            for (std::size_t j = k; j >= 1; --j) x = E.maps[j - 1].at(x);
            reached[k].insert(x);
        }
    }

    MonoPresheaf out{E.locale, {}};
    for (const std::string& x : E.levels[0]) {
        std::size_t deepest = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (reached[k].count(x)) deepest = k;
        if (deepest == n)
            out.elements[x] = {top(E.locale).rational(), true};
        else
            out.elements[x] = {E.cuts[deepest], false};
    }
    return out;
}

MonoPresheaf sheafify(const MonoPresheaf& F) {
    MonoPresheaf out = F;
    for (auto& [_, entry] : out.elements) entry.attained = true;
    return out;
}

MonoPresheaf representable(const LocaleElement& s, const IntervalLocale& L) {
    if (s.is_bottom())
        throw std::invalid_argument("representable at the adjoined bottom is excluded");
    if (s.rational() < L.lo || s.rational() > L.hi)
        throw std::domain_error("representable point outside the interval");
    MonoPresheaf out{L, {}};
    out.elements["*"] = {s.rational(), true};
    return out;
}

namespace {

// Exact membership-set inclusion: {a : x in F(a)} must land inside
// {a : y in G(a)}. On a dense total order this reduces to a comparison of
// (grade, attained) pairs.
bool dominates(const MonoPresheaf::Entry& src, const MonoPresheaf::Entry& dst,
               const IntervalLocale& L) {
    const LocaleElement a = LocaleElement::value(src.grade);
    const LocaleElement b = LocaleElement::value(dst.grade);
    if (lt(a, b, L)) return true;
    if (a == b) return !src.attained || dst.attained;
    return false;
}

}  // namespace

bool is_section_map(const std::map<std::string, std::string>& m, const MonoPresheaf& F,
                    const MonoPresheaf& G) {
    if (!(F.locale == G.locale)) return false;
    for (const auto& [id, _] : F.elements) {
        auto it = m.find(id);
        if (it == m.end()) return false;
        auto target = G.elements.find(it->second);
        if (target == G.elements.end()) return false;
        if (!dominates(F.elements.at(id), target->second, F.locale)) return false;
    }
    return true;
}

std::vector<std::map<std::string, std::string>> mono_hom(const MonoPresheaf& F,
                                                         const MonoPresheaf& G) {
    if (!(F.locale == G.locale))
        throw std::invalid_argument("hom between presheaves over different locales");
    std::vector<std::string> domain;
    for (const auto& [id, _] : F.elements) domain.push_back(id);
    std::vector<std::string> codomain;
    for (const auto& [id, _] : G.elements) codomain.push_back(id);

    std::vector<std::map<std::string, std::string>> homs;
    if (domain.empty()) {
        homs.push_back({});
        return homs;
    }
    if (codomain.empty()) return homs;

    std::vector<std::size_t> pick(domain.size(), 0);
    while (true) {
        std::map<std::string, std::string> candidate;
        for (std::size_t i = 0; i < domain.size(); ++i) candidate[domain[i]] = codomain[pick[i]];
        if (is_section_map(candidate, F, G)) homs.push_back(std::move(candidate));

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < codomain.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return homs;
}

std::vector<LocaleElement> sample_points(const std::vector<const MonoPresheaf*>& presheaves) {
    if (presheaves.empty()) throw std::invalid_argument("no presheaves to sample");
    const IntervalLocale L = presheaves.front()->locale;

    std::vector<LocaleElement> grades;
    auto push_unique = [&grades](const LocaleElement& e) {
        if (std::find(grades.begin(), grades.end(), e) == grades.end()) grades.push_back(e);
    };
    push_unique(initial(L));
    push_unique(top(L));
    for (const MonoPresheaf* F : presheaves) {
        if (!(F->locale == L))
            throw std::invalid_argument("sampled presheaves use different locales");
        for (const auto& [_, entry] : F->elements) push_unique(LocaleElement::value(entry.grade));
    }
    std::sort(grades.begin(), grades.end(), [&L](const LocaleElement& a, const LocaleElement& b) {
        return lt(a, b, L);
    });

    std::vector<LocaleElement> points = grades;
    for (std::size_t i = 0; i + 1 < grades.size(); ++i)
        points.push_back(between(grades[i], grades[i + 1], L));
    std::sort(points.begin(), points.end(), [&L](const LocaleElement& a, const LocaleElement& b) {
        return lt(a, b, L);
    });
    return points;
}

}  // namespace fuzz
