#include "fuzz/stalks.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzz {

StalkPoint StalkPoint::at(const LocaleElement& x, const IntervalLocale& L) {
    if (x.is_bottom()) return bottom();
    if (!lt(x, top(L), L))
        throw std::invalid_argument("stalks are indexed strictly below the top element");
    StalkPoint p;
    p.point_ = x;
    return p;
}

const LocaleElement& StalkPoint::point() const {
    if (!point_) throw std::domain_error("bottom stalk point carries no interval value");
    return *point_;
}

std::string format_stalk_point(const StalkPoint& p) {
    return p.is_bottom() ? "bottom" : format_element(p.point());
}

std::set<std::string> stalk(const MonoPresheaf& F, const StalkPoint& p) {
    std::set<std::string> out;
    if (p.is_bottom()) {
        for (const auto& [id, _] : F.elements) out.insert(id);
        return out;
    }
    for (const auto& [id, entry] : F.elements)
        if (lt(p.point(), LocaleElement::value(entry.grade), F.locale)) out.insert(id);
    return out;
}

std::set<std::string> stalk(const StepPresheaf& E, const StalkPoint& p) {
    if (p.is_bottom()) return E.levels[0];
    // Sections are constant from each cut up to the next with identity
    // transitions, so the filtered colimit over s > p stabilizes at the
    // sections at p itself.
    return sections(E, p.point());
}

std::vector<StalkPoint> stalk_points(const MonoPresheaf& E, const MonoPresheaf& F) {
    if (!(E.locale == F.locale))
        throw std::invalid_argument("stalk points need a common locale");
    const IntervalLocale& L = E.locale;

    std::vector<LocaleElement> grades;
    auto push_unique = [&grades](const LocaleElement& e) {
        if (std::find(grades.begin(), grades.end(), e) == grades.end()) grades.push_back(e);
    };
    for (const MonoPresheaf* P : {&E, &F})
        for (const auto& [_, entry] : P->elements) {
            const LocaleElement g = LocaleElement::value(entry.grade);
            if (lt(g, top(L), L)) push_unique(g);
        }
    std::sort(grades.begin(), grades.end(),
              [&L](const LocaleElement& a, const LocaleElement& b) { return lt(a, b, L); });

    std::vector<LocaleElement> values;
    values.push_back(initial(L));
    for (const LocaleElement& g : grades) values.push_back(g);
    for (std::size_t i = 0; i + 1 < grades.size(); ++i)
        values.push_back(between(grades[i], grades[i + 1], L));

    std::sort(values.begin(), values.end(),
              [&L](const LocaleElement& a, const LocaleElement& b) { return lt(a, b, L); });
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<StalkPoint> points;
    points.push_back(StalkPoint::bottom());
    for (const LocaleElement& v : values) points.push_back(StalkPoint::at(v, L));
    return points;
}

namespace {

struct PointFailure {
    std::string element;
    std::string reason;
};

// Injectivity / surjectivity of the induced map between two stalks.
std::optional<PointFailure> check_at(const std::map<std::string, std::string>& m,
                                     const std::set<std::string>& src,
                                     const std::set<std::string>& dst, MapMode mode) {
    if (mode == MapMode::Mono || mode == MapMode::Iso) {
        std::map<std::string, std::string> seen;  // target -> first source
        for (const std::string& x : src) {
            const std::string& y = m.at(x);
            auto [it, fresh] = seen.emplace(y, x);
            if (!fresh) return PointFailure{y, "not-injective"};
        }
    }
    if (mode == MapMode::Epi || mode == MapMode::Iso) {
        std::set<std::string> hit;
        for (const std::string& x : src) hit.insert(m.at(x));
        for (const std::string& y : dst)
            if (!hit.count(y)) return PointFailure{y, "not-surjective"};
    }
    return std::nullopt;
}

}  // namespace

StalkVerdict stalkwise_check(const std::map<std::string, std::string>& m, const MonoPresheaf& E,
                             const MonoPresheaf& F, MapMode mode) {
    if (!is_section_map(m, E, F))
        throw std::invalid_argument("not a valid map of sheaves of monomorphisms");
    const IntervalLocale& L = E.locale;

    // Both stalk functions are constant from one grade up to the next, so a
    // midpoint inside each constancy interval sees every value they take.
    std::vector<LocaleElement> grades;
    auto push_unique = [&grades](const LocaleElement& e) {
        if (std::find(grades.begin(), grades.end(), e) == grades.end()) grades.push_back(e);
    };
    for (const MonoPresheaf* P : {&E, &F})
        for (const auto& [_, entry] : P->elements) {
            const LocaleElement g = LocaleElement::value(entry.grade);
            if (lt(g, top(L), L)) push_unique(g);
        }
    std::sort(grades.begin(), grades.end(),
              [&L](const LocaleElement& a, const LocaleElement& b) { return lt(a, b, L); });

    std::vector<StalkPoint> grid;
    grid.push_back(StalkPoint::bottom());
    grid.push_back(StalkPoint::at(initial(L), L));
    for (std::size_t i = 0; i < grades.size(); ++i) {
        const LocaleElement next = i + 1 < grades.size() ? grades[i + 1] : top(L);
        grid.push_back(StalkPoint::at(between(grades[i], next, L), L));
    }

    StalkVerdict verdict{mode, true, std::nullopt, "", ""};
    for (const StalkPoint& p : grid) {
        auto failure = check_at(m, stalk(E, p), stalk(F, p), mode);
        if (failure) {
            verdict.ok = false;
            verdict.point = p;
            verdict.element = failure->element;
            verdict.reason = failure->reason;
            return verdict;
        }
    }

    // Stalkwise success licenses sectionwise conclusions; verify them.
    // Injectivity transfers to sections for any presheaf of monomorphisms;
    // bijectivity and generic-fibre surjectivity only for sheaves.
    const bool sheaves = is_sheaf(E) && is_sheaf(F);
    const auto samples = sample_points({&E, &F});
    for (const LocaleElement& a : samples) {
        const auto src = sections(E, a);
        const auto dst = sections(F, a);
        std::optional<PointFailure> failure;
        if (mode == MapMode::Mono || mode == MapMode::Iso)
            failure = check_at(m, src, dst, MapMode::Mono);
        if (!failure && mode == MapMode::Iso && sheaves)
            failure = check_at(m, src, dst, MapMode::Iso);
        if (!failure && mode == MapMode::Epi && sheaves && a == initial(L))
            failure = check_at(m, src, dst, MapMode::Epi);
        if (failure)
            throw std::logic_error("stalkwise verdict not reflected at sections(" +
                                   format_element(a) + "): " + failure->reason + " at '" +
                                   failure->element + "'");
    }
    return verdict;
}

bool stalks_invariant_under_sheafify(const MonoPresheaf& F) {
    const MonoPresheaf sheafified = sheafify(F);
    for (const StalkPoint& p : stalk_points(F, sheafified))
        if (stalk(F, p) != stalk(sheafified, p)) return false;
    return true;
}

ProductAxisData make_product_axis(const ProductLocale& product, MonoPresheaf axis) {
    if (product.factors.size() < 2)
        throw std::invalid_argument("axis restriction needs a genuine product locale");
    if (!(axis.locale == product.factors.front()))
        throw std::invalid_argument("axis data must live over the first factor");
    return ProductAxisData{product, std::move(axis)};
}

std::set<std::string> product_stalk(const ProductAxisData& data, const StalkPoint& p) {
    return stalk(data.axis, p);
}

}  // namespace fuzz
