#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace fuzz;

namespace {

const IntervalLocale unit = make_interval(0, 1);

FuzzySet fs(std::vector<std::pair<std::string, Rational>> elems) {
    return make_fuzzy_set(unit, elems);
}

}  // namespace

TEST_CASE("construction rejects out-of-range grades and duplicates") {
    CHECK_THROWS_AS(fs({{"a", 2}}), std::domain_error);
    CHECK_THROWS_AS(fs({{"a", ratio(1, 2)}, {"a", ratio(1, 3)}}), std::invalid_argument);
}

TEST_CASE("morphism validation") {
    const FuzzySet x = fs({{"x", ratio(1, 5)}});
    const FuzzySet u = fs({{"u", ratio(3, 10)}});
    CHECK(validate_morphism({x, u, {{"x", "u"}}}).ok);

    const FuzzySet too_high = fs({{"x", ratio(1, 2)}});
    const auto report = validate_morphism({too_high, u, {{"x", "u"}}});
    CHECK_FALSE(report.ok);
    CHECK(report.violations == std::vector<std::string>{"x"});

    CHECK_THROWS_AS(validate_morphism({x, u, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_morphism({x, u, {{"x", "nope"}}}), std::invalid_argument);
    const FuzzySet other{make_interval(0, 2), {{"u", Rational(1)}}};
    CHECK_THROWS_AS(validate_morphism({x, other, {{"x", "u"}}}), std::invalid_argument);
}

TEST_CASE("composition") {
    const FuzzySet a = fs({{"a0", ratio(1, 10)}, {"a1", ratio(1, 5)}});
    const FuzzySet b = fs({{"b0", ratio(1, 2)}, {"b1", ratio(3, 5)}});
    const FuzzySet c = fs({{"c0", Rational(1)}});
    const FuzzyMorphism f{a, b, {{"a0", "b0"}, {"a1", "b1"}}};
    const FuzzyMorphism g{b, c, {{"b0", "c0"}, {"b1", "c0"}}};

    const FuzzyMorphism gf = compose(g, f);
    CHECK(gf.map.at("a0") == "c0");
    CHECK(gf.map.at("a1") == "c0");
    CHECK(validate_morphism(gf).ok);

    CHECK(compose(identity_morphism(b), f).map == f.map);
    CHECK(compose(f, identity_morphism(a)).map == f.map);
    CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
}

TEST_CASE("pullback grade is the meet of the leg grades") {
    Diagram d;
    d.nodes["E"] = fs({{"x", ratio(2, 5)}});
    d.nodes["F"] = fs({{"y", ratio(9, 10)}});
    d.nodes["X"] = fs({{"p", Rational(1)}});
    d.arrows.push_back({"E", "X", {{"x", "p"}}});
    d.arrows.push_back({"F", "X", {{"y", "p"}}});

    const LimitResult r = limit(d);
    CHECK(r.object.grades.size() == 1);
    CHECK(r.object.grades.at("(x,y,p)") == ratio(2, 5));
    for (const auto& [label, leg] : r.legs) CHECK(validate_morphism(leg).ok);
}

TEST_CASE("binary product is a meet") {
    Diagram d;
    d.nodes["A"] = fs({{"a", ratio(3, 10)}});
    d.nodes["B"] = fs({{"b", ratio(7, 10)}});
    const LimitResult r = limit(d);
    CHECK(r.object.grades.size() == 1);
    CHECK(r.object.grades.at("(a,b)") == ratio(3, 10));
}

TEST_CASE("equalizer with no agreement is empty") {
    Diagram d;
    d.nodes["A"] = fs({{"x", ratio(1, 5)}});
    d.nodes["B"] = fs({{"u", ratio(1, 2)}, {"v", ratio(1, 2)}});
    d.arrows.push_back({"A", "B", {{"x", "u"}}});
    d.arrows.push_back({"A", "B", {{"x", "v"}}});
    CHECK(limit(d).object.grades.empty());
}

TEST_CASE("empty diagram limit is the terminal point, colimit the empty set") {
    Diagram d;
    d.locale = unit;
    const LimitResult lim = limit(d);
    CHECK(lim.object.grades.size() == 1);
    CHECK(lim.object.grades.at("*") == Rational(1));
    CHECK(colimit(d).object.grades.empty());
    CHECK_THROWS_AS(limit(Diagram{}), std::invalid_argument);
}

TEST_CASE("coequalizer glues and takes the join") {
    Diagram d;
    d.nodes["X"] = fs({{"x", ratio(1, 5)}});
    d.nodes["Y"] = fs({{"u", ratio(3, 10)}, {"v", ratio(2, 5)}});
    d.arrows.push_back({"X", "Y", {{"x", "u"}}});
    d.arrows.push_back({"X", "Y", {{"x", "v"}}});

    const ColimitResult r = colimit(d);
    CHECK(r.object.grades.size() == 1);
    // frozen from the sectionwise oracle below: the glued class tops out at 2/5
    CHECK(r.object.grades.begin()->second == ratio(2, 5));

    const auto oracle = oracles::colimit_by_sections(d);
    REQUIRE(oracle.grades.size() == 1);
    CHECK(oracle.grades.begin()->second == ratio(2, 5));
    CHECK(oracle.grades.begin()->first == r.object.grades.begin()->first);
}

TEST_CASE("disjoint union keeps both summands") {
    Diagram d;
    d.nodes["A"] = fs({{"a", ratio(3, 10)}});
    d.nodes["B"] = fs({{"b", ratio(7, 10)}});
    const ColimitResult r = colimit(d);
    REQUIRE(r.object.grades.size() == 2);
    CHECK(r.object.grades.at("A:a") == ratio(3, 10));
    CHECK(r.object.grades.at("B:b") == ratio(7, 10));
    for (const auto& [label, leg] : r.legs) CHECK(validate_morphism(leg).ok);
}

TEST_CASE("pushout of subobjects takes the larger grade") {
    // same point graded twice; gluing over the meet models the union
    Diagram d;
    d.nodes["M"] = fs({{"y", ratio(1, 5)}});
    d.nodes["A"] = fs({{"y", ratio(1, 5)}});
    d.nodes["B"] = fs({{"y", ratio(3, 5)}});
    d.arrows.push_back({"M", "A", {{"y", "y"}}});
    d.arrows.push_back({"M", "B", {{"y", "y"}}});
    const ColimitResult r = colimit(d);
    REQUIRE(r.object.grades.size() == 1);
    CHECK(r.object.grades.begin()->second == ratio(3, 5));
}

TEST_CASE("limit sections match the set-limit oracle on random diagrams") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const Diagram d = oracles::random_diagram(rng, unit, 3, 4);
        const LimitResult r = limit(d);

        // grade formula: meet of the component grades
        for (const auto& [label, leg] : r.legs) CHECK(validate_morphism(leg).ok);
        for (const auto& [id, grade] : r.object.grades) {
            std::vector<LocaleElement> parts;
            for (const auto& [label, leg] : r.legs)
                parts.push_back(
                    LocaleElement::value(d.nodes.at(label).grades.at(leg.map.at(id))));
            CHECK(meet(parts, unit) == LocaleElement::value(grade));
        }

        // sectionwise: the cut of the limit equals the limit of the cuts
        const MonoPresheaf cut = level_cut(r.object);
        for (const LocaleElement& a : sample_points({&cut}))
            CHECK(sections(cut, a) == oracles::limit_sections(d, a));
    }
}

TEST_CASE("colimit grades match the sectionwise image oracle on random diagrams") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const Diagram d = oracles::random_diagram(rng, unit, 4, 6);
        const ColimitResult r = colimit(d);
        const auto oracle = oracles::colimit_by_sections(d);

        REQUIRE(oracle.grades.size() == r.object.grades.size());
        for (const auto& [cls, grade] : oracle.grades) CHECK(r.object.grades.at(cls) == grade);

        // level cut of the colimit at each critical value = oracle image
        for (const LocaleElement& a : oracle.critical_values) {
            std::set<std::string> cut;
            for (const auto& [id, grade] : r.object.grades)
                if (leq(a, LocaleElement::value(grade), unit)) cut.insert(id);
            CHECK(cut == oracle.images_by_value.at(format_element(a)));
        }

        // each grade is literally the join over its whole preimage class
        std::map<std::string, std::vector<LocaleElement>> preimages;
        for (const auto& [label, leg] : r.legs) {
            CHECK(validate_morphism(leg).ok);
            for (const auto& [y, cls] : leg.map)
                preimages[cls].push_back(
                    LocaleElement::value(d.nodes.at(label).grades.at(y)));
        }
        for (const auto& [cls, grades] : preimages)
            CHECK(LocaleElement::value(r.object.grades.at(cls)) == join(grades, unit));
    }
}

TEST_CASE("every cocone factors uniquely through the colimit") {
    std::mt19937 rng(303);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 12; ++trial) {
        const Diagram d = oracles::random_diagram(rng, unit, 2, 2);
        std::size_t total = 0;
        for (const auto& [_, node] : d.nodes) total += node.grades.size();
        if (total > 4 || total == 0) continue;
        ++checked;

        const ColimitResult r = colimit(d);
        const FuzzySet tip = fs({{"t0", ratio(1, 2)}, {"t1", Rational(1)}});

        // enumerate all label-indexed families of maps node -> tip
        std::vector<std::pair<std::string, std::string>> slots;  // (node, element)
        for (const auto& [label, node] : d.nodes)
            for (const auto& [id, _] : node.grades) slots.emplace_back(label, id);
        std::vector<std::string> tip_ids;
        for (const auto& [id, _] : tip.grades) tip_ids.push_back(id);

        std::vector<std::size_t> pick(slots.size(), 0);
        while (true) {
            std::map<std::string, std::map<std::string, std::string>> cone;
            for (std::size_t i = 0; i < slots.size(); ++i)
                cone[slots[i].first][slots[i].second] = tip_ids[pick[i]];

            bool is_cocone = true;
            for (const auto& [label, node] : d.nodes)
                if (!validate_morphism({node, tip, cone[label]}).ok) is_cocone = false;
            for (const auto& arrow : d.arrows)
                if (is_cocone)
                    for (const auto& [x, y] : arrow.map)
                        if (cone[arrow.from].at(x) != cone[arrow.to].at(y)) is_cocone = false;

            if (is_cocone) {
                // unique factorization through the colimit carrier
                std::map<std::string, std::string> factor;
                bool consistent = true;
                for (const auto& [label, leg] : r.legs)
                    for (const auto& [x, cls] : leg.map) {
                        auto it = factor.find(cls);
                        if (it == factor.end())
                            factor[cls] = cone[label].at(x);
                        else if (it->second != cone[label].at(x))
                            consistent = false;
                    }
                CHECK(consistent);
                if (consistent) CHECK(validate_morphism({r.object, tip, factor}).ok);
            }

            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < tip_ids.size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("ambiguous tuple and class names are rejected") {
    Diagram tuples;
    tuples.nodes["A"] = fs({{"x,y", ratio(1, 2)}, {"x", ratio(1, 2)}});
    tuples.nodes["B"] = fs({{"z", ratio(1, 2)}, {"y,z", ratio(1, 2)}});
    CHECK_THROWS_AS(limit(tuples), std::invalid_argument);

    Diagram classes;
    classes.nodes["A"] = fs({{"b:c", ratio(1, 2)}});
    classes.nodes["A:b"] = fs({{"c", ratio(1, 2)}});
    CHECK_THROWS_AS(colimit(classes), std::invalid_argument);
}

TEST_CASE("subobject union and meet") {
    const FuzzySet ambient = fs({{"y", ratio(4, 5)}, {"z", ratio(1, 2)}});
    const FuzzySet a = fs({{"y", ratio(1, 5)}});
    const FuzzySet b = fs({{"y", ratio(3, 5)}, {"z", ratio(1, 10)}});

    const FuzzySet u = subobject_union(a, b, ambient);
    CHECK(u.grades.at("y") == ratio(3, 5));
    CHECK(u.grades.at("z") == ratio(1, 10));
    CHECK(is_subobject(u, ambient));

    const FuzzySet m = subobject_meet(a, b, ambient);
    CHECK(m.grades.size() == 1);
    CHECK(m.grades.at("y") == ratio(1, 5));

    CHECK(subobject_meet(a, a, ambient) == a);
    CHECK(subobject_union(a, a, ambient) == a);

    const FuzzySet outsider = fs({{"w", ratio(1, 5)}});
    CHECK_THROWS_AS(subobject_union(a, outsider, ambient), std::invalid_argument);
    const FuzzySet too_big = fs({{"y", Rational(1)}});
    CHECK_THROWS_AS(subobject_union(too_big, a, ambient), std::invalid_argument);
}

TEST_CASE("subobject lattice is distributive on random subobjects") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        FuzzySet ambient{unit, {}};
        for (int i = 0; i < 4; ++i) ambient.grades["e" + std::to_string(i)] = Rational(1);

        auto random_sub = [&rng, &ambient]() {
            FuzzySet s{unit, {}};
            for (const auto& [id, _] : ambient.grades)
                if (rng() % 2) s.grades[id] = oracles::random_grade(rng, unit);
            return s;
        };
        const FuzzySet a = random_sub(), b = random_sub(), c = random_sub();
        const FuzzySet lhs = subobject_union(a, subobject_meet(b, c, ambient), ambient);
        const FuzzySet rhs = subobject_meet(subobject_union(a, b, ambient),
                                            subobject_union(a, c, ambient), ambient);
        CHECK(lhs == rhs);
    }
}
