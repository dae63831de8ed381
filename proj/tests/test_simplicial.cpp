#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fuzz/simplicial.hpp"

using namespace fuzz;

namespace {

// 3-4-5 right triangle: the workhorse example
PointCloud triangle_cloud() {
    return make_point_cloud({{0, 0}, {3, 0}, {0, 4}});
}

std::size_t level_count(const SimplexLevels& levels, std::size_t k) {
    return k < levels.size() ? levels[k].size() : 0;
}

PointCloud random_cloud(std::mt19937& rng, int max_points) {
    const int n = 2 + static_cast<int>(rng() % (max_points - 1));
    std::vector<std::vector<Rational>> pts;
    while (static_cast<int>(pts.size()) < n) {
        std::vector<Rational> p{ratio(static_cast<long>(rng() % 200), 10),
                                ratio(static_cast<long>(rng() % 200), 10)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return make_point_cloud(std::move(pts));
}

}  // namespace

TEST_CASE("point cloud validation") {
    CHECK_THROWS_AS(make_point_cloud({}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_cloud({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_cloud({{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("triangle grades in squared mode") {
    const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2);
    CHECK(v.complex.levels[0].grades.size() == 3);
    CHECK(v.complex.levels[1].grades.size() == 3);
    CHECK(v.complex.levels[2].grades.size() == 1);

    CHECK(v.complex.levels[1].grades.at("0-1") == Rational(9));
    CHECK(v.complex.levels[1].grades.at("0-2") == Rational(16));
    CHECK(v.complex.levels[1].grades.at("1-2") == Rational(25));
    CHECK(v.complex.levels[2].grades.at("0-1-2") == Rational(25));
    for (const auto& [_, grade] : v.complex.levels[0].grades) CHECK(grade == 0);

    // default bound: 81/64 of the largest squared distance
    CHECK(v.scale_bound == Rational(25) * ratio(81, 64));
    CHECK(v.complex.locale.orientation == Orientation::Opposite);
}

TEST_CASE("triangle grades in euclidean mode") {
    const VRSystem v =
        vr_build(triangle_cloud(), std::nullopt, 2, DistanceMode::Euclidean);
    CHECK(v.complex.levels[1].grades.at("0-1") == Rational(3));
    CHECK(v.complex.levels[1].grades.at("0-2") == Rational(4));
    CHECK(v.complex.levels[1].grades.at("1-2") == Rational(5));
    CHECK(v.complex.levels[2].grades.at("0-1-2") == Rational(5));
    CHECK(v.scale_bound == Rational(5) * ratio(9, 8));
}

TEST_CASE("single point builds one vertex of grade zero") {
    const VRSystem v = vr_build(make_point_cloud({{1, 2}}), std::nullopt, 0);
    CHECK(v.complex.levels.size() == 1);
    CHECK(v.complex.levels[0].grades.at("0") == 0);
    CHECK(v.scale_bound == 1);  // fallback bound for a gradeless cloud
}

TEST_CASE("build validations") {
    CHECK_THROWS_AS(vr_build(triangle_cloud(), std::nullopt, 3), std::invalid_argument);
    CHECK_THROWS_AS(vr_build(triangle_cloud(), std::nullopt, -1), std::invalid_argument);
    // bound must strictly exceed every pair grade (25 in squared mode)
    CHECK_THROWS_AS(vr_build(triangle_cloud(), Rational(25), 2), std::invalid_argument);
    CHECK_NOTHROW(vr_build(triangle_cloud(), Rational(26), 2));
    CHECK_THROWS_AS(vr_build(triangle_cloud(), Rational(0), 0), std::invalid_argument);
}

TEST_CASE("every face map of a build is grade-monotone") {
    const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2);
    const SimplicialReport report = simplicial_validate(v.complex);
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("sections of the triangle at the classic thresholds") {
    for (const DistanceMode mode : {DistanceMode::Squared, DistanceMode::Euclidean}) {
        const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2, mode);
        auto threshold = [&mode](long d) {
            return mode == DistanceMode::Squared ? Rational(d * d) : Rational(d);
        };

        const SimplexLevels at3 = vr_sections(v, threshold(3));
        CHECK(level_count(at3, 0) == 3);
        CHECK(level_count(at3, 1) == 1);
        CHECK(level_count(at3, 2) == 0);

        const SimplexLevels at4 = vr_sections(v, threshold(4));
        CHECK(level_count(at4, 0) == 3);
        CHECK(level_count(at4, 1) == 2);
        CHECK(at4[1] == std::vector<Simplex>{{0, 1}, {0, 2}});
        CHECK(level_count(at4, 2) == 0);

        const SimplexLevels at5 = vr_sections(v, threshold(5));
        CHECK(level_count(at5, 1) == 3);
        CHECK(level_count(at5, 2) == 1);

        // s = 0: vertices only
        const SimplexLevels at0 = vr_sections(v, 0);
        CHECK(level_count(at0, 0) == 3);
        CHECK(level_count(at0, 1) == 0);

        // s = bound: the full truncated skeleton
        const SimplexLevels full = vr_sections(v, v.scale_bound);
        CHECK(level_count(full, 0) == 3);
        CHECK(level_count(full, 1) == 3);
        CHECK(level_count(full, 2) == 1);
    }
}

TEST_CASE("stalks of the triangle") {
    const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2, DistanceMode::Euclidean);

    const SimplexLevels at4 = vr_stalk(v, Rational(4));
    CHECK(level_count(at4, 0) == 3);
    CHECK(level_count(at4, 1) == 1);
    CHECK(at4[1] == std::vector<Simplex>{{0, 1}});

    const SimplexLevels small = vr_stalk(v, ratio(1, 2));
    CHECK(level_count(small, 0) == 3);
    CHECK(level_count(small, 1) == 0);
    CHECK(connected_components(small).size() == 3);

    // at the initial element everything has strictly smaller diameter
    const SimplexLevels generic = vr_stalk(v, v.scale_bound);
    CHECK(level_count(generic, 1) == 3);
    CHECK(level_count(generic, 2) == 1);
    CHECK(generic == vr_stalk(v, std::nullopt));

    CHECK_THROWS_AS(vr_stalk(v, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(vr_stalk(v, v.scale_bound + 1), std::domain_error);
}

TEST_CASE("pi0 on sections and stalks") {
    const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2, DistanceMode::Euclidean);
    CHECK(connected_components(vr_sections(v, Rational(5))).size() == 1);
    CHECK(connected_components(vr_sections(v, Rational(3))).size() == 2);
    CHECK(connected_components(vr_sections(v, Rational(0))).size() == 3);

    const auto parts = connected_components(vr_stalk(v, ratio(1, 2)));
    CHECK(parts == std::vector<std::vector<int>>{{0}, {1}, {2}});

    const VRSystem lone = vr_build(make_point_cloud({{0, 0}}), std::nullopt, 0);
    CHECK(connected_components(vr_sections(lone, 0)).size() == 1);

    SimplexLevels broken{{}, {{0, 1}}};
    CHECK_THROWS_AS(connected_components(broken), std::invalid_argument);
}

TEST_CASE("sandwich: stalk equals sections just below, within sections at the value") {
    const VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2);
    for (long d2 : {9, 16, 25}) {
        const SimplexLevels strict = vr_stalk(v, Rational(d2));
        const SimplexLevels closed = vr_sections(v, Rational(d2));
        for (std::size_t k = 0; k < strict.size(); ++k)
            for (const Simplex& s : strict[k])
                CHECK(std::find(closed[k].begin(), closed[k].end(), s) != closed[k].end());
        // equality fails exactly because some simplex sits at this diameter
        CHECK(strict != closed);
    }
    // between jump values the sandwich closes
    CHECK(vr_stalk(v, Rational(12)) == vr_sections(v, Rational(12)));
}

TEST_CASE("monotone filtration and face closure on random clouds") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 12; ++trial) {
        const PointCloud cloud = random_cloud(rng, 8);
        const int dim_cap = std::min<int>(2, static_cast<int>(cloud.points.size()) - 1);
        const VRSystem v = vr_build(cloud, std::nullopt, dim_cap);

        std::vector<Rational> thresholds{0, v.scale_bound / 3, v.scale_bound / 2,
                                         v.scale_bound};
        std::sort(thresholds.begin(), thresholds.end());
        SimplexLevels previous;
        for (const Rational& s : thresholds) {
            const SimplexLevels cur = vr_sections(v, s);
            CHECK_NOTHROW(connected_components(cur));  // face-closed
            if (!previous.empty())
                for (std::size_t k = 0; k < cur.size(); ++k)
                    for (const Simplex& simplex : previous[k])
                        CHECK(std::find(cur[k].begin(), cur[k].end(), simplex) != cur[k].end());
            previous = cur;

            if (s > 0) {
                const SimplexLevels st = vr_stalk(v, s);
                CHECK_NOTHROW(connected_components(st));
                for (std::size_t k = 0; k < st.size(); ++k)
                    for (const Simplex& simplex : st[k])
                        CHECK(std::find(cur[k].begin(), cur[k].end(), simplex) !=
                              cur[k].end());
            }
        }
    }
}

TEST_CASE("permuting the point order preserves counts and pi0") {
    std::mt19937 rng(121);
    for (int trial = 0; trial < 8; ++trial) {
        const PointCloud cloud = random_cloud(rng, 7);
        const int dim_cap = std::min<int>(2, static_cast<int>(cloud.points.size()) - 1);
        const VRSystem v = vr_build(cloud, std::nullopt, dim_cap);

        std::vector<std::vector<Rational>> shuffled = cloud.points;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const VRSystem w =
            vr_build(make_point_cloud(shuffled), v.scale_bound, dim_cap);

        const std::vector<Rational> scales{v.scale_bound / 4, v.scale_bound / 2, v.scale_bound};
        for (const Rational& s : scales) {
            const SimplexLevels a = vr_sections(v, s);
            const SimplexLevels b = vr_sections(w, s);
            for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].size() == b[k].size());
            CHECK(connected_components(a).size() == connected_components(b).size());

            const SimplexLevels sa = vr_stalk(v, s);
            const SimplexLevels sb = vr_stalk(w, s);
            for (std::size_t k = 0; k < sa.size(); ++k) CHECK(sa[k].size() == sb[k].size());
        }
    }
}

TEST_CASE("vr_compare accepts equal clouds and rejects proper inclusions") {
    const PointCloud big = triangle_cloud();
    const VRSystem super = vr_build(big, std::nullopt, 1);

    const VRSystem same = vr_build(triangle_cloud(), super.scale_bound, 1);
    CHECK(vr_compare(same, super).ok);

    const PointCloud small_cloud = make_point_cloud({{0, 0}, {3, 0}});
    const VRSystem sub = vr_build(small_cloud, super.scale_bound, 1);
    const CompareReport report = vr_compare(sub, super);
    CHECK_FALSE(report.ok);
    CHECK(report.level == 0);
    CHECK(report.element == "2");  // the missing vertex
    CHECK(report.reason == "not-surjective");

    // mismatched metadata and non-inclusions are input errors
    const VRSystem other_bound = vr_build(small_cloud, super.scale_bound + 1, 1);
    CHECK_THROWS_AS(vr_compare(other_bound, super), std::invalid_argument);
    const VRSystem stranger =
        vr_build(make_point_cloud({{9, 9}, {10, 10}}), super.scale_bound, 1);
    CHECK_THROWS_AS(vr_compare(stranger, super), std::invalid_argument);
}

TEST_CASE("vr_compare fails iff the point sets differ, on random clouds") {
    std::mt19937 rng(131);
    for (int trial = 0; trial < 8; ++trial) {
        const PointCloud cloud = random_cloud(rng, 6);
        // the truncated sub-cloud must still carry dim_cap-sized simplices
        if (cloud.points.size() < 4) continue;
        const int dim_cap = std::min<int>(2, static_cast<int>(cloud.points.size()) - 1);
        const VRSystem super = vr_build(cloud, std::nullopt, dim_cap);

        // reordered copy of the same points: must pass
        std::vector<std::vector<Rational>> shuffled = cloud.points;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const VRSystem same = vr_build(make_point_cloud(shuffled), super.scale_bound, dim_cap);
        CHECK(vr_compare(same, super).ok);

        // strict subset: must fail at level 0
        std::vector<std::vector<Rational>> truncated(cloud.points.begin(),
                                                     cloud.points.end() - 1);
        const VRSystem sub = vr_build(make_point_cloud(truncated), super.scale_bound, dim_cap);
        const CompareReport report = vr_compare(sub, super);
        CHECK_FALSE(report.ok);
        CHECK(report.level == 0);
    }
}

TEST_CASE("graded complexes have constant sections up to their grade") {
    const IntervalLocale L = make_interval(0, 10, Orientation::Opposite);
    const SimplicialComplex edge = make_complex({{{0}, {1}}, {{0, 1}}});
    const SimplicialFuzzySet z = graded_complex(LocaleElement::value(4), edge, L, 2);
    REQUIRE(z.levels.size() == 2);

    for (const auto& level : z.levels) {
        const MonoPresheaf cut = level_cut(level);
        // t <= s in the reversed order means t >= 4 numerically
        CHECK(sections(cut, LocaleElement::value(7)) ==
              sections(cut, LocaleElement::value(4)));
        CHECK(sections(cut, LocaleElement::value(3)).empty());
        CHECK_FALSE(sections(cut, LocaleElement::value(4)).empty());
    }
    CHECK(simplicial_validate(z).ok);

    // a graded point is the one-element representable, levelwise
    const SimplicialComplex point = make_complex({{{0}}});
    const SimplicialFuzzySet p = graded_complex(LocaleElement::value(4), point, L, 2);
    REQUIRE(p.levels.size() == 1);
    CHECK(p.levels[0].grades.size() == 1);
    CHECK(p.levels[0].grades.at("0") == Rational(4));
}

TEST_CASE("simplicial validation catches raised edges and broken closure") {
    VRSystem v = vr_build(triangle_cloud(), std::nullopt, 2);
    CHECK(simplicial_validate(v.complex).ok);

    // raise an edge's grade above a containing triangle's: face condition breaks
    VRSystem mutated = v;
    mutated.complex.levels[1].grades.at("0-1") = Rational(30);
    const SimplicialReport raised = simplicial_validate(mutated.complex);
    CHECK_FALSE(raised.ok);
    REQUIRE_FALSE(raised.violations.empty());

    // drop a face entirely
    VRSystem gutted = v;
    gutted.complex.levels[1].grades.erase("0-1");
    CHECK_FALSE(simplicial_validate(gutted.complex).ok);

    // the empty simplicial fuzzy set is valid
    SimplicialFuzzySet empty;
    empty.locale = v.complex.locale;
    CHECK(simplicial_validate(empty).ok);
}

TEST_CASE("hom sets between small complexes") {
    const SimplicialComplex point = make_complex({{{0}}});
    const SimplicialComplex edge = make_complex({{{0}, {1}}, {{0, 1}}});
    const SimplicialComplex two_points = make_complex({{{0}, {1}}});

    CHECK(simplicial_hom(point, edge).size() == 2);
    CHECK(simplicial_hom(edge, point).size() == 1);       // collapse
    CHECK(simplicial_hom(edge, two_points).size() == 2);  // only collapses survive
    CHECK(simplicial_hom(edge, edge).size() == 3);        // 0-0, 1-1, 0-1 images
    CHECK(simplicial_hom(two_points, edge).size() == 4);
}

TEST_CASE("graded maps into a VR system match maps into its sections") {
    std::mt19937 rng(141);
    const SimplicialComplex point = make_complex({{{0}}});
    const SimplicialComplex edge = make_complex({{{0}, {1}}, {{0, 1}}});

    for (int trial = 0; trial < 10; ++trial) {
        const PointCloud cloud = random_cloud(rng, 5);
        const int dim_cap = std::min<int>(2, static_cast<int>(cloud.points.size()) - 1);
        const VRSystem v = vr_build(cloud, std::nullopt, dim_cap);

        const std::vector<Rational> scales{v.scale_bound / 3, v.scale_bound / 2};
        for (const Rational& s : scales) {
            const SimplicialComplex sections_complex{vr_sections(v, s)};
            for (const SimplicialComplex* k : {&point, &edge}) {
                const auto graded = graded_hom(LocaleElement::value(s), *k, v);
                const auto plain = simplicial_hom(*k, sections_complex);
                CHECK(graded == plain);
            }
        }
    }
}
