#ifndef FUZZ_SIMPLICIAL_HPP
#define FUZZ_SIMPLICIAL_HPP

#include <optional>

#include "fuzz/stalks.hpp"
#include "fuzz/vr_kernels.hpp"

namespace fuzz {

// Grades can be exact squared distances (the default: no square roots ever
// enter, and level cuts at rational thresholds stay exact) or Euclidean
// distances rounded to a fixed number of decimal digits. Thresholds, bounds
// and reported grades are all in the chosen units.
enum class DistanceMode { Squared, Euclidean };

// Levelwise fuzzy sets of nondegenerate simplices over a common locale.
// Degeneracies are implicit and carry the grade of their nondegenerate core.
struct SimplicialFuzzySet {
    IntervalLocale locale;
    int dim_cap = 0;
    std::vector<FuzzySet> levels;  // [k] = k-simplices, ids like "0-2-5"
};

struct VRSystem {
    PointCloud cloud;
    DistanceMode mode = DistanceMode::Squared;
    int dim_cap = 0;
    int precision = 12;    // decimal digits kept in Euclidean mode
    Rational scale_bound;  // locale endpoint, strictly above every pair grade
    SimplicialFuzzySet complex;
};

// Grades every strictly increasing vertex tuple up to dim_cap by its
// diameter. The bound, when given, is validated to exceed all pair grades;
// the default is max grade x 9/8 (squared: x 81/64), or 1 for a single
// point. dim_cap may not exceed point count - 1.
VRSystem vr_build(const PointCloud& cloud, std::optional<Rational> bound, int dim_cap,
                  DistanceMode mode = DistanceMode::Squared, int precision = 12,
                  Execution exec = Execution::Parallel);

// Simplices of diameter <= s per level; face-closed by construction.
SimplexLevels vr_sections(const VRSystem& v, const Rational& s);

// Simplices of diameter strictly below t; nullopt asks at the adjoined
// bottom and returns the full skeleton. t = 0 is rejected (the top of the
// reversed interval indexes no stalk).
SimplexLevels vr_stalk(const VRSystem& v, const std::optional<Rational>& t);

// Connected components of the 1-skeleton, least vertex first in each class.
// The family must be closed under faces.
std::vector<std::vector<int>> connected_components(const SimplexLevels& family);

struct CompareReport {
    bool ok = true;
    int level = -1;
    std::optional<StalkPoint> point;
    std::string element;
    std::string reason;
};

// Stalkwise comparison of the inclusion induced by a sub-point-cloud.
// Fails at the first (level, point) where some stalk map is not bijective.
CompareReport vr_compare(const VRSystem& sub, const VRSystem& super);

// A finite face-closed family of strictly increasing vertex tuples.
struct SimplicialComplex {
    SimplexLevels levels;
};

SimplicialComplex make_complex(SimplexLevels levels);

// The constant simplicial structure on K graded at a single element s:
// sections are K itself up to s and empty beyond it.
SimplicialFuzzySet graded_complex(const LocaleElement& s, const SimplicialComplex& k,
                                  const IntervalLocale& L, int dim_cap);

struct SimplicialReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks tuple shape, face closure, and that no simplex outgrades its faces.
SimplicialReport simplicial_validate(const SimplicialFuzzySet& z);

// Simplicial maps K -> Z between complexes, as vertex assignments that are
// weakly monotone on every simplex and send supports to simplices of Z.
std::vector<std::map<int, int>> simplicial_hom(const SimplicialComplex& k,
                                               const SimplicialComplex& z);

// Maps of simplicial sheaves from the K-shaped object graded at s into a VR
// system: the support of every simplex image must hold grade at least s.
std::vector<std::map<int, int>> graded_hom(const LocaleElement& s, const SimplicialComplex& k,
                                           const VRSystem& v);

}  // namespace fuzz

#endif
