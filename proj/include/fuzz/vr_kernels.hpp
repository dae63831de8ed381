#ifndef FUZZ_VR_KERNELS_HPP
#define FUZZ_VR_KERNELS_HPP

#include <cstddef>
#include <vector>

#include "fuzz/rational.hpp"

namespace fuzz {

// A finite list of distinct points with rational coordinates, all of the
// same arity. Indices into the list are the vertex names everywhere.
struct PointCloud {
    std::vector<std::vector<Rational>> points;
};

PointCloud make_point_cloud(std::vector<std::vector<Rational>> points);

// Vertex tuples are kept strictly increasing; degenerate simplices are never
// stored (their grade equals that of the underlying nondegenerate simplex).
using Simplex = std::vector<int>;
using SimplexLevels = std::vector<std::vector<Simplex>>;  // [k] = all k-simplices

std::string simplex_id(const Simplex& s);
Simplex parse_simplex_id(const std::string& id);

// The exact-arithmetic hot loops below exist in a serial form and an
// OpenMP form; both fill preallocated slots indexed by position, so the
// results are identical regardless of schedule. The serial path is the
// reference the parallel one is tested against.
enum class Execution { Serial, Parallel };

std::size_t pair_index(int i, int j, int n_points);  // i < j

// Squared Euclidean distances for every pair i < j, flattened by pair_index.
std::vector<Rational> pairwise_squared_distances(const PointCloud& cloud, Execution exec);

// All strictly increasing (k+1)-tuples out of n_points vertices.
std::vector<Simplex> level_simplices(int n_points, int k);

// Position (into pair_grades) of the maximal pair of each simplex, or
// npos_pair for vertices. All exact comparisons happen here; the parallel
// region allocates nothing.
inline constexpr std::size_t npos_pair = static_cast<std::size_t>(-1);
std::vector<std::size_t> diameter_pair_positions(const std::vector<Simplex>& simplices,
                                                 const std::vector<Rational>& pair_grades,
                                                 int n_points, Execution exec);

// Diameter grade per simplex: the maximum pair grade over its vertex pairs.
std::vector<Rational> simplex_diameters(const std::vector<Simplex>& simplices,
                                        const std::vector<Rational>& pair_grades, int n_points,
                                        Execution exec);

// How many grades pass the threshold; strict selects < over <=.
std::size_t count_within(const std::vector<Rational>& grades, const Rational& bound, bool strict,
                         Execution exec);

}  // namespace fuzz

#endif
