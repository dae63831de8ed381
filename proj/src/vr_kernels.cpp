#include "fuzz/vr_kernels.hpp"

#include <stdexcept>

namespace fuzz {

PointCloud make_point_cloud(std::vector<std::vector<Rational>> points) {
    if (points.empty()) throw std::invalid_argument("point cloud is empty");
    const std::size_t arity = points.front().size();
    if (arity == 0) throw std::invalid_argument("points need at least one coordinate");
    for (const auto& p : points)
        if (p.size() != arity) throw std::invalid_argument("points of unequal arity");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("duplicate point at indices " + std::to_string(i) +
                                            " and " + std::to_string(j));
    return PointCloud{std::move(points)};
}

std::string simplex_id(const Simplex& s) {
    std::string id;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) id += "-";
        id += std::to_string(s[i]);
    }
    return id;
}

Simplex parse_simplex_id(const std::string& id) {
    Simplex s;
    std::size_t pos = 0;
    while (pos < id.size()) {
        std::size_t dash = id.find('-', pos);
        if (dash == std::string::npos) dash = id.size();
        s.push_back(std::stoi(id.substr(pos, dash - pos)));
        pos = dash + 1;
    }
    return s;
}

std::size_t pair_index(int i, int j, int n_points) {
    // row-major upper triangle, i < j
    const std::size_t n = static_cast<std::size_t>(n_points);
    const std::size_t a = static_cast<std::size_t>(i);
    const std::size_t b = static_cast<std::size_t>(j);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::vector<Rational> pairwise_squared_distances(const PointCloud& cloud, Execution exec) {
    const int n = static_cast<int>(cloud.points.size());
    std::vector<Rational> out(static_cast<std::size_t>(n) * (n - 1) / 2);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(out.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const auto body = [&](std::size_t p) {
        const auto& [i, j] = pairs[p];
        Rational sum = 0;
        const auto& x = cloud.points[i];
        const auto& y = cloud.points[j];
        for (std::size_t c = 0; c < x.size(); ++c) {
            Rational d = x[c] - y[c];
            sum += d * d;
        }
        out[p] = sum;
    };

    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p)
            body(static_cast<std::size_t>(p));
    } else {
        for (std::size_t p = 0; p < pairs.size(); ++p) body(p);
    }
    return out;
}

std::vector<Simplex> level_simplices(int n_points, int k) {
    std::vector<Simplex> out;
    if (k < 0 || k >= n_points) return out;
    Simplex current(k + 1);
    for (int i = 0; i <= k; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        // next strictly increasing tuple
        int pos = k;
        while (pos >= 0 && current[pos] == n_points - (k + 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int i = pos + 1; i <= k; ++i) current[i] = current[i - 1] + 1;
    }
    return out;
}

std::vector<std::size_t> diameter_pair_positions(const std::vector<Simplex>& simplices,
                                                 const std::vector<Rational>& pair_grades,
                                                 int n_points, Execution exec) {
    std::vector<std::size_t> out(simplices.size(), npos_pair);
    if (simplices.empty()) return out;

    // Flatten the tuples so the scan streams one contiguous buffer instead
    // of pointer-chasing a million small vectors.
    const std::size_t width = simplices.front().size();
    std::vector<int> flat(simplices.size() * width);
    for (std::size_t s = 0; s < simplices.size(); ++s)
        for (std::size_t i = 0; i < width; ++i) flat[s * width + i] = simplices[s][i];

    const auto body = [&](std::size_t s) {
        const int* tuple = flat.data() + s * width;
        std::size_t best = npos_pair;
        for (std::size_t a = 0; a < width; ++a)
            for (std::size_t b = a + 1; b < width; ++b) {
                const std::size_t candidate = pair_index(tuple[a], tuple[b], n_points);
                if (best == npos_pair || pair_grades[candidate] > pair_grades[best])
                    best = candidate;
            }
        out[s] = best;
    };

    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long s = 0; s < static_cast<long long>(simplices.size()); ++s)
            body(static_cast<std::size_t>(s));
    } else {
        for (std::size_t s = 0; s < simplices.size(); ++s) body(s);
    }
    return out;
}

std::vector<Rational> simplex_diameters(const std::vector<Simplex>& simplices,
                                        const std::vector<Rational>& pair_grades, int n_points,
                                        Execution exec) {
    const std::vector<std::size_t> positions =
        diameter_pair_positions(simplices, pair_grades, n_points, exec);
    std::vector<Rational> out(simplices.size());
    for (std::size_t s = 0; s < positions.size(); ++s)
        if (positions[s] != npos_pair) out[s] = pair_grades[positions[s]];
    return out;
}

std::size_t count_within(const std::vector<Rational>& grades, const Rational& bound, bool strict,
                         Execution exec) {
    long long count = 0;
    if (exec == Execution::Parallel) {
#pragma omp parallel for reduction(+ : count) schedule(static)
        for (long long i = 0; i < static_cast<long long>(grades.size()); ++i) {
            const auto& g = grades[static_cast<std::size_t>(i)];
            if (strict ? g < bound : g <= bound) ++count;
        }
    } else {
        for (const auto& g : grades)
            if (strict ? g < bound : g <= bound) ++count;
    }
    return static_cast<std::size_t>(count);
}

}  // namespace fuzz
