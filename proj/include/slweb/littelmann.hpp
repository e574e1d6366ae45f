#ifndef SLWEB_LITTELMANN_HPP
#define SLWEB_LITTELMANN_HPP

#include <cstdint>
#include <vector>

#include "slweb/weights.hpp"

namespace slweb {

// A minuscule path: a sequence of weights starting at 0 whose steps lie
// in Weyl orbits of fundamental weights.  `dominant` records whether
// every point is required to be dominant (the enumerated paths are; the
// relaxed form appears only when exercising side-weight bookkeeping).
struct MinusculePath {
    int n = 0;
    std::vector<Weight> points;
    bool dominant = true;

    int length() const { return static_cast<int>(points.size()) - 1; }
    Weight step(int i) const { return points[i + 1] - points[i]; }  // 0-based step index
    // Orbit classes of the steps; throws if some step is not minuscule.
    std::vector<int> type() const;
    const Weight& endpoint() const { return points.back(); }

    bool operator==(const MinusculePath& o) const {
        return n == o.n && points == o.points;
    }
};

MinusculePath make_path(int n, std::vector<Weight> points, bool require_dominant = true);

// All dominant minuscule paths of the given type from 0 to `endpoint`,
// ordered lexicographically on the canonical point coordinates.
std::vector<MinusculePath> enumerate_paths(int n, const std::vector<int>& boundary,
                                           const Weight& endpoint);
std::vector<MinusculePath> enumerate_paths(int n, const std::vector<int>& boundary);

// Componentwise dominance folded into a single verdict.
Ordering path_compare(const MinusculePath& a, const MinusculePath& b);

// Independent dimension oracle: the multiplicity of the rectangular
// partition (m^n), m = (sum k_i)/n, in the product e_{k_1}...e_{k_l}
// computed by iterated vertical-strip additions over partitions with at
// most n rows.  Zero when the total is not divisible by n.
std::int64_t pieri_dimension(int n, const std::vector<int>& boundary);

}  // namespace slweb

#endif
