#ifndef SLWEB_DISKOID_HPP
#define SLWEB_DISKOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "slweb/littelmann.hpp"
#include "slweb/web.hpp"
#include "slweb/weights.hpp"

namespace slweb {

// Directed, weight-labelled dual of a web.  Vertices are the faces of
// the web (internal faces plus the boundary sectors); each web edge
// contributes one dual edge running from the face on its left to the
// face on its right, with the same label.
struct DualDiskoid {
    int n = 0;
    struct DEdge {
        int from = -1, to = -1;
        int label = 0;
        int web_edge = -1;
    };
    int vertex_count = 0;
    std::vector<DEdge> edges;
    int marked = -1;                 // sector holding the marked corner
    std::vector<int> external;      // v_0 = marked, ..., v_k = marked, reading order
    std::vector<bool> is_sector;    // vertex -> is a boundary sector
};

DualDiskoid dual_diskoid(const Web& w);

// Pareto-minimal weights over all paths between two dual vertices.
// Traversing a dual edge labelled i forward costs w_i, backward w_{n-i}.
struct DistanceAntichain {
    int src = -1, dst = -1;
    std::vector<Weight> minima;  // pairwise incomparable, sorted
    bool singleton() const { return minima.size() == 1; }
};

DistanceAntichain distance_antichain(const DualDiskoid& d, int src, int dst);
// all targets at once (same fixpoint)
std::vector<DistanceAntichain> distances_from(const DualDiskoid& d, int src);

struct CoherenceReport {
    bool cond1 = false;  // unique geodesic weight from the marked sector to every face
    bool cond2 = false;  // every internal face lies on a marked-to-boundary geodesic
    bool cond3 = false;  // dual-edge steps move by the edge's Weyl orbit
    std::string detail;  // first counterexample, if any
    std::optional<MinusculePath> associated;
    bool coherent() const { return cond1 && cond2 && cond3; }
};

CoherenceReport is_coherent(const Web& w);

// The path d(marked, v_i) over the external cycle.  Throws (with the
// offending antichain in the message) when the web is not coherent
// enough to define it.
MinusculePath associated_path(const Web& w);

}  // namespace slweb

#endif
