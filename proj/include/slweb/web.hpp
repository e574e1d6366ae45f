#ifndef SLWEB_WEB_HPP
#define SLWEB_WEB_HPP

#include <string>
#include <vector>

#include "slweb/planar_map.hpp"
#include "slweb/weights.hpp"

namespace slweb {

// A web: a planar map whose boundary legs hang off a rim of disk arcs,
// with a marked corner vertex.  See planar_map.hpp for the orientation
// conventions.
struct Web {
    PlanarMap map;

    int n() const { return map.n; }
    int marked_vertex() const { return map.rim.empty() ? -1 : map.rim[0]; }
    int leg_count() const { return static_cast<int>(map.rim.size()) - 1; }

    struct Leg {
        int vertex = -1;   // rim vertex carrying the leg
        int edge = -1;     // web edge id
        bool inward = false;  // edge points into the disk at this leg
        int read = 0;      // fundamental index contributed to the boundary
    };
    std::vector<Leg> legs() const;
    std::vector<int> boundary() const;  // reading labels, marked corner first

    void normalize() { map.normalize(); }
};

// Turn univalent port vertices (in reading order) into rim legs; adds
// the marked vertex and the rim arcs.
void attach_rim(PlanarMap& map, const std::vector<int>& ports_in_reading_order);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Structural consistency, mod-n balance at internal vertices, and
// trivalence of internal vertices.
ValidationReport validate(const Web& w);

bool isomorphic(const Web& a, const Web& b);

// Degrees (dart counts) of internal faces, i.e. faces of the underlying
// web that are not boundary sectors.
std::vector<int> internal_face_degrees(const Web& w);

// --- serialization ---
std::string to_json(const Web& w);
Web web_from_json(const std::string& text);
std::string to_dot(const Web& w);
std::string to_tikz(const Web& w);

}  // namespace slweb

#endif
