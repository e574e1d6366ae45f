#ifndef SLWEB_TRIANGLES_HPP
#define SLWEB_TRIANGLES_HPP

#include <vector>

#include "slweb/littelmann.hpp"
#include "slweb/planar_map.hpp"
#include "slweb/web.hpp"
#include "slweb/weights.hpp"

namespace slweb {

// Which of the two valid slot orderings a length-one diagram uses.
// Standard attaches boundary slots bottom-to-top in increasing index
// order; Reversed attaches them in the opposite order.
enum class Variant { Standard, Reversed };

using VariantAssignment = std::vector<Variant>;

// A web fragment drawn in a triangle: open boundary slots on the left
// side (incoming), right side (outgoing) and top, each kept as a
// univalent port vertex of the underlying map.
struct TriangularDiagram {
    int n = 0;
    PlanarMap map;
    std::vector<int> left_ports, right_ports;  // bottom -> top
    std::vector<int> top_ports;                // step order
    std::vector<int> left_labels;              // incoming form
    std::vector<int> right_labels;             // outgoing form

    Weight left_weight() const;
    Weight right_weight() const;
    int internal_vertices() const { return map.count_vertices(PlanarMap::VertexKind::Internal); }
};

TriangularDiagram length_one(int n, const OrbitWeight& w, Variant v = Variant::Standard);

// Standalone diamond fill between a row of outgoing labels (a, read
// bottom to top) and a row of incoming labels (b).  Equal values cancel
// pairwise in crossing order; unequal values pass through a rung.
struct DiamondFill {
    PlanarMap fragment;                       // normalized; open ports remain
    std::vector<int> new_left, new_right;     // surviving labels, bottom -> top
    std::vector<int> a_ports, b_ports;        // entry ports (dead ones removed)
    std::vector<int> new_left_ports, new_right_ports;
};

DiamondFill fill_diamond(int n, const std::vector<int>& a_labels,
                         const std::vector<int>& b_labels);

TriangularDiagram product(const TriangularDiagram& A, const TriangularDiagram& B);

// Left-associated product of the length-one diagrams of the path steps.
// `variants` may be null (all Standard) or one entry per step.
TriangularDiagram from_path(const MinusculePath& mu, const VariantAssignment* variants = nullptr);

// Close the triangle into a web: boundary legs are the left slots
// (bottom to top), then the tops, then the right slots (top to bottom),
// with the marked corner in the apex sector.
Web to_web(const TriangularDiagram& T);

// Slot-order choices minimizing the vertex count of from_path over
// SL(4); one assignment per unconstrained choice pattern, two per
// linked opposite pair.
std::vector<VariantAssignment> sl4_select_variants(const MinusculePath& mu);

}  // namespace slweb

#endif
