#ifndef SLWEB_PLANAR_MAP_HPP
#define SLWEB_PLANAR_MAP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace slweb {

// Combinatorial planar map with a rotation system.
//
// Edge e owns two darts: dart 2e sits at the tail and points toward the
// head; dart 2e+1 is its twin.  Each vertex stores the counterclockwise
// cyclic order of the darts leaving it.  Faces are the orbits of
//   next(d) = successor of twin(d) in the rotation at the head of d,
// so face_of(d) is the face on the right of d.
//
// Edge labels: 1..n-1 are fundamental-weight indices (an edge stored as
// (tail->head, i) equals (head->tail, n-i)); label 0 marks a transient
// edge that normalization deletes; RIM_LABEL marks disk-boundary arcs.
//
// A finished web carries a rim: the marked corner vertex M followed by
// the boundary attachment vertices in reading order, joined by rim
// arcs.  Reading order walks the rim with the disk interior on the
// left; a leg pointing into the disk with label i reads w_i, a leg
// pointing outward reads w_{n-i}.
class PlanarMap {
public:
    static constexpr int RIM_LABEL = -1;

    enum class VertexKind { Internal, Port, Rim };

    struct Edge {
        int tail = -1, head = -1;
        int label = 0;
        bool alive = false;
    };
    struct Vertex {
        std::vector<int> rot;  // darts out of this vertex, CCW
        VertexKind kind = VertexKind::Internal;
        bool alive = false;
    };

    int n = 0;                 // SL rank
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    std::vector<int> rim;      // vertex ids: [M, b_1, ..., b_k]; empty if no rim yet

    explicit PlanarMap(int rank = 0) : n(rank) {}

    // --- dart helpers ---
    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    int origin(int d) const {
        const Edge& e = edges[edge_of(d)];
        return (d & 1) ? e.head : e.tail;
    }
    int target(int d) const { return origin(twin(d)); }
    // label as seen flowing along dart d (away from origin(d))
    int out_label(int d) const {
        int l = edges[edge_of(d)].label;
        return (d & 1) ? (l == 0 ? 0 : n - l) : l;
    }
    // label as seen arriving at target(d); equals out_label(d)
    int in_label_at(int v, int d) const {
        // presented label of edge d at endpoint v, in incoming form
        return origin(d) == v ? (out_label(d) == 0 ? 0 : n - out_label(d)) : out_label(d);
    }

    bool is_rim_edge(int e) const { return edges[e].label == RIM_LABEL; }

    // --- construction ---
    int add_vertex(VertexKind kind);
    int add_edge(int tail, int head, int label);  // darts not yet in rotations
    void set_rot(int v, std::vector<int> darts);
    void append_dart(int v, int d) { vertices[v].rot.push_back(d); }

    int rot_next(int v, int d) const;  // cyclic successor of d in rot(v)
    int rot_prev(int v, int d) const;
    int face_next(int d) const { return rot_next(target(d), twin(d)); }

    // Replace dart `old_d` by `new_d` in the rotation at v, in place.
    void replace_dart(int v, int old_d, int new_d);
    void remove_dart(int v, int d);

    // Splice the edges incident to two univalent port vertices into one
    // edge; the flow value leaving port a must equal the value entering
    // port b.  Both ports die.
    void splice_ports(int port_a, int port_b);

    // Delete all label-0 edges, drop dead ports and isolated vertices,
    // and smooth 2-valent internal vertices.  Throws on a 2-valent
    // vertex whose presented labels are inconsistent or that closes a
    // free loop.
    void normalize();

    // --- queries ---
    int degree(int v) const { return static_cast<int>(vertices[v].rot.size()); }
    int count_vertices(VertexKind kind) const;
    int count_web_edges() const;
    std::vector<int> alive_edge_ids() const;

    struct Faces {
        int count = 0;
        std::vector<int> face_of;            // dart -> face id (-1 for dead darts)
        std::vector<std::vector<int>> orbit; // face id -> darts in orbit order
    };
    Faces faces() const;

    // Deterministic certificate of the rooted map up to relabelling and
    // per-edge (i, tail->head) ~ (n-i, head->tail) flips.  Two maps with
    // rims are isomorphic preserving the marked corner iff their
    // certificates coincide.
    std::string canonical_certificate() const;

    // structural sanity: twins, rotations, Euler formula, rim shape
    std::vector<std::string> structural_errors() const;

private:
    void smooth_vertex(int v);
};

}  // namespace slweb

#endif
