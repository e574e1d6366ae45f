#include "slweb/triangles.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace slweb {

Weight TriangularDiagram::left_weight() const {
    Weight w = zero_weight(n);
    for (int l : left_labels) w = w + fundamental(n, l);
    return w;
}

Weight TriangularDiagram::right_weight() const {
    Weight w = zero_weight(n);
    for (int l : right_labels) w = w + fundamental(n, l);
    return w;
}

namespace {

struct Attachment {
    bool is_left;  // incoming slot on the left side
    int label;
};

std::vector<Attachment> attachment_sequence(const OrbitWeight& w, Variant v) {
    LrDecomposition d = decompose_lr(w);
    std::vector<Attachment> seq;
    size_t li = 0, ri = 0;
    bool take_r = d.r_first;
    while (li < d.l.size() || ri < d.r.size()) {
        if (take_r && ri < d.r.size())
            seq.push_back({false, d.r[ri++]});
        else if (!take_r && li < d.l.size())
            seq.push_back({true, d.l[li++]});
        take_r = !take_r;
    }
    if (v == Variant::Reversed) std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

TriangularDiagram length_one(int n, const OrbitWeight& w, Variant v) {
    if (w.n != n) throw std::invalid_argument("orbit weight rank mismatch");
    TriangularDiagram T;
    T.n = n;
    T.map = PlanarMap(n);
    auto seq = attachment_sequence(w, v);
    int m = static_cast<int>(seq.size());
    int k = w.orbit_class();

    auto register_side = [&](int port, const Attachment& a) {
        if (a.is_left) {
            T.left_ports.push_back(port);
            T.left_labels.push_back(a.label);
        } else {
            T.right_ports.push_back(port);
            T.right_labels.push_back(a.label);
        }
    };

    if (m == 1) {
        int side = T.map.add_vertex(PlanarMap::VertexKind::Port);
        int top = T.map.add_vertex(PlanarMap::VertexKind::Port);
        int e;
        if (seq[0].is_left)
            e = T.map.add_edge(side, top, seq[0].label);
        else
            e = T.map.add_edge(top, side, seq[0].label);
        T.map.set_rot(side, {seq[0].is_left ? 2 * e : 2 * e + 1});
        T.map.set_rot(top, {seq[0].is_left ? 2 * e + 1 : 2 * e});
        register_side(side, seq[0]);
        T.top_ports.push_back(top);
        return T;
    }

    // spine: vertices at attachments 1..m-1; attachment 0 is a bend
    std::vector<int> vert(m, -1);
    for (int i = 1; i < m; ++i) vert[i] = T.map.add_vertex(PlanarMap::VertexKind::Internal);
    struct Slots {
        int boundary = -1, up = -1, down = -1;
    };
    std::vector<Slots> slot(m);

    int f_prev = seq[0].label;
    int p0 = T.map.add_vertex(PlanarMap::VertexKind::Port);
    register_side(p0, seq[0]);
    {
        // first spine segment doubles as the first boundary slot's edge
        int e;
        if (seq[0].is_left)
            e = T.map.add_edge(p0, vert[1], f_prev);
        else
            e = T.map.add_edge(vert[1], p0, f_prev);
        T.map.set_rot(p0, {seq[0].is_left ? 2 * e : 2 * e + 1});
        slot[1].down = seq[0].is_left ? 2 * e + 1 : 2 * e;
    }
    for (int i = 1; i < m; ++i) {
        int vi = vert[i];
        // boundary slot edge
        int pi = T.map.add_vertex(PlanarMap::VertexKind::Port);
        register_side(pi, seq[i]);
        int eb;
        if (seq[i].is_left)
            eb = T.map.add_edge(pi, vi, seq[i].label);
        else
            eb = T.map.add_edge(vi, pi, seq[i].label);
        T.map.set_rot(pi, {seq[i].is_left ? 2 * eb : 2 * eb + 1});
        slot[i].boundary = seq[i].is_left ? 2 * eb + 1 : 2 * eb;

        // next segment (spine link or top edge)
        int f_cur = mod_index(seq[i].label - f_prev, n);
        bool up_out = seq[i].is_left;  // after a left slot the strand continues upward
        int next_node;
        if (i + 1 < m) {
            next_node = vert[i + 1];
        } else {
            next_node = T.map.add_vertex(PlanarMap::VertexKind::Port);
            T.top_ports.push_back(next_node);
        }
        int es;
        if (up_out)
            es = T.map.add_edge(vi, next_node, f_cur);
        else
            es = T.map.add_edge(next_node, vi, f_cur);
        slot[i].up = up_out ? 2 * es : 2 * es + 1;
        if (i + 1 < m)
            slot[i + 1].down = up_out ? 2 * es + 1 : 2 * es;
        else
            T.map.set_rot(next_node, {up_out ? 2 * es + 1 : 2 * es});
        f_prev = f_cur;
    }
    // sanity: the top slot reads the orbit class
    {
        int top = T.top_ports.back();
        int read = T.map.out_label(T.map.vertices[top].rot[0]);
        if (read != k) throw std::logic_error("length-one top slot does not read the orbit class");
    }
    // rotations: left vertex [boundary, up, down]; right vertex [up, boundary, down]
    for (int i = 1; i < m; ++i) {
        if (seq[i].is_left)
            T.map.set_rot(vert[i], {slot[i].boundary, slot[i].up, slot[i].down});
        else
            T.map.set_rot(vert[i], {slot[i].up, slot[i].boundary, slot[i].down});
    }
    return T;
}

namespace {

struct GridPorts {
    std::vector<int> a_entry, b_exit;          // all ports, bottom -> top
    std::vector<int> exit_ports, src_ports;    // surviving right / left ports
    std::vector<int> new_right, new_left;      // surviving labels
};

// Build the crossing grid between outgoing values a (bottom->top) and
// incoming values b, with fresh ports on all four sides.
GridPorts build_grid(PlanarMap& map, const std::vector<int>& a_vals,
                     const std::vector<int>& b_vals) {
    int n = map.n;
    int p = static_cast<int>(a_vals.size()), q = static_cast<int>(b_vals.size());
    GridPorts g;
    // value tables, 1-indexed
    std::vector<std::vector<int>> aIn(p + 2, std::vector<int>(q + 2, 0));
    std::vector<std::vector<int>> bIn(p + 2, std::vector<int>(q + 2, 0));
    std::vector<std::vector<char>> dead(p + 2, std::vector<char>(q + 2, 0));
    for (int diag = p + q; diag >= 2; --diag) {
        for (int s = std::min(p, diag - 1); s >= 1; --s) {
            int t = diag - s;
            if (t < 1 || t > q) continue;
            aIn[s][t] = (t == q) ? a_vals[s - 1] : (dead[s][t + 1] ? 0 : aIn[s][t + 1]);
            bIn[s][t] = (s == p) ? b_vals[t - 1] : (dead[s + 1][t] ? 0 : bIn[s + 1][t]);
            dead[s][t] = aIn[s][t] == bIn[s][t];
        }
    }
    // vertices and dart slots
    std::vector<std::vector<int>> U(p + 1, std::vector<int>(q + 1, -1));
    std::vector<std::vector<int>> L(p + 1, std::vector<int>(q + 1, -1));
    struct Slots {
        int a = -1, b = -1, rung = -1;
    };
    std::vector<std::vector<Slots>> us(p + 1, std::vector<Slots>(q + 1));
    std::vector<std::vector<Slots>> ls(p + 1, std::vector<Slots>(q + 1));
    for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= q; ++t) {
            U[s][t] = map.add_vertex(PlanarMap::VertexKind::Internal);
            L[s][t] = map.add_vertex(PlanarMap::VertexKind::Internal);
        }
    for (int s = 1; s <= p; ++s) {
        g.a_entry.push_back(map.add_vertex(PlanarMap::VertexKind::Port));
    }
    for (int t = 1; t <= q; ++t) {
        g.b_exit.push_back(map.add_vertex(PlanarMap::VertexKind::Port));
    }
    std::vector<int> exit_all(p + 1, -1), src_all(q + 1, -1);
    for (int s = 1; s <= p; ++s) exit_all[s] = map.add_vertex(PlanarMap::VertexKind::Port);
    for (int t = 1; t <= q; ++t) src_all[t] = map.add_vertex(PlanarMap::VertexKind::Port);

    // rungs
    for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= q; ++t) {
            int e = map.add_edge(L[s][t], U[s][t], mod_index(bIn[s][t] - aIn[s][t], n));
            ls[s][t].rung = 2 * e;
            us[s][t].rung = 2 * e + 1;
        }
    // a-line segments, flowing from the a side through the grid
    for (int s = 1; s <= p; ++s) {
        for (int t = q; t >= 1; --t) {
            int src = (t == q) ? g.a_entry[s - 1] : L[s][t + 1];
            int e = map.add_edge(src, U[s][t], aIn[s][t]);
            us[s][t].a = 2 * e + 1;
            if (t == q)
                map.set_rot(src, {2 * e});
            else
                ls[s][t + 1].a = 2 * e;
        }
        int exit_label = dead[s][1] ? 0 : aIn[s][1];
        int e = map.add_edge(L[s][1], exit_all[s], exit_label);
        ls[s][1].a = 2 * e;
        map.set_rot(exit_all[s], {2 * e + 1});
    }
    // b-line segments, flowing toward the b side
    for (int t = 1; t <= q; ++t) {
        for (int s = 1; s <= p; ++s) {
            int dst = (s == p) ? g.b_exit[t - 1] : L[s + 1][t];
            int e = map.add_edge(U[s][t], dst, bIn[s][t]);
            us[s][t].b = 2 * e;
            if (s == p)
                map.set_rot(dst, {2 * e + 1});
            else
                ls[s + 1][t].b = 2 * e + 1;
        }
        int src_label = dead[1][t] ? 0 : bIn[1][t];
        int e = map.add_edge(src_all[t], L[1][t], src_label);
        ls[1][t].b = 2 * e + 1;
        map.set_rot(src_all[t], {2 * e});
    }
    for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= q; ++t) {
            map.set_rot(U[s][t], {us[s][t].a, us[s][t].b, us[s][t].rung});
            map.set_rot(L[s][t], {ls[s][t].rung, ls[s][t].a, ls[s][t].b});
        }
    // survivors
    for (int s = 1; s <= p; ++s)
        if (!dead[s][1] && aIn[s][1] != 0) {
            g.exit_ports.push_back(exit_all[s]);
            g.new_right.push_back(aIn[s][1]);
        }
    for (int t = 1; t <= q; ++t)
        if (!dead[1][t] && bIn[1][t] != 0) {
            g.src_ports.push_back(src_all[t]);
            g.new_left.push_back(bIn[1][t]);
        }
    return g;
}

// append `other` into `base`; returns (vertex offset, edge offset)
std::pair<int, int> merge_map(PlanarMap& base, const PlanarMap& other) {
    int voff = static_cast<int>(base.vertices.size());
    int eoff = static_cast<int>(base.edges.size());
    for (const auto& v : other.vertices) {
        auto copy = v;
        for (int& d : copy.rot) d += 2 * eoff;
        base.vertices.push_back(std::move(copy));
    }
    for (const auto& e : other.edges) {
        auto copy = e;
        copy.tail += voff;
        copy.head += voff;
        base.edges.push_back(copy);
    }
    return {voff, eoff};
}

}  // namespace

DiamondFill fill_diamond(int n, const std::vector<int>& a_labels,
                         const std::vector<int>& b_labels) {
    DiamondFill out;
    out.fragment = PlanarMap(n);
    if (a_labels.empty() || b_labels.empty()) {
        // no crossings: strands pass straight through
        for (int l : a_labels) {
            int in = out.fragment.add_vertex(PlanarMap::VertexKind::Port);
            int ex = out.fragment.add_vertex(PlanarMap::VertexKind::Port);
            int e = out.fragment.add_edge(in, ex, l);
            out.fragment.set_rot(in, {2 * e});
            out.fragment.set_rot(ex, {2 * e + 1});
            out.a_ports.push_back(in);
            out.new_right_ports.push_back(ex);
            out.new_right.push_back(l);
        }
        for (int l : b_labels) {
            int src = out.fragment.add_vertex(PlanarMap::VertexKind::Port);
            int ex = out.fragment.add_vertex(PlanarMap::VertexKind::Port);
            int e = out.fragment.add_edge(src, ex, l);
            out.fragment.set_rot(src, {2 * e});
            out.fragment.set_rot(ex, {2 * e + 1});
            out.b_ports.push_back(ex);
            out.new_left_ports.push_back(src);
            out.new_left.push_back(l);
        }
        return out;
    }
    GridPorts g = build_grid(out.fragment, a_labels, b_labels);
    out.fragment.normalize();
    out.new_left = g.new_left;
    out.new_right = g.new_right;
    out.a_ports = g.a_entry;
    out.b_ports = g.b_exit;
    out.new_left_ports = g.src_ports;
    out.new_right_ports = g.exit_ports;
    return out;
}

TriangularDiagram product(const TriangularDiagram& A, const TriangularDiagram& B) {
    if (A.n != B.n) throw std::invalid_argument("product rank mismatch");
    TriangularDiagram R;
    R.n = A.n;
    R.map = A.map;
    auto [voff, eoff] = merge_map(R.map, B.map);
    auto shift = [&](std::vector<int> v) {
        for (int& x : v) x += voff;
        return v;
    };
    std::vector<int> b_left_ports = shift(B.left_ports);
    std::vector<int> b_right_ports = shift(B.right_ports);
    std::vector<int> b_top_ports = shift(B.top_ports);

    int p = static_cast<int>(A.right_labels.size());
    int q = static_cast<int>(B.left_labels.size());
    if (p == 0 || q == 0) {
        R.left_ports = b_left_ports;
        R.left_labels = B.left_labels;
        R.left_ports.insert(R.left_ports.end(), A.left_ports.begin(), A.left_ports.end());
        R.left_labels.insert(R.left_labels.end(), A.left_labels.begin(), A.left_labels.end());
        R.right_ports = A.right_ports;
        R.right_labels = A.right_labels;
        R.right_ports.insert(R.right_ports.end(), b_right_ports.begin(), b_right_ports.end());
        R.right_labels.insert(R.right_labels.end(), B.right_labels.begin(), B.right_labels.end());
    } else {
        GridPorts g = build_grid(R.map, A.right_labels, B.left_labels);
        for (int s = 0; s < p; ++s) R.map.splice_ports(A.right_ports[s], g.a_entry[s]);
        for (int t = 0; t < q; ++t) R.map.splice_ports(g.b_exit[t], b_left_ports[t]);
        R.left_ports = g.src_ports;
        R.left_labels = g.new_left;
        R.left_ports.insert(R.left_ports.end(), A.left_ports.begin(), A.left_ports.end());
        R.left_labels.insert(R.left_labels.end(), A.left_labels.begin(), A.left_labels.end());
        R.right_ports = g.exit_ports;
        R.right_labels = g.new_right;
        R.right_ports.insert(R.right_ports.end(), b_right_ports.begin(), b_right_ports.end());
        R.right_labels.insert(R.right_labels.end(), B.right_labels.begin(), B.right_labels.end());
    }
    R.top_ports = A.top_ports;
    R.top_ports.insert(R.top_ports.end(), b_top_ports.begin(), b_top_ports.end());
    R.map.normalize();
    return R;
}

TriangularDiagram from_path(const MinusculePath& mu, const VariantAssignment* variants) {
    int m = mu.length();
    if (m < 1) throw std::invalid_argument("path must have at least one step");
    if (variants && static_cast<int>(variants->size()) != m)
        throw std::invalid_argument("variant assignment length mismatch");
    auto step_orbit = [&](int i) {
        auto ow = to_orbit_weight(mu.step(i));
        if (!ow) throw std::invalid_argument("path step is not minuscule");
        return *ow;
    };
    TriangularDiagram T =
        length_one(mu.n, step_orbit(0), variants ? (*variants)[0] : Variant::Standard);
    for (int i = 1; i < m; ++i)
        T = product(T, length_one(mu.n, step_orbit(i),
                                  variants ? (*variants)[i] : Variant::Standard));
    return T;
}

Web to_web(const TriangularDiagram& T) {
    Web w;
    w.map = T.map;
    std::vector<int> reading = T.left_ports;
    reading.insert(reading.end(), T.top_ports.begin(), T.top_ports.end());
    for (auto it = T.right_ports.rbegin(); it != T.right_ports.rend(); ++it)
        reading.push_back(*it);
    attach_rim(w.map, reading);
    return w;
}

// ---------------- SL(4) slot-order selection ----------------

namespace {

bool is_wedge_window(const std::vector<Weight>& steps, int from, int to) {
    // partial sums of steps[from..to] all satisfy s1>=s2 and s3>=s4
    if (from > to) return true;
    Weight acc = zero_weight(4);
    for (int i = from; i <= to; ++i) {
        acc = acc + steps[i];
        if (acc.c[0] < acc.c[1] || acc.c[2] < acc.c[3]) return false;
    }
    return true;
}

// side multisets of the product of the steps' diagrams, evolved by the
// cancellation rule (variant-independent); counts indexed by label
std::pair<std::array<int, 4>, std::array<int, 4>> sequence_sides(const std::vector<Weight>& steps,
                                                                 int from, int to) {
    std::array<int, 4> left{0, 0, 0, 0}, right{0, 0, 0, 0};
    for (int i = from; i <= to; ++i) {
        auto ow = to_orbit_weight(steps[i]);
        if (!ow) throw std::invalid_argument("non-minuscule step");
        auto d = decompose_lr(*ow);
        for (int l : d.l) {
            if (right[l] > 0)
                --right[l];
            else
                ++left[l];
        }
        for (int r : d.r) ++right[r];
    }
    return {left, right};
}

const std::vector<int> kAmbA{1, 0, 1, 0};
const std::vector<int> kAmbB{0, 1, 0, 1};

// forward rule for an unpaired step equal to (1,0,1,0); returns the
// forced variant, or nullopt when the window reaches the end
std::optional<Variant> forward_single(const std::vector<Weight>& steps, int i) {
    int m = static_cast<int>(steps.size());
    int j = i;
    while (j + 1 < m && is_wedge_window(steps, i + 1, j + 1)) ++j;
    if (j + 1 >= m) return std::nullopt;
    auto [left, right] = sequence_sides(steps, i + 1, j + 1);
    int ori = left[1] + left[3];
    if (ori == 1) return left[1] ? Variant::Reversed : Variant::Standard;
    return std::nullopt;
}

}  // namespace

std::vector<VariantAssignment> sl4_select_variants(const MinusculePath& mu) {
    if (mu.n != 4) throw std::invalid_argument("variant selection is specific to rank 4");
    int m = mu.length();
    std::vector<Weight> steps;
    for (int i = 0; i < m; ++i) steps.push_back(mu.step(i));
    Weight ambA(4, kAmbA), ambB(4, kAmbB);

    VariantAssignment base(m, Variant::Standard);
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> in_pair(m, 0);

    // forward scan from each (1,0,1,0) step
    for (int i = 0; i < m; ++i) {
        if (steps[i] != ambA) continue;
        int j = i;
        while (j + 1 < m && is_wedge_window(steps, i + 1, j + 1)) ++j;
        if (j + 1 >= m) continue;
        auto [left, right] = sequence_sides(steps, i + 1, j + 1);
        int ori = left[1] + left[3];
        if (ori == 1) {
            base[i] = left[1] ? Variant::Reversed : Variant::Standard;
        } else if (ori == 2 && steps[j + 1] == ambB && !in_pair[i]) {
            pairs.push_back({i, j + 1});
            in_pair[i] = in_pair[j + 1] = 1;
        }
    }
    // mirrored rule for unpaired (0,1,0,1) steps: reversing and negating
    // the step sequence swaps the two slot lists of every length-one
    // diagram with identical index sets, so the forward rule applies
    // with the same label-to-variant mapping
    std::vector<Weight> mirrored(m, zero_weight(4));
    for (int i = 0; i < m; ++i) mirrored[i] = zero_weight(4) - steps[m - 1 - i];
    for (int i = 0; i < m; ++i) {
        if (steps[i] != ambB || in_pair[i]) continue;
        auto v = forward_single(mirrored, m - 1 - i);
        if (v) base[i] = *v;
    }

    std::vector<VariantAssignment> out;
    int np = static_cast<int>(pairs.size());
    for (int mask = 0; mask < (1 << np); ++mask) {
        VariantAssignment a = base;
        for (int pi = 0; pi < np; ++pi) {
            Variant v = (mask >> pi) & 1 ? Variant::Reversed : Variant::Standard;
            a[pairs[pi].first] = v;
            a[pairs[pi].second] = v;
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace slweb
