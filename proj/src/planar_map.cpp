#include "slweb/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace slweb {

int PlanarMap::add_vertex(VertexKind kind) {
    vertices.push_back(Vertex{{}, kind, true});
    return static_cast<int>(vertices.size()) - 1;
}

int PlanarMap::add_edge(int tail, int head, int label) {
    edges.push_back(Edge{tail, head, label, true});
    return static_cast<int>(edges.size()) - 1;
}

void PlanarMap::set_rot(int v, std::vector<int> darts) { vertices[v].rot = std::move(darts); }

int PlanarMap::rot_next(int v, int d) const {
    const auto& r = vertices[v].rot;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == d) return r[(i + 1) % r.size()];
    throw std::logic_error("dart not found in rotation");
}

int PlanarMap::rot_prev(int v, int d) const {
    const auto& r = vertices[v].rot;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == d) return r[(i + r.size() - 1) % r.size()];
    throw std::logic_error("dart not found in rotation");
}

void PlanarMap::replace_dart(int v, int old_d, int new_d) {
    for (int& d : vertices[v].rot)
        if (d == old_d) { d = new_d; return; }
    throw std::logic_error("dart to replace not found");
}

void PlanarMap::remove_dart(int v, int d) {
    auto& r = vertices[v].rot;
    auto it = std::find(r.begin(), r.end(), d);
    if (it == r.end()) throw std::logic_error("dart to remove not found");
    r.erase(it);
}

void PlanarMap::splice_ports(int port_a, int port_b) {
    if (vertices[port_a].rot.size() != 1 || vertices[port_b].rot.size() != 1)
        throw std::logic_error("splice requires univalent ports");
    int da = vertices[port_a].rot[0];
    int db = vertices[port_b].rot[0];
    int ea = edge_of(da), eb = edge_of(db);
    if (ea == eb) throw std::logic_error("cannot splice an edge to itself");
    // strand continuity: value arriving at port_a = value leaving port_b
    int arrive = in_label_at(port_a, da);
    int leave = out_label(db);
    if (arrive != leave)
        throw std::logic_error("splice label mismatch: " + std::to_string(arrive) + " vs " +
                               std::to_string(leave));

    int far_b = target(db);
    int far_b_old_dart = twin(db);
    if (edges[ea].head == port_a) {
        edges[ea].head = far_b;
        replace_dart(far_b, far_b_old_dart, 2 * ea + 1);
    } else {
        edges[ea].tail = far_b;
        replace_dart(far_b, far_b_old_dart, 2 * ea);
    }
    edges[eb].alive = false;
    vertices[port_a].alive = false;
    vertices[port_a].rot.clear();
    vertices[port_b].alive = false;
    vertices[port_b].rot.clear();
}

void PlanarMap::smooth_vertex(int v) {
    int d1 = vertices[v].rot[0], d2 = vertices[v].rot[1];
    int e1 = edge_of(d1), e2 = edge_of(d2);
    if (e1 == e2) throw std::runtime_error("normalize: free loop at 2-valent vertex");
    int in1 = in_label_at(v, d1), in2 = in_label_at(v, d2);
    if ((in1 + in2) % n != 0)
        throw std::runtime_error("normalize: inconsistent labels at a 2-valent vertex");
    int far1 = (edges[e1].tail == v) ? edges[e1].head : edges[e1].tail;
    int far2 = (edges[e2].tail == v) ? edges[e2].head : edges[e2].tail;
    if (far1 == v || far2 == v)
        throw std::runtime_error("normalize: loop edge at 2-valent vertex");
    int far2_old_dart = (edges[e2].tail == v) ? 2 * e2 + 1 : 2 * e2;
    if (edges[e1].head == v) {
        edges[e1].head = far2;
        replace_dart(far2, far2_old_dart, 2 * e1 + 1);
    } else {
        edges[e1].tail = far2;
        replace_dart(far2, far2_old_dart, 2 * e1);
    }
    edges[e2].alive = false;
    vertices[v].alive = false;
    vertices[v].rot.clear();
}

void PlanarMap::normalize() {
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!edges[e].alive || edges[e].label != 0) continue;
        remove_dart(edges[e].tail, 2 * static_cast<int>(e));
        remove_dart(edges[e].head, 2 * static_cast<int>(e) + 1);
        edges[e].alive = false;
    }
    for (auto& v : vertices)
        if (v.alive && v.kind != VertexKind::Rim && v.rot.empty()) v.alive = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < vertices.size(); ++v) {
            if (!vertices[v].alive || vertices[v].kind != VertexKind::Internal) continue;
            if (vertices[v].rot.size() == 2) {
                smooth_vertex(static_cast<int>(v));
                changed = true;
            }
        }
    }
}

int PlanarMap::count_vertices(VertexKind kind) const {
    int c = 0;
    for (const auto& v : vertices)
        if (v.alive && v.kind == kind) ++c;
    return c;
}

int PlanarMap::count_web_edges() const {
    int c = 0;
    for (const auto& e : edges)
        if (e.alive && e.label != RIM_LABEL) ++c;
    return c;
}

std::vector<int> PlanarMap::alive_edge_ids() const {
    std::vector<int> out;
    for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].alive) out.push_back(static_cast<int>(e));
    return out;
}

PlanarMap::Faces PlanarMap::faces() const {
    Faces f;
    f.face_of.assign(2 * edges.size(), -1);
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!edges[e].alive) continue;
        for (int s = 0; s < 2; ++s) {
            int d0 = 2 * static_cast<int>(e) + s;
            if (f.face_of[d0] != -1) continue;
            int id = f.count++;
            f.orbit.emplace_back();
            int d = d0;
            do {
                f.face_of[d] = id;
                f.orbit[id].push_back(d);
                d = face_next(d);
            } while (d != d0);
        }
    }
    return f;
}

std::string PlanarMap::canonical_certificate() const {
    std::string cert = "n" + std::to_string(n) + ";";
    int root_dart = -1;
    if (rim.size() >= 2) {
        int m = rim[0];
        for (int d : vertices[m].rot)
            if (is_rim_edge(edge_of(d)) && target(d) == rim[1]) { root_dart = d; break; }
    }
    if (root_dart == -1) {
        for (size_t e = 0; e < edges.size() && root_dart == -1; ++e)
            if (edges[e].alive) root_dart = 2 * static_cast<int>(e);
    }
    if (root_dart == -1) return cert + "empty";

    std::vector<int> vnum(vertices.size(), -1);
    std::vector<int> enum_(edges.size(), -1);
    int next_v = 0, next_e = 0;
    std::vector<int> queue;
    vnum[origin(root_dart)] = next_v++;
    queue.push_back(root_dart);
    size_t qi = 0;
    while (qi < queue.size()) {
        int d = queue[qi++];
        int e = edge_of(d);
        int v = origin(d), w = target(d);
        if (enum_[e] == -1) enum_[e] = next_e++;
        bool new_vertex = vnum[w] == -1;
        if (new_vertex) vnum[w] = next_v++;
        int l = edges[e].label;
        std::string lab;
        if (l == RIM_LABEL) {
            lab = "R";
        } else if (l == 0) {
            lab = "0";
        } else if (2 * l == n) {
            lab = std::to_string(l) + "u";
        } else {
            int lc = std::min(l, n - l);
            bool with_flow = (l < n - l) == ((d & 1) == 0);
            lab = std::to_string(lc) + (with_flow ? "f" : "b");
        }
        cert += std::to_string(vnum[v]) + ">" + std::to_string(vnum[w]) + ":" + lab + "#" +
                std::to_string(enum_[e]) + ";";
        if (new_vertex) {
            const auto& r = vertices[w].rot;
            size_t pos = 0;
            for (size_t i = 0; i < r.size(); ++i)
                if (r[i] == twin(d)) { pos = i; break; }
            for (size_t i = 1; i < r.size(); ++i) queue.push_back(r[(pos + i) % r.size()]);
        }
    }
    return cert;
}

std::vector<std::string> PlanarMap::structural_errors() const {
    std::vector<std::string> errs;
    std::vector<int> seen(2 * edges.size(), 0);
    for (size_t v = 0; v < vertices.size(); ++v) {
        if (!vertices[v].alive) continue;
        for (int d : vertices[v].rot) {
            if (d < 0 || d >= static_cast<int>(2 * edges.size()) || !edges[edge_of(d)].alive) {
                errs.push_back("vertex " + std::to_string(v) + " holds a dead dart");
                continue;
            }
            if (origin(d) != static_cast<int>(v))
                errs.push_back("dart " + std::to_string(d) + " listed at a non-origin vertex");
            ++seen[d];
        }
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!edges[e].alive) continue;
        for (int s = 0; s < 2; ++s)
            if (seen[2 * e + s] != 1)
                errs.push_back("dart " + std::to_string(2 * e + s) + " appears " +
                               std::to_string(seen[2 * e + s]) + " times in rotations");
    }
    if (!errs.empty()) return errs;

    int E = 0;
    for (const auto& e : edges) E += e.alive ? 1 : 0;
    if (E > 0) {
        std::vector<int> parent(vertices.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : edges)
            if (e.alive) parent[find(e.tail)] = find(e.head);
        int comps = 0, attached = 0;
        std::vector<char> root_seen(vertices.size(), 0);
        for (size_t v = 0; v < vertices.size(); ++v) {
            if (!vertices[v].alive || vertices[v].rot.empty()) continue;
            ++attached;
            int r = find(static_cast<int>(v));
            if (!root_seen[r]) { root_seen[r] = 1; ++comps; }
        }
        if (comps > 1)
            errs.push_back("map is disconnected (" + std::to_string(comps) +
                           " components); every component must reach the rim");
        if (comps == 1 && attached - E + faces().count != 2)
            errs.push_back("rotation system violates the Euler formula");
    }
    if (!rim.empty()) {
        if (vertices[rim[0]].kind != VertexKind::Rim)
            errs.push_back("marked vertex is not a rim vertex");
        for (size_t i = 1; i < rim.size(); ++i)
            if (vertices[rim[i]].kind != VertexKind::Rim || degree(rim[i]) != 3)
                errs.push_back("rim vertex " + std::to_string(rim[i]) + " is malformed");
    }
    return errs;
}

}  // namespace slweb
