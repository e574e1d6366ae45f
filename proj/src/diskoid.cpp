#include "slweb/diskoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace slweb {

DualDiskoid dual_diskoid(const Web& w) {
    DualDiskoid d;
    d.n = w.n();
    const PlanarMap& m = w.map;
    int k = w.leg_count();
    if (k == 0) {
        // no legs: a single sector and no dual edges
        d.vertex_count = 1;
        d.marked = 0;
        d.external = {0};
        d.is_sector = {true};
        return d;
    }
    auto faces = m.faces();

    // rim arc i runs rim[i] -> rim[i+1 mod k+1]; its backward dart lies in
    // the sector between legs i and i+1 (sector 0 holds the marked corner)
    std::vector<int> rim_arc(k + 1, -1);
    for (size_t e = 0; e < m.edges.size(); ++e) {
        if (!m.edges[e].alive || !m.is_rim_edge(static_cast<int>(e))) continue;
        for (int i = 0; i <= k; ++i)
            if (m.edges[e].tail == m.rim[i] && m.edges[e].head == m.rim[(i + 1) % (k + 1)])
                rim_arc[i] = static_cast<int>(e);
    }
    int exterior = faces.face_of[2 * rim_arc[0]];

    std::vector<int> face_to_dual(faces.count, -1);
    auto dual_id = [&](int f) {
        if (face_to_dual[f] == -1) {
            face_to_dual[f] = d.vertex_count++;
            d.is_sector.push_back(false);
        }
        return face_to_dual[f];
    };
    // sectors first so ids are stable: marked sector, then v_1..v_{k-1}
    d.marked = dual_id(faces.face_of[2 * rim_arc[0] + 1]);
    d.is_sector[d.marked] = true;
    d.external.push_back(d.marked);
    for (int i = 1; i < k; ++i) {
        int s = dual_id(faces.face_of[2 * rim_arc[i] + 1]);
        d.is_sector[s] = true;
        d.external.push_back(s);
    }
    d.external.push_back(d.marked);
    if (faces.face_of[2 * rim_arc[k] + 1] != faces.face_of[2 * rim_arc[0] + 1])
        throw std::logic_error("marked sector mismatch around the rim");

    for (size_t e = 0; e < m.edges.size(); ++e) {
        if (!m.edges[e].alive || m.is_rim_edge(static_cast<int>(e))) continue;
        int f_right = faces.face_of[2 * static_cast<int>(e)];
        int f_left = faces.face_of[2 * static_cast<int>(e) + 1];
        if (f_left == exterior || f_right == exterior)
            throw std::logic_error("web edge touches the exterior face");
        d.edges.push_back({dual_id(f_left), dual_id(f_right), m.edges[e].label,
                           static_cast<int>(e)});
    }
    return d;
}

namespace {

// insert cand into an antichain of minimal weights; true if it changed
bool antichain_insert(std::vector<Weight>& set, const Weight& cand) {
    for (const auto& w : set) {
        Ordering o = dominance_compare(w, cand);
        if (o == Ordering::Equal || o == Ordering::Less) return false;  // dominated
    }
    set.erase(std::remove_if(set.begin(), set.end(),
                             [&](const Weight& w) {
                                 return dominance_compare(cand, w) == Ordering::Less;
                             }),
              set.end());
    set.push_back(cand);
    std::sort(set.begin(), set.end());
    return true;
}

}  // namespace

std::vector<DistanceAntichain> distances_from(const DualDiskoid& d, int src) {
    std::vector<std::vector<std::pair<int, int>>> adj(d.vertex_count);  // (neighbor, cost label)
    for (const auto& e : d.edges) {
        adj[e.from].push_back({e.to, e.label});
        adj[e.to].push_back({e.from, e.label == 0 ? 0 : d.n - e.label});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<std::vector<Weight>> anti(d.vertex_count);
    anti[src] = {zero_weight(d.n)};
    std::deque<int> queue{src};
    std::vector<bool> queued(d.vertex_count, false);
    queued[src] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        queued[u] = false;
        for (const auto& [v, cost] : adj[u]) {
            Weight step = fundamental(d.n, cost);
            bool changed = false;
            for (const auto& w : anti[u])
                if (antichain_insert(anti[v], w + step)) changed = true;
            if (changed && !queued[v]) {
                queue.push_back(v);
                queued[v] = true;
            }
        }
    }
    std::vector<DistanceAntichain> out(d.vertex_count);
    for (int v = 0; v < d.vertex_count; ++v) out[v] = {src, v, anti[v]};
    return out;
}

DistanceAntichain distance_antichain(const DualDiskoid& d, int src, int dst) {
    if (src < 0 || src >= d.vertex_count || dst < 0 || dst >= d.vertex_count)
        throw std::invalid_argument("dual vertex out of range");
    return distances_from(d, src)[dst];
}

static std::string antichain_str(const DistanceAntichain& a) {
    std::string s = "{";
    for (size_t i = 0; i < a.minima.size(); ++i) {
        if (i) s += ", ";
        s += a.minima[i].str();
    }
    return s + "}";
}

CoherenceReport is_coherent(const Web& w) {
    CoherenceReport rep;
    DualDiskoid d = dual_diskoid(w);
    auto from_marked = distances_from(d, d.marked);

    rep.cond1 = true;
    for (int v = 0; v < d.vertex_count; ++v) {
        if (from_marked[v].minima.empty()) {
            rep.cond1 = false;
            rep.detail = "vertex " + std::to_string(v) + " unreachable";
            break;
        }
        if (!from_marked[v].singleton()) {
            rep.cond1 = false;
            rep.detail = "vertex " + std::to_string(v) + " has incomparable geodesic weights " +
                         antichain_str(from_marked[v]);
            break;
        }
    }

    // cond2: every internal face has an additive geodesic witness through
    // it to some external vertex
    rep.cond2 = rep.cond1;
    if (rep.cond1) {
        for (int u = 0; u < d.vertex_count && rep.cond2; ++u) {
            if (d.is_sector[u]) continue;
            auto from_u = distances_from(d, u);
            bool witnessed = false;
            for (int vi : d.external) {
                for (const auto& w2 : from_u[vi].minima)
                    if (from_marked[u].minima[0] + w2 == from_marked[vi].minima[0]) {
                        witnessed = true;
                        break;
                    }
                if (witnessed) break;
            }
            if (!witnessed) {
                rep.cond2 = false;
                rep.detail = "internal face " + std::to_string(u) +
                             " lies on no marked-to-boundary geodesic";
            }
        }
    }

    rep.cond3 = rep.cond1;
    if (rep.cond1) {
        for (const auto& e : d.edges) {
            Weight delta = from_marked[e.to].minima[0] - from_marked[e.from].minima[0];
            auto cls = orbit_class(delta);
            if (!cls || *cls != e.label) {
                rep.cond3 = false;
                rep.detail = "dual edge on web edge " + std::to_string(e.web_edge) +
                             " steps by " + delta.str() + ", not in the orbit of w" +
                             std::to_string(e.label);
                break;
            }
        }
    }

    if (rep.coherent()) {
        MinusculePath p;
        p.n = w.n();
        for (int vi : d.external) p.points.push_back(from_marked[vi].minima[0]);
        rep.associated = std::move(p);
    }
    return rep;
}

MinusculePath associated_path(const Web& w) {
    DualDiskoid d = dual_diskoid(w);
    auto from_marked = distances_from(d, d.marked);
    MinusculePath p;
    p.n = w.n();
    for (int vi : d.external) {
        if (!from_marked[vi].singleton())
            throw std::runtime_error("web is incoherent: antichain at external vertex is " +
                                     antichain_str(from_marked[vi]));
        p.points.push_back(from_marked[vi].minima[0]);
    }
    return p;
}

}  // namespace slweb
