#include "slweb/web.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace slweb {

std::vector<Web::Leg> Web::legs() const {
    std::vector<Leg> out;
    for (size_t i = 1; i < map.rim.size(); ++i) {
        int b = map.rim[i];
        Leg leg;
        leg.vertex = b;
        for (int d : map.vertices[b].rot) {
            int e = PlanarMap::edge_of(d);
            if (map.is_rim_edge(e)) continue;
            leg.edge = e;
            leg.inward = map.edges[e].tail == b;
            leg.read = leg.inward ? map.edges[e].label : map.n - map.edges[e].label;
        }
        if (leg.edge == -1) throw std::logic_error("rim vertex without a leg");
        out.push_back(leg);
    }
    return out;
}

std::vector<int> Web::boundary() const {
    std::vector<int> out;
    for (const auto& l : legs()) out.push_back(l.read);
    return out;
}

void attach_rim(PlanarMap& map, const std::vector<int>& ports) {
    int m = map.add_vertex(PlanarMap::VertexKind::Rim);
    map.rim.clear();
    map.rim.push_back(m);
    for (int p : ports) {
        map.vertices[p].kind = PlanarMap::VertexKind::Rim;
        map.rim.push_back(p);
    }
    int k = static_cast<int>(ports.size());
    if (k == 0) return;
    std::vector<int> arc(k + 1);
    for (int i = 0; i <= k; ++i) {
        int from = map.rim[i];
        int to = map.rim[(i + 1) % (k + 1)];
        arc[i] = map.add_edge(from, to, PlanarMap::RIM_LABEL);
    }
    // rotation at each rim vertex: [ahead, leg, back], CCW
    for (int i = 0; i <= k; ++i) {
        int v = map.rim[i];
        int ahead = 2 * arc[i];                          // dart v -> next
        int back = 2 * arc[(i + k) % (k + 1)] + 1;       // dart v -> previous
        if (i == 0) {
            map.set_rot(v, {ahead, back});
        } else {
            int leg = map.vertices[v].rot.at(0);
            map.set_rot(v, {ahead, leg, back});
        }
    }
}

ValidationReport validate(const Web& w) {
    ValidationReport rep;
    rep.problems = w.map.structural_errors();
    if (!rep.problems.empty()) return rep;
    if (w.map.rim.empty()) {
        rep.problems.push_back("web has no rim / marked corner");
        return rep;
    }
    for (size_t v = 0; v < w.map.vertices.size(); ++v) {
        const auto& vert = w.map.vertices[v];
        if (!vert.alive || vert.kind != PlanarMap::VertexKind::Internal) continue;
        int in_sum = 0;
        for (int d : vert.rot) in_sum += w.map.in_label_at(static_cast<int>(v), d);
        if (in_sum % w.n() != 0)
            rep.problems.push_back("vertex " + std::to_string(v) + " violates mod-n balance");
        if (vert.rot.size() != 3)
            rep.problems.push_back("internal vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(vert.rot.size()));
    }
    for (const auto& leg : w.legs())
        if (w.map.edges[leg.edge].label < 1 || w.map.edges[leg.edge].label > w.n() - 1)
            rep.problems.push_back("boundary leg carries label " +
                                   std::to_string(w.map.edges[leg.edge].label));
    return rep;
}

bool isomorphic(const Web& a, const Web& b) {
    if (a.n() != b.n()) return false;
    return a.map.canonical_certificate() == b.map.canonical_certificate();
}

std::vector<int> internal_face_degrees(const Web& w) {
    auto faces = w.map.faces();
    std::vector<int> out;
    for (int f = 0; f < faces.count; ++f) {
        bool touches_rim = false;
        int deg = 0;
        for (int d : faces.orbit[f]) {
            if (w.map.is_rim_edge(PlanarMap::edge_of(d)))
                touches_rim = true;
            else
                ++deg;
        }
        if (!touches_rim) out.push_back(deg);
    }
    return out;
}

// ---------------- serialization ----------------

std::string to_json(const Web& w) {
    nlohmann::ordered_json j;
    j["n"] = w.n();
    // consecutive ids for alive non-marked vertices and web edges
    std::map<int, int> vid, eid;
    for (size_t v = 0; v < w.map.vertices.size(); ++v) {
        const auto& vert = w.map.vertices[v];
        if (!vert.alive) continue;
        if (static_cast<int>(v) == w.marked_vertex()) continue;
        if (vert.kind == PlanarMap::VertexKind::Port)
            throw std::logic_error("cannot serialize a web with open ports");
        vid[static_cast<int>(v)] = static_cast<int>(vid.size());
    }
    for (size_t e = 0; e < w.map.edges.size(); ++e)
        if (w.map.edges[e].alive && !w.map.is_rim_edge(static_cast<int>(e)))
            eid[static_cast<int>(e)] = static_cast<int>(eid.size());

    auto dart_id = [&](int d) { return 2 * eid.at(PlanarMap::edge_of(d)) + (d & 1); };

    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& [v, id] : vid) {
        nlohmann::ordered_json jv;
        jv["id"] = id;
        std::vector<int> rot;
        for (int d : w.map.vertices[v].rot)
            if (!w.map.is_rim_edge(PlanarMap::edge_of(d))) rot.push_back(dart_id(d));
        jv["rotation"] = rot;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [e, id] : eid) {
        nlohmann::ordered_json je;
        je["id"] = id;
        je["tail"] = vid.at(w.map.edges[e].tail);
        je["head"] = vid.at(w.map.edges[e].head);
        je["label"] = w.map.edges[e].label;
        j["edges"].push_back(je);
    }
    // the marked corner immediately precedes the first-read leg
    auto ls = w.legs();
    if (!ls.empty()) {
        const auto& first = ls.front();
        j["marked"] = dart_id(first.inward ? 2 * first.edge : 2 * first.edge + 1);
    } else {
        j["marked"] = nullptr;
    }
    std::vector<int> order;
    for (const auto& l : ls) order.push_back(vid.at(l.vertex));
    j["boundary_order"] = order;
    return j.dump(2) + "\n";
}

Web web_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    if (n < 2) throw std::invalid_argument("web json: n must be >= 2");
    PlanarMap map(n);
    std::vector<int> boundary_order = j.at("boundary_order").get<std::vector<int>>();
    std::set<int> boundary_set(boundary_order.begin(), boundary_order.end());

    size_t nv = j.at("vertices").size();
    std::vector<int> vmap(nv, -1);
    for (const auto& jv : j.at("vertices")) {
        int id = jv.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(nv)) throw std::invalid_argument("web json: bad vertex id");
        vmap[id] = map.add_vertex(boundary_set.count(id) ? PlanarMap::VertexKind::Port
                                                         : PlanarMap::VertexKind::Internal);
    }
    size_t ne = j.at("edges").size();
    std::vector<int> emap(ne, -1);
    for (const auto& je : j.at("edges")) {
        int id = je.at("id").get<int>();
        int label = je.at("label").get<int>();
        if (label < 0 || label >= n) throw std::invalid_argument("web json: bad edge label");
        emap[id] = map.add_edge(vmap.at(je.at("tail").get<int>()),
                                vmap.at(je.at("head").get<int>()), label);
    }
    for (const auto& jv : j.at("vertices")) {
        int id = jv.at("id").get<int>();
        std::vector<int> rot;
        for (int d : jv.at("rotation").get<std::vector<int>>())
            rot.push_back(2 * emap.at(d >> 1) + (d & 1));
        map.set_rot(vmap[id], rot);
    }
    std::vector<int> ports;
    for (int b : boundary_order) ports.push_back(vmap.at(b));
    attach_rim(map, ports);
    Web w{std::move(map)};
    // when present, the marked half-edge must name the first leg read
    if (j.contains("marked") && !j.at("marked").is_null() && !ports.empty()) {
        auto ls = w.legs();
        int expect = ls.front().inward ? 2 * ls.front().edge : 2 * ls.front().edge + 1;
        int declared = j.at("marked").get<int>();
        if (declared < 0 || (declared >> 1) >= static_cast<int>(ne))
            throw std::invalid_argument("web json: marked half-edge out of range");
        // translate through the emitted edge numbering
        int declared_local = 2 * emap.at(declared >> 1) + (declared & 1);
        if (declared_local != expect)
            throw std::invalid_argument(
                "web json: marked corner disagrees with boundary_order");
    }
    return w;
}

std::string to_dot(const Web& w) {
    std::ostringstream os;
    os << "digraph web {\n  rankdir=TB;\n  node [shape=point];\n";
    for (size_t v = 0; v < w.map.vertices.size(); ++v) {
        const auto& vert = w.map.vertices[v];
        if (!vert.alive) continue;
        if (vert.kind == PlanarMap::VertexKind::Rim) {
            if (static_cast<int>(v) == w.marked_vertex())
                os << "  v" << v << " [shape=point, color=black, width=0.12];\n";
            else
                os << "  v" << v << " [shape=circle, label=\"\", width=0.08];\n";
        }
    }
    for (size_t e = 0; e < w.map.edges.size(); ++e) {
        const auto& ed = w.map.edges[e];
        if (!ed.alive) continue;
        if (w.map.is_rim_edge(static_cast<int>(e))) {
            os << "  v" << ed.tail << " -> v" << ed.head << " [style=dotted, arrowhead=none];\n";
        } else {
            os << "  v" << ed.tail << " -> v" << ed.head << " [label=\"w" << ed.label << "\"";
            if (2 * ed.label == w.n()) os << ", penwidth=2, arrowhead=none";
            os << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_tikz(const Web& w) {
    // circle layout for the rim, iterative barycentric placement inside
    const double pi = 3.14159265358979323846;
    size_t nvert = w.map.vertices.size();
    std::vector<double> x(nvert, 0.0), y(nvert, 0.0);
    std::vector<bool> fixed(nvert, false);
    int k = w.leg_count();
    double r = 2.5;
    if (w.marked_vertex() >= 0) {
        x[w.marked_vertex()] = r * std::cos(-pi / 2);
        y[w.marked_vertex()] = r * std::sin(-pi / 2);
        fixed[w.marked_vertex()] = true;
    }
    for (int i = 1; i <= k; ++i) {
        int v = w.map.rim[i];
        double th = -pi / 2 + 2 * pi * i / (k + 1);
        x[v] = r * std::cos(th);
        y[v] = r * std::sin(th);
        fixed[v] = true;
    }
    for (int it = 0; it < 120; ++it) {
        for (size_t v = 0; v < nvert; ++v) {
            if (!w.map.vertices[v].alive || fixed[v] || w.map.vertices[v].rot.empty()) continue;
            double sx = 0, sy = 0;
            int c = 0;
            for (int d : w.map.vertices[v].rot) {
                int u = w.map.target(d);
                sx += x[u];
                sy += y[u];
                ++c;
            }
            x[v] = sx / c;
            y[v] = sy / c;
        }
    }
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "\\begin{tikzpicture}[ar/.style={postaction={decorate,decoration={markings,"
          "mark=at position .5 with {\\arrow{>}}}}},scale=0.8]\n";
    os << "\\draw (0,0) circle(" << r << ");\n";
    os << "\\fill (" << x[w.marked_vertex()] << "," << y[w.marked_vertex()] << ") circle(2.5pt);\n";
    for (size_t e = 0; e < w.map.edges.size(); ++e) {
        const auto& ed = w.map.edges[e];
        if (!ed.alive || w.map.is_rim_edge(static_cast<int>(e))) continue;
        bool self_dual = 2 * ed.label == w.n();
        os << "\\draw[" << (self_dual ? "double" : "ar") << "] (" << x[ed.tail] << ","
           << y[ed.tail] << ") -- (" << x[ed.head] << "," << y[ed.head] << ")";
        if (!self_dual)
            os << " node[midway,auto,inner sep=1pt] {$\\omega_" << ed.label << "$}";
        os << ";\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace slweb
