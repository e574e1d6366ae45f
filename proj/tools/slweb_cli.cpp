// Command-line front end: enumerate minuscule paths, grow basis webs,
// check coherence, evaluate invariant vectors and certify ranks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "slweb/diskoid.hpp"
#include "slweb/evaluation.hpp"
#include "slweb/littelmann.hpp"
#include "slweb/triangles.hpp"
#include "slweb/web.hpp"
#include "slweb/weights.hpp"

namespace {

using namespace slweb;

std::vector<int> parse_boundary(const std::string& s, int n) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == 'w' || tok[0] == 'W') tok = tok.substr(1);
        int k = std::stoi(tok);
        if (k < 1 || k > n - 1) throw CLI::ValidationError("boundary index out of range: " + tok);
        out.push_back(k);
    }
    if (out.empty()) throw CLI::ValidationError("empty boundary");
    return out;
}

// accepts "w2", "w1+w3", or a raw coordinate list "2,1,1,0"
Weight parse_weight(const std::string& s, int n) {
    if (!s.empty() && (s[0] == 'w' || s[0] == 'W' || s[0] == '0')) {
        Weight acc = zero_weight(n);
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '+')) {
            if (tok.empty() || tok == "0") continue;
            if (tok[0] == 'w' || tok[0] == 'W') tok = tok.substr(1);
            acc = acc + fundamental(n, std::stoi(tok));
        }
        return acc;
    }
    std::vector<int> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
    return canonicalize(n, c);
}

std::string path_json(const MinusculePath& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.points.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < p.n; ++j) {
            if (j) s += ",";
            s += std::to_string(p.points[i].c[j]);
        }
        s += "]";
    }
    return s + "]";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string render(const Web& w, const std::string& fmt) {
    if (fmt == "json") return to_json(w);
    if (fmt == "dot") return to_dot(w);
    if (fmt == "tikz") return to_tikz(w);
    throw CLI::ValidationError("unknown render format: " + fmt);
}

std::string subset_str(unsigned mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        if (!(mask >> (i - 1) & 1)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::vector<VariantAssignment> assignments_for(const MinusculePath& mu,
                                               const std::string& policy) {
    int m = mu.length();
    if (policy == "default") return {VariantAssignment(m, Variant::Standard)};
    if (policy == "sl4-minimal") return sl4_select_variants(mu);
    if (policy == "all") {
        // every choice on steps whose orbit admits two slot orders
        std::vector<int> free_steps;
        for (int i = 0; i < m; ++i) {
            auto ow = to_orbit_weight(mu.step(i));
            auto d = decompose_lr(*ow);
            if (d.l.size() + d.r.size() >= 3) free_steps.push_back(i);
        }
        std::vector<VariantAssignment> out;
        for (int mask = 0; mask < (1 << free_steps.size()); ++mask) {
            VariantAssignment a(m, Variant::Standard);
            for (size_t b = 0; b < free_steps.size(); ++b)
                if (mask >> b & 1) a[free_steps[b]] = Variant::Reversed;
            out.push_back(std::move(a));
        }
        return out;
    }
    throw CLI::ValidationError("unknown variant policy: " + policy);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"basis webs for invariant spaces of minuscule SL(n) representations"};
    app.require_subcommand(1);

    int n = 0;
    std::string boundary_s, endpoint_s = "0", out_dir = ".", format = "json";
    std::string policy = "default", web_file;
    std::size_t budget = 0;

    auto* paths_cmd = app.add_subcommand("paths", "list dominant minuscule paths");
    paths_cmd->add_option("--n", n, "rank")->required();
    paths_cmd->add_option("--boundary", boundary_s, "comma-separated fundamental indices")
        ->required();
    paths_cmd->add_option("--endpoint", endpoint_s, "endpoint weight (default 0)");

    auto* basis_cmd = app.add_subcommand("basis", "emit one web per path");
    basis_cmd->add_option("--n", n, "rank")->required();
    basis_cmd->add_option("--boundary", boundary_s)->required();
    basis_cmd->add_option("--endpoint", endpoint_s);
    basis_cmd->add_option("--out", out_dir, "output directory");
    basis_cmd->add_option("--render", format, "json|dot|tikz");
    basis_cmd->add_option("--variant-policy", policy, "default|sl4-minimal|all");

    auto* check_cmd = app.add_subcommand("check", "coherence report for a web file");
    check_cmd->add_option("web", web_file, "web json file")->required();

    auto* eval_cmd = app.add_subcommand("eval", "invariant vector of a web file");
    eval_cmd->add_option("web", web_file)->required();
    eval_cmd->add_option("--budget", budget, "nonzero-key budget");

    std::string basis_dir;
    auto* rank_cmd = app.add_subcommand("rank", "basis certificate for a boundary");
    rank_cmd->add_option("--n", n)->required();
    rank_cmd->add_option("--boundary", boundary_s)->required();
    rank_cmd->add_option("--basis-dir", basis_dir, "evaluate web_*.json from this directory");
    rank_cmd->add_option("--variant-policy", policy);
    rank_cmd->add_option("--budget", budget);

    auto* render_cmd = app.add_subcommand("render", "re-emit a web file");
    render_cmd->add_option("web", web_file)->required();
    render_cmd->add_option("--format", format, "json|dot|tikz");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (paths_cmd->parsed()) {
            auto ps = enumerate_paths(n, parse_boundary(boundary_s, n), parse_weight(endpoint_s, n));
            for (const auto& p : ps) std::cout << path_json(p) << "\n";
            return 0;
        }
        if (basis_cmd->parsed()) {
            auto boundary = parse_boundary(boundary_s, n);
            auto ps = enumerate_paths(n, boundary, parse_weight(endpoint_s, n));
            std::filesystem::create_directories(out_dir);
            std::string ext = format == "json" ? ".json" : (format == "dot" ? ".dot" : ".tex");
            int emitted = 0;
            for (size_t i = 0; i < ps.size(); ++i) {
                auto assigns = assignments_for(ps[i], policy);
                for (size_t a = 0; a < assigns.size(); ++a) {
                    Web w = to_web(from_path(ps[i], &assigns[a]));
                    char name[64];
                    if (assigns.size() > 1)
                        std::snprintf(name, sizeof name, "web_%03zu_%zu%s", i, a, ext.c_str());
                    else
                        std::snprintf(name, sizeof name, "web_%03zu%s", i, ext.c_str());
                    write_file(out_dir + "/" + name, render(w, format));
                    std::cout << name << "  path=" << path_json(ps[i]) << "\n";
                    ++emitted;
                }
            }
            std::cout << "emitted " << emitted << " webs for " << ps.size() << " paths\n";
            return 0;
        }
        if (check_cmd->parsed()) {
            Web w = web_from_json(read_file(web_file));
            auto val = validate(w);
            if (!val.ok()) {
                for (const auto& p : val.problems) std::cout << "invalid: " << p << "\n";
                return 1;
            }
            auto rep = is_coherent(w);
            std::cout << "cond1 geodesic-uniqueness: " << (rep.cond1 ? "pass" : "FAIL") << "\n";
            std::cout << "cond2 face-coverage:       " << (rep.cond2 ? "pass" : "FAIL") << "\n";
            std::cout << "cond3 step-orbits:         " << (rep.cond3 ? "pass" : "FAIL") << "\n";
            if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
            if (rep.associated) std::cout << "associated path: " << path_json(*rep.associated) << "\n";
            return rep.coherent() ? 0 : 1;
        }
        if (eval_cmd->parsed()) {
            Web w = web_from_json(read_file(web_file));
            auto val = validate(w);
            if (!val.ok()) {
                for (const auto& p : val.problems) std::cerr << "invalid web: " << p << "\n";
                return 2;
            }
            auto v = evaluate(w, budget);
            for (const auto& [key, c] : v.coef) {
                for (size_t i = 0; i < key.size(); ++i)
                    std::cout << (i ? "|" : "") << subset_str(key[i], v.n);
                std::cout << ": " << c.str() << "\n";
            }
            std::cout << "nonzero=" << v.coef.size() << "\n";
            return 0;
        }
        if (rank_cmd->parsed()) {
            auto boundary = parse_boundary(boundary_s, n);
            auto ps = enumerate_paths(n, boundary);
            std::vector<InvariantVector> vecs;
            if (!basis_dir.empty()) {
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(basis_dir)) {
                    auto name = entry.path().filename().string();
                    if (name.rfind("web_", 0) == 0 && entry.path().extension() == ".json")
                        files.push_back(entry.path());
                }
                std::sort(files.begin(), files.end());
                for (const auto& f : files)
                    vecs.push_back(evaluate(web_from_json(read_file(f.string())), budget));
            } else {
                for (const auto& p : ps) {
                    auto assigns = assignments_for(p, policy);
                    vecs.push_back(evaluate(to_web(from_path(p, &assigns[0])), budget));
                }
            }
            int r = vecs.empty() ? 0 : rank(vecs);
            auto dim = pieri_dimension(n, boundary);
            bool pass = r == static_cast<int>(ps.size()) && r == dim;
            std::cout << "rank=" << r << " |P|=" << ps.size() << " pieri=" << dim << " "
                      << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }
        if (render_cmd->parsed()) {
            Web w = web_from_json(read_file(web_file));
            std::cout << render(w, format);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
