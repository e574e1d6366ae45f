#include "slweb/evaluation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace slweb {

bool InvariantVector::is_zero() const {
    for (const auto& [k, v] : coef)
        if (!v.is_zero()) return false;
    return true;
}

bool InvariantVector::operator==(const InvariantVector& o) const {
    if (n != o.n || type != o.type) return false;
    for (const auto& [k, v] : coef) {
        auto it = o.coef.find(k);
        if (it == o.coef.end() ? !v.is_zero() : !(v == it->second)) return false;
    }
    for (const auto& [k, v] : o.coef)
        if (!coef.count(k) && !v.is_zero()) return false;
    return true;
}

int shuffle_sign(const std::vector<unsigned>& blocks) {
    int inv = 0;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            for (int a = 0; a < 32; ++a) {
                if (!(blocks[i] >> a & 1)) continue;
                inv += __builtin_popcount(blocks[j] & ((1u << a) - 1));
            }
    return inv % 2 ? -1 : 1;
}

namespace {

// enumerate ordered tuples of disjoint subsets with the given sizes
// covering full_mask, honoring per-slot constraints (fixed values)
void enumerate_partitions(unsigned remaining, const std::vector<int>& sizes,
                          const std::vector<std::optional<unsigned>>& fixed, size_t idx,
                          std::vector<unsigned>& acc,
                          const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (idx == sizes.size()) {
        if (remaining == 0) emit(acc);
        return;
    }
    if (fixed[idx]) {
        unsigned s = *fixed[idx];
        if (__builtin_popcount(s) != sizes[idx] || (s & ~remaining)) return;
        acc.push_back(s);
        enumerate_partitions(remaining & ~s, sizes, fixed, idx + 1, acc, emit);
        acc.pop_back();
        return;
    }
    // choose sizes[idx] bits out of remaining, in increasing mask order
    std::vector<int> bits;
    for (int b = 0; b < 32; ++b)
        if (remaining >> b & 1) bits.push_back(b);
    int k = sizes[idx];
    if (k > static_cast<int>(bits.size())) return;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            unsigned s = 0;
            for (int i = 0; i < k; ++i) s |= 1u << bits[pick[i]];
            acc.push_back(s);
            enumerate_partitions(remaining & ~s, sizes, fixed, idx + 1, acc, emit);
            acc.pop_back();
            return;
        }
        for (int i = start; i <= static_cast<int>(bits.size()) - (k - depth); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k == 0) {
        acc.push_back(0);
        enumerate_partitions(remaining, sizes, fixed, idx + 1, acc, emit);
        acc.pop_back();
    } else {
        rec(0, 0);
    }
}

}  // namespace

std::vector<std::pair<std::vector<unsigned>, int>> local_tensor(int n,
                                                                const std::vector<int>& legs) {
    int sum = 0;
    for (int l : legs) {
        if (l < 0 || l >= n) throw std::invalid_argument("leg size out of range");
        sum += l;
    }
    unsigned full = (1u << n) - 1;
    std::vector<std::pair<std::vector<unsigned>, int>> out;
    std::vector<std::optional<unsigned>> no_fix(legs.size());
    std::vector<unsigned> acc;
    if (sum == n) {
        enumerate_partitions(full, legs, no_fix, 0, acc, [&](const std::vector<unsigned>& t) {
            out.push_back({t, shuffle_sign(t)});
        });
    } else if (sum == 2 * n) {
        std::vector<int> co_sizes;
        for (int l : legs) co_sizes.push_back(n - l);
        enumerate_partitions(full, co_sizes, no_fix, 0, acc, [&](const std::vector<unsigned>& c) {
            std::vector<unsigned> t;
            int sg = shuffle_sign(c);
            for (unsigned m : c) {
                t.push_back(full & ~m);
                sg *= shuffle_sign({m, full & ~m});
            }
            out.push_back({t, sg});
        });
    } else {
        throw std::invalid_argument("unbalanced vertex signature");
    }
    return out;
}

std::vector<std::pair<std::vector<unsigned>, int>> cap(int n, int k) {
    return local_tensor(n, {k, n - k});
}

namespace {

struct LegView {
    int edge = -1;
    bool dual = false;  // slot carries the complement of the edge subset
};

constexpr std::size_t kDefaultBudget = 1000000;

unsigned full_mask(int n) { return (1u << n) - 1; }

std::size_t effective_budget(std::size_t budget) {
    if (budget) return budget;
    if (const char* env = std::getenv("SLWEB_EVAL_BUDGET")) {
        std::size_t v = std::strtoull(env, nullptr, 10);
        if (v) return v;
    }
    return kDefaultBudget;
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

InvariantVector evaluate(const Web& w, std::size_t budget) {
    const std::size_t cap_keys = effective_budget(budget);
    const PlanarMap& m = w.map;
    int n = w.n();
    InvariantVector out;
    out.n = n;
    out.type = w.boundary();

    double ambient = 1;
    for (int t : out.type) ambient *= binomial(n, t);
    if (ambient > static_cast<double>(cap_keys))
        throw std::runtime_error("evaluation budget exceeded: ambient tensor has ~" +
                                 std::to_string(static_cast<long long>(ambient)) +
                                 " cells (budget " + std::to_string(cap_keys) + ")");

    // Every edge carries the pairing factor sign(S, S^c) on its stored
    // subset; 2-valent junctions use an orientation-aware coefficient so
    // that deleting 0-edges and smoothing leave the sum unchanged.
    auto kind = [&](int v) { return m.vertices[v].kind; };

    using Key = std::vector<std::pair<int, unsigned>>;  // sorted (edge, subset)
    std::map<Key, BigInt> frontier;
    frontier[{}] = BigInt(1);

    auto key_find = [](const Key& k, int e) -> const unsigned* {
        for (const auto& [ke, kv] : k)
            if (ke == e) return &kv;
        return nullptr;
    };

    unsigned full = (1u << n) - 1;
    std::vector<char> processed(m.vertices.size(), 0);
    std::vector<int> uses(m.edges.size(), 0);  // unprocessed internal endpoints
    for (size_t e = 0; e < m.edges.size(); ++e) {
        if (!m.edges[e].alive || m.is_rim_edge(static_cast<int>(e))) continue;
        if (kind(m.edges[e].tail) == PlanarMap::VertexKind::Internal) ++uses[e];
        if (kind(m.edges[e].head) == PlanarMap::VertexKind::Internal) ++uses[e];
    }

    for (size_t v = 0; v < m.vertices.size(); ++v) {
        if (!m.vertices[v].alive || kind(static_cast<int>(v)) != PlanarMap::VertexKind::Internal)
            continue;
        const std::vector<int>& darts = m.vertices[v].rot;
        if (darts.empty()) continue;

        std::vector<LegView> views;
        std::vector<int> sizes;
        std::vector<size_t> nz;  // legs with a nonzero label, in list order
        for (int d : darts) {
            int e = PlanarMap::edge_of(d);
            bool at_tail = m.edges[e].tail == static_cast<int>(v);
            int l = m.edges[e].label;
            LegView lv;
            lv.edge = e;
            lv.dual = at_tail && l != 0;  // outgoing legs present the complement
            if (l != 0) nz.push_back(views.size());
            views.push_back(lv);
            sizes.push_back(l == 0 ? 0 : (at_tail ? n - l : l));
        }
        std::vector<std::pair<std::vector<unsigned>, int>> entries;
        if (nz.empty()) {
            entries.push_back({std::vector<unsigned>(views.size(), 0u), 1});
        } else if (nz.size() == 2) {
            // pass-through junction: coefficient chosen to commute with
            // smoothing (mixed: in before out; uniform: list order for
            // two outgoing legs, reversed for two incoming)
            size_t i0 = nz[0], i1 = nz[1];
            if (sizes[i0] + sizes[i1] != n)
                throw std::invalid_argument("unbalanced vertex signature");
            bool in0 = !views[i0].dual, in1 = !views[i1].dual;
            for (unsigned s = 0; s <= full_mask(n); ++s) {
                if (__builtin_popcount(s) != sizes[i0]) continue;
                unsigned t = full_mask(n) & ~s;
                std::vector<unsigned> tuple(views.size(), 0u);
                tuple[i0] = s;
                tuple[i1] = t;
                int sg;
                if (in0 != in1)
                    sg = in0 ? shuffle_sign({s, t}) : shuffle_sign({t, s});
                else if (in0)
                    sg = shuffle_sign({t, s});
                else
                    sg = shuffle_sign({s, t});
                entries.push_back({std::move(tuple), sg});
            }
        } else {
            entries = local_tensor(n, sizes);
        }

        std::map<Key, BigInt> next;
        for (const auto& [key, c] : frontier) {
            std::vector<std::optional<unsigned>> fixed(views.size());
            for (size_t i = 0; i < views.size(); ++i) {
                if (const unsigned* s = key_find(key, views[i].edge)) {
                    unsigned view = views[i].dual ? (full & ~*s) : *s;
                    if (m.edges[views[i].edge].label == 0) view = 0;
                    fixed[i] = view;
                }
            }
            for (const auto& [tuple, sg] : entries) {
                bool ok = true;
                for (size_t i = 0; i < views.size() && ok; ++i)
                    if (fixed[i] && *fixed[i] != tuple[i]) ok = false;
                if (!ok) continue;
                Key nk = key;
                int extra_sign = 1;
                for (size_t i = 0; i < views.size(); ++i) {
                    if (fixed[i]) continue;
                    int e = views[i].edge;
                    unsigned sub = views[i].dual ? (full & ~tuple[i]) : tuple[i];
                    if (m.edges[e].label == 0) sub = 0;
                    if (const unsigned* prev = key_find(nk, e)) {
                        // two legs of the same vertex on one edge
                        if (*prev != sub) { ok = false; break; }
                        continue;
                    }
                    nk.push_back({e, sub});
                    if (m.edges[e].label != 0)
                        extra_sign *= shuffle_sign({sub, full & ~sub});
                }
                if (!ok) continue;
                std::sort(nk.begin(), nk.end());
                // drop edges that are fully consumed
                Key pruned;
                for (const auto& [e, s] : nk) {
                    bool tail_done = kind(m.edges[e].tail) != PlanarMap::VertexKind::Internal ||
                                     processed[m.edges[e].tail] || m.edges[e].tail == static_cast<int>(v);
                    bool head_done = kind(m.edges[e].head) != PlanarMap::VertexKind::Internal ||
                                     processed[m.edges[e].head] || m.edges[e].head == static_cast<int>(v);
                    bool rim_attached = kind(m.edges[e].tail) == PlanarMap::VertexKind::Rim ||
                                        kind(m.edges[e].head) == PlanarMap::VertexKind::Rim;
                    if (rim_attached || !(tail_done && head_done)) pruned.push_back({e, s});
                }
                BigInt add = c * BigInt(sg * extra_sign);
                auto it = next.find(pruned);
                if (it == next.end())
                    next.emplace(std::move(pruned), add);
                else
                    it->second += add;
            }
        }
        frontier = std::move(next);
        // drop exact zeros to keep the frontier sparse
        for (auto it = frontier.begin(); it != frontier.end();)
            it = it->second.is_zero() ? frontier.erase(it) : std::next(it);
        processed[v] = 1;
        if (frontier.size() > cap_keys)
            throw std::runtime_error("evaluation budget exceeded during contraction");
    }

    // rim-to-rim edges never met a vertex: sum over their colorings
    for (size_t e = 0; e < m.edges.size(); ++e) {
        if (!m.edges[e].alive || m.is_rim_edge(static_cast<int>(e))) continue;
        if (kind(m.edges[e].tail) != PlanarMap::VertexKind::Rim ||
            kind(m.edges[e].head) != PlanarMap::VertexKind::Rim)
            continue;
        int l = m.edges[e].label;
        std::map<Key, BigInt> next;
        for (const auto& [key, c] : frontier) {
            for (unsigned s = 0; s <= full; ++s) {
                if (__builtin_popcount(s) != l) continue;
                Key nk = key;
                nk.push_back({static_cast<int>(e), s});
                std::sort(nk.begin(), nk.end());
                BigInt add = c * BigInt(shuffle_sign({s, full & ~s}));
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(std::move(nk), add);
                else
                    it->second += add;
            }
        }
        frontier = std::move(next);
        if (frontier.size() > cap_keys)
            throw std::runtime_error("evaluation budget exceeded during contraction");
    }

    // project onto the boundary slots
    auto legs = w.legs();
    for (const auto& [key, c] : frontier) {
        std::vector<unsigned> bkey;
        for (const auto& leg : legs) {
            const unsigned* s = key_find(key, leg.edge);
            if (!s) throw std::logic_error("boundary edge missing from the final frontier");
            bkey.push_back(leg.inward ? *s : (full & ~*s));
        }
        auto it = out.coef.find(bkey);
        if (it == out.coef.end())
            out.coef.emplace(std::move(bkey), c);
        else
            it->second += c;
    }
    for (auto it = out.coef.begin(); it != out.coef.end();)
        it = it->second.is_zero() ? out.coef.erase(it) : std::next(it);
    return out;
}

// ---------------- rank ----------------

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

int modular_rank(std::vector<std::map<int, std::uint64_t>> rows) {
    int rank = 0;
    while (true) {
        int pr = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty() && (pr == -1 || rows[i].size() < rows[pr].size()))
                pr = static_cast<int>(i);
        if (pr == -1) break;
        int pc = rows[pr].begin()->first;
        std::uint64_t inv = powmod(rows[pr].at(pc), kPrime - 2);
        auto pivot = rows[pr];
        rows[pr].clear();
        ++rank;
        for (auto& row : rows) {
            auto it = row.find(pc);
            if (it == row.end()) continue;
            std::uint64_t f = mulmod(it->second, inv);
            for (const auto& [c2, v2] : pivot) {
                std::uint64_t sub = mulmod(f, v2);
                auto jt = row.find(c2);
                std::uint64_t cur = jt == row.end() ? 0 : jt->second;
                std::uint64_t nv = (cur + kPrime - sub) % kPrime;
                if (nv == 0) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[c2] = nv;
                }
            }
        }
    }
    return rank;
}

int bareiss_rank(std::vector<std::map<int, BigInt>> rows) {
    BigInt prev(1);
    int rank = 0;
    std::vector<char> used(rows.size(), 0);
    while (true) {
        int pr = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && !rows[i].empty() &&
                (pr == -1 || rows[i].size() < rows[pr].size()))
                pr = static_cast<int>(i);
        if (pr == -1) break;
        int pc = rows[pr].begin()->first;
        BigInt piv = rows[pr].at(pc);
        ++rank;
        used[pr] = 1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            auto it = rows[i].find(pc);
            BigInt f = it == rows[i].end() ? BigInt(0) : it->second;
            std::map<int, BigInt> nr;
            // union of supports
            auto ai = rows[i].begin();
            auto bi = rows[pr].begin();
            while (ai != rows[i].end() || bi != rows[pr].end()) {
                int col;
                BigInt av(0), bv(0);
                if (bi == rows[pr].end() || (ai != rows[i].end() && ai->first < bi->first)) {
                    col = ai->first;
                    av = ai->second;
                    ++ai;
                } else if (ai == rows[i].end() || bi->first < ai->first) {
                    col = bi->first;
                    bv = bi->second;
                    ++bi;
                } else {
                    col = ai->first;
                    av = ai->second;
                    bv = bi->second;
                    ++ai;
                    ++bi;
                }
                if (col == pc) continue;
                BigInt nv = (av * piv - f * bv).div_exact(prev);
                if (!nv.is_zero()) nr.emplace(col, std::move(nv));
            }
            rows[i] = std::move(nr);
        }
        prev = piv;
    }
    return rank;
}

}  // namespace

int rank(const std::vector<InvariantVector>& vectors) {
    if (vectors.empty()) return 0;
    for (const auto& v : vectors)
        if (v.n != vectors[0].n || v.type != vectors[0].type)
            throw std::invalid_argument("rank over mixed boundary types");
    // dense column ids over the union of keys
    std::map<std::vector<unsigned>, int> cols;
    for (const auto& v : vectors)
        for (const auto& [k, c] : v.coef)
            if (!c.is_zero()) cols.emplace(k, 0);
    int cid = 0;
    for (auto& [k, id] : cols) id = cid++;

    std::vector<std::map<int, std::uint64_t>> mod_rows;
    for (const auto& v : vectors) {
        std::map<int, std::uint64_t> row;
        for (const auto& [k, c] : v.coef) {
            std::uint64_t r = c.mod(kPrime);
            if (r) row[cols.at(k)] = r;
        }
        mod_rows.push_back(std::move(row));
    }
    int mr = modular_rank(std::move(mod_rows));
    if (mr == static_cast<int>(vectors.size())) return mr;  // full rank is certified

    std::vector<std::map<int, BigInt>> rows;
    for (const auto& v : vectors) {
        std::map<int, BigInt> row;
        for (const auto& [k, c] : v.coef)
            if (!c.is_zero()) row.emplace(cols.at(k), c);
        rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
}

std::optional<std::pair<BigInt, BigInt>> proportionality(const InvariantVector& a,
                                                         const InvariantVector& b) {
    if (a.n != b.n || a.type != b.type) return std::nullopt;
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    // pick the reference key: first nonzero of a
    const std::vector<unsigned>* ref = nullptr;
    for (const auto& [k, c] : a.coef)
        if (!c.is_zero()) { ref = &k; break; }
    auto bt = b.coef.find(*ref);
    if (bt == b.coef.end() || bt->second.is_zero()) return std::nullopt;
    BigInt num = bt->second, den = a.coef.at(*ref);
    // verify b * den == a * num on the union of supports
    for (const auto& [k, c] : a.coef) {
        auto it = b.coef.find(k);
        BigInt bv = it == b.coef.end() ? BigInt(0) : it->second;
        if (!(bv * den == c * num)) return std::nullopt;
    }
    for (const auto& [k, c] : b.coef)
        if (!a.coef.count(k) && !c.is_zero()) return std::nullopt;
    return std::make_pair(num, den);
}

InvariantVector apply_lowering(const InvariantVector& v, int j) {
    if (j < 1 || j > v.n - 1) throw std::invalid_argument("lowering index out of range");
    InvariantVector out;
    out.n = v.n;
    out.type = v.type;
    unsigned lo = 1u << (j - 1), hi = 1u << j;
    for (const auto& [key, c] : v.coef) {
        for (size_t slot = 0; slot < key.size(); ++slot) {
            if (!(key[slot] & lo) || (key[slot] & hi)) continue;
            std::vector<unsigned> nk = key;
            nk[slot] = (key[slot] & ~lo) | hi;
            auto it = out.coef.find(nk);
            if (it == out.coef.end())
                out.coef.emplace(std::move(nk), c);
            else
                it->second += c;
        }
    }
    for (auto it = out.coef.begin(); it != out.coef.end();)
        it = it->second.is_zero() ? out.coef.erase(it) : std::next(it);
    return out;
}

// ---------------- local rewrites ----------------

namespace {

int self_dual_label(int n) {
    if (n % 2 != 0) throw std::invalid_argument("no self-dual label for odd rank");
    return n / 2;
}

}  // namespace

Web kim_rewrite(const Web& w, KimMove move, int edge_id) {
    if (w.n() != 4) throw std::invalid_argument("rewrite requires rank 4");
    if (edge_id < 0 || edge_id >= static_cast<int>(w.map.edges.size()) ||
        !w.map.edges[edge_id].alive || w.map.is_rim_edge(edge_id))
        throw std::invalid_argument("rewrite site is not a live web edge");
    Web out = w;
    PlanarMap& m = out.map;
    int n = m.n;
    int sd = self_dual_label(n);

    if (move == KimMove::SquareFlip) {
        auto faces = m.faces();
        auto try_face = [&](int d0) -> std::optional<std::vector<int>> {
            std::vector<int> darts;
            int d = d0;
            do {
                darts.push_back(d);
                d = m.face_next(d);
            } while (d != d0 && darts.size() <= 5);
            if (darts.size() != 4) return std::nullopt;
            return darts;
        };
        std::optional<std::vector<int>> sq;
        for (int d0 : {2 * edge_id, 2 * edge_id + 1}) {
            auto cand = try_face(d0);
            if (!cand) continue;
            bool ok = true;
            for (int d : *cand) {
                int e = PlanarMap::edge_of(d);
                int l = m.edges[e].label;
                if (std::min(l, n - l) != 1) ok = false;
                int v = m.origin(d);
                if (m.vertices[v].kind != PlanarMap::VertexKind::Internal ||
                    m.vertices[v].rot.size() != 3)
                    ok = false;
            }
            if (ok) { sq = cand; break; }
        }
        if (!sq)
            throw std::invalid_argument(
                "square flip: edge does not bound a quadrilateral of single-index edges "
                "with trivalent corners");
        std::vector<int> sq_edges;
        for (int d : *sq) sq_edges.push_back(PlanarMap::edge_of(d));
        std::sort(sq_edges.begin(), sq_edges.end());
        if (std::unique(sq_edges.begin(), sq_edges.end()) != sq_edges.end())
            throw std::invalid_argument("square flip: face reuses an edge");
        // corners alternate all-out / all-in along the square, with a
        // self-dual third leg
        for (int d : *sq) {
            int v = m.origin(d);
            int square_in = 0, square_out = 0;
            for (int dd : m.vertices[v].rot) {
                int e = PlanarMap::edge_of(dd);
                if (std::find(sq_edges.begin(), sq_edges.end(), e) != sq_edges.end()) {
                    if (m.edges[e].tail == v)
                        ++square_out;
                    else
                        ++square_in;
                } else if (m.edges[e].label != sd) {
                    throw std::invalid_argument("square flip: corner leg is not self-dual");
                }
            }
            bool src = square_out == 2 && square_in == 0;
            bool sink = square_in == 2 && square_out == 0;
            if (!src && !sink)
                throw std::invalid_argument("square flip: corner is not a source or sink");
        }
        for (int e : sq_edges) {
            std::swap(m.edges[e].tail, m.edges[e].head);
            m.replace_dart(m.edges[e].head, 2 * e, 2 * e + 1);
            m.replace_dart(m.edges[e].tail, 2 * e + 1, 2 * e);
        }
        return out;
    }

    // HSlide
    const auto& mid = m.edges[edge_id];
    if (mid.label != sd)
        throw std::invalid_argument("slide: the middle edge must carry the self-dual label");
    int x = mid.tail, y = mid.head;
    if (x == y) throw std::invalid_argument("slide: middle edge is a loop");
    for (int v : {x, y})
        if (m.vertices[v].kind != PlanarMap::VertexKind::Internal ||
            m.vertices[v].rot.size() != 3)
            throw std::invalid_argument("slide: middle endpoints must be internal trivalent");
    auto rotate_to_front = [&](int v, int dart) {
        std::vector<int> r = m.vertices[v].rot;
        while (r[0] != dart) std::rotate(r.begin(), r.begin() + 1, r.end());
        return r;
    };
    auto rx = rotate_to_front(x, 2 * edge_id);
    auto ry = rotate_to_front(y, 2 * edge_id + 1);
    int P = rx[1], Q = rx[2], R = ry[1], S = ry[2];
    // the four stubs must be single-index and uniformly oriented
    int in_cnt = 0, out_cnt = 0;
    for (auto [v, d] : {std::pair{x, P}, {x, Q}, {y, R}, {y, S}}) {
        int e = PlanarMap::edge_of(d);
        if (std::min(m.edges[e].label, n - m.edges[e].label) != 1)
            throw std::invalid_argument("slide: stub is not a single-index edge");
        if (m.in_label_at(v, d) == 1)
            ++in_cnt;
        else
            ++out_cnt;
    }
    if (in_cnt != 4 && out_cnt != 4)
        throw std::invalid_argument("slide: stubs are not uniformly oriented");
    int x2 = m.add_vertex(PlanarMap::VertexKind::Internal);
    int y2 = m.add_vertex(PlanarMap::VertexKind::Internal);
    auto move_stub = [&](int dart, int to) {
        int e = PlanarMap::edge_of(dart);
        if ((dart & 1) == 0)
            m.edges[e].tail = to;
        else
            m.edges[e].head = to;
    };
    move_stub(Q, x2);
    move_stub(R, x2);
    move_stub(S, y2);
    move_stub(P, y2);
    int m2 = m.add_edge(x2, y2, sd);
    m.set_rot(x2, {2 * m2, Q, R});
    m.set_rot(y2, {2 * m2 + 1, S, P});
    m.edges[edge_id].alive = false;
    m.vertices[x].alive = false;
    m.vertices[x].rot.clear();
    m.vertices[y].alive = false;
    m.vertices[y].rot.clear();
    return out;
}

}  // namespace slweb
