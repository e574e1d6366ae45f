#include "slweb/littelmann.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slweb {

std::vector<int> MinusculePath::type() const {
    std::vector<int> t;
    t.reserve(length());
    for (int i = 0; i < length(); ++i) {
        auto k = orbit_class(step(i));
        if (!k) throw std::invalid_argument("path step is not in a minuscule orbit");
        t.push_back(*k);
    }
    return t;
}

MinusculePath make_path(int n, std::vector<Weight> points, bool require_dominant) {
    if (points.empty()) throw std::invalid_argument("path needs at least one point");
    MinusculePath p;
    p.n = n;
    p.points = std::move(points);
    p.dominant = require_dominant;
    if (!p.points.front().is_zero()) throw std::invalid_argument("path must start at 0");
    for (const auto& w : p.points) {
        if (w.n != n) throw std::invalid_argument("path point rank mismatch");
        if (require_dominant && !w.is_dominant())
            throw std::invalid_argument("path point is not dominant");
    }
    p.type();  // validates steps
    return p;
}

static void enumerate_rec(int n, const std::vector<std::vector<OrbitWeight>>& orbits,
                          const Weight& endpoint, size_t depth, std::vector<Weight>& prefix,
                          std::vector<MinusculePath>& out) {
    if (depth == orbits.size()) {
        if (prefix.back() == endpoint) {
            MinusculePath p;
            p.n = n;
            p.points = prefix;
            out.push_back(std::move(p));
        }
        return;
    }
    std::vector<Weight> nexts;
    for (const auto& w : orbits[depth]) {
        Weight cand = prefix.back() + w.weight();
        if (cand.is_dominant()) nexts.push_back(std::move(cand));
    }
    std::sort(nexts.begin(), nexts.end());
    for (auto& w : nexts) {
        prefix.push_back(w);
        enumerate_rec(n, orbits, endpoint, depth + 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<MinusculePath> enumerate_paths(int n, const std::vector<int>& boundary,
                                           const Weight& endpoint) {
    if (endpoint.n != n) throw std::invalid_argument("endpoint rank mismatch");
    if (!endpoint.is_dominant()) throw std::invalid_argument("endpoint must be dominant");
    std::vector<std::vector<OrbitWeight>> orbits;
    for (int k : boundary) {
        if (k < 1 || k > n - 1) throw std::invalid_argument("boundary index out of range");
        orbits.push_back(weyl_orbit(n, k));
    }
    std::vector<MinusculePath> out;
    std::vector<Weight> prefix{zero_weight(n)};
    enumerate_rec(n, orbits, endpoint, 0, prefix, out);
    return out;
}

std::vector<MinusculePath> enumerate_paths(int n, const std::vector<int>& boundary) {
    return enumerate_paths(n, boundary, zero_weight(n));
}

Ordering path_compare(const MinusculePath& a, const MinusculePath& b) {
    if (a.n != b.n || a.points.size() != b.points.size() || a.type() != b.type())
        throw std::invalid_argument("path shape mismatch");
    bool le = true, ge = true;
    for (size_t i = 0; i < a.points.size(); ++i) {
        switch (dominance_compare(a.points[i], b.points[i])) {
            case Ordering::Equal: break;
            case Ordering::Less: ge = false; break;
            case Ordering::Greater: le = false; break;
            case Ordering::Incomparable: return Ordering::Incomparable;
        }
        if (!le && !ge) return Ordering::Incomparable;
    }
    if (le && ge) return Ordering::Equal;
    return le ? Ordering::Less : Ordering::Greater;
}

std::int64_t pieri_dimension(int n, const std::vector<int>& boundary) {
    int total = 0;
    for (int k : boundary) {
        if (k < 1 || k > n - 1) throw std::invalid_argument("boundary index out of range");
        total += k;
    }
    if (total % n != 0) return 0;
    int m = total / n;

    using Partition = std::vector<int>;  // weakly decreasing, length n
    std::map<Partition, std::int64_t> dp;
    dp[Partition(n, 0)] = 1;
    for (int k : boundary) {
        std::map<Partition, std::int64_t> next;
        for (const auto& [lam, cnt] : dp) {
            // add a vertical strip: k distinct rows get one box each
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                Partition mu = lam;
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1) ++mu[i];
                bool ok = true;
                for (int i = 1; i < n; ++i)
                    if (mu[i - 1] < mu[i]) { ok = false; break; }
                if (ok) next[mu] += cnt;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find(Partition(n, m));
    return it == dp.end() ? 0 : it->second;
}

}  // namespace slweb
