#include "slweb/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slweb {

Weight::Weight(int rank, std::vector<int> coords) : n(rank), c(std::move(coords)) {
    if (n < 2) throw std::invalid_argument("weight rank must be >= 2");
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("weight coordinate length does not match rank");
    int m = *std::min_element(c.begin(), c.end());
    if (m != 0)
        for (int& x : c) x -= m;
}

bool Weight::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] < c[i]) return false;
    return true;
}

int Weight::sum() const { return std::accumulate(c.begin(), c.end(), 0); }

std::string Weight::str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

Weight canonicalize(int n, const std::vector<int>& raw) { return Weight(n, raw); }

Weight zero_weight(int n) { return Weight(n, std::vector<int>(n, 0)); }

Weight fundamental(int n, int k) {
    if (k == 0) return zero_weight(n);
    if (k < 0 || k >= n) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<int> c(n, 0);
    for (int i = 0; i < k; ++i) c[i] = 1;
    return Weight(n, std::move(c));
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch in weight addition");
    std::vector<int> c(a.n);
    for (int i = 0; i < a.n; ++i) c[i] = a.c[i] + b.c[i];
    return Weight(a.n, std::move(c));
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch in weight subtraction");
    std::vector<int> c(a.n);
    for (int i = 0; i < a.n; ++i) c[i] = a.c[i] - b.c[i];
    return Weight(a.n, std::move(c));
}

Ordering dominance_compare(const Weight& a, const Weight& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch in dominance comparison");
    int n = a.n;
    int ds = b.sum() - a.sum();
    if (ds % n != 0) return Ordering::Incomparable;
    int t = -ds / n;  // lift b by t*(1,...,1) so sums agree
    // prefix sums of (b + t) - a decide the order
    bool all_le = true, all_ge = true, all_eq = true;
    int prefix = 0;
    for (int i = 0; i < n; ++i) {
        prefix += b.c[i] + t - a.c[i];
        if (prefix > 0) all_le = false;
        if (prefix < 0) all_ge = false;
        if (prefix != 0) all_eq = false;
    }
    if (all_eq) return Ordering::Equal;
    if (all_ge) return Ordering::Less;     // b - a >= 0, so a < b
    if (all_le) return Ordering::Greater;  // a - b >= 0
    return Ordering::Incomparable;
}

OrbitWeight::OrbitWeight(int rank, std::vector<int> coords) : n(rank), c(std::move(coords)) {
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("orbit weight length does not match rank");
    int k = 0;
    for (int x : c) {
        if (x != 0 && x != 1) throw std::invalid_argument("orbit weight entries must be 0/1");
        k += x;
    }
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("orbit weight must have between 1 and n-1 ones");
}

int OrbitWeight::orbit_class() const {
    return std::accumulate(c.begin(), c.end(), 0);
}

Weight OrbitWeight::weight() const { return Weight(n, c); }

std::vector<OrbitWeight> weyl_orbit(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("orbit class out of range");
    std::vector<OrbitWeight> out;
    std::vector<int> c(n, 0);
    // iterate over all masks with k ones, collecting vectors; sort at the end
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        for (int i = 0; i < n; ++i) c[i] = (mask >> i) & 1;
        out.emplace_back(n, c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> orbit_class(const Weight& w) {
    int mx = *std::max_element(w.c.begin(), w.c.end());
    if (mx != 1) return std::nullopt;  // canonical form has min 0
    int k = w.sum();
    if (k < 1 || k > w.n - 1) return std::nullopt;
    return k;
}

std::optional<OrbitWeight> to_orbit_weight(const Weight& w) {
    if (!orbit_class(w)) return std::nullopt;
    return OrbitWeight(w.n, w.c);
}

LrDecomposition decompose_lr(const OrbitWeight& w) {
    LrDecomposition d;
    bool first_seen = false;
    for (int j = 1; j <= w.n - 1; ++j) {
        int diff = w.c[j - 1] - w.c[j];
        if (diff == 1) {
            if (!first_seen) { d.r_first = true; first_seen = true; }
            d.r.push_back(j);
        } else if (diff == -1) {
            if (!first_seen) { d.r_first = false; first_seen = true; }
            d.l.push_back(j);
        }
    }
    return d;
}

}  // namespace slweb
