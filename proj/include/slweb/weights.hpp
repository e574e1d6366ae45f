#ifndef SLWEB_WEIGHTS_HPP
#define SLWEB_WEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace slweb {

// Outcome of a comparison in a partial order.
enum class Ordering { Less, Equal, Greater, Incomparable };

// Weight of SL(n): an integer vector of length n modulo the all-ones
// vector.  The stored representative is the unique translate whose
// minimum coordinate is 0, so equality is structural and dominance of a
// single weight is "weakly decreasing coordinates".
struct Weight {
    int n = 0;
    std::vector<int> c;

    Weight() = default;
    Weight(int rank, std::vector<int> coords);

    bool is_zero() const;
    bool is_dominant() const;
    int sum() const;

    bool operator==(const Weight& o) const { return n == o.n && c == o.c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return c < o.c; }  // lexicographic, for containers

    std::string str() const;
};

Weight canonicalize(int n, const std::vector<int>& raw);
Weight zero_weight(int n);
// k-th fundamental weight, 1 <= k <= n-1; k = 0 gives the zero weight.
Weight fundamental(int n, int k);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

// Dominance order: a <= b iff b - a is a nonnegative sum of simple roots
// once the representatives are lifted to equal coordinate sums.  Lifts
// exist iff the sums agree mod n; otherwise the pair is incomparable.
Ordering dominance_compare(const Weight& a, const Weight& b);

// An element of the Weyl orbit of a fundamental weight: a 0/1 vector
// with k ones, 1 <= k <= n-1.
struct OrbitWeight {
    int n = 0;
    std::vector<int> c;  // entries in {0,1}

    OrbitWeight() = default;
    OrbitWeight(int rank, std::vector<int> coords);

    int orbit_class() const;  // number of ones
    Weight weight() const;

    bool operator==(const OrbitWeight& o) const { return n == o.n && c == o.c; }
    bool operator<(const OrbitWeight& o) const { return c < o.c; }
};

// All C(n,k) orbit elements, in lexicographic coordinate order.
std::vector<OrbitWeight> weyl_orbit(int n, int k);

// k such that some translate of w is a 0/1 vector with k ones in
// [1, n-1]; nullopt when w is not in any such orbit.
std::optional<int> orbit_class(const Weight& w);

std::optional<OrbitWeight> to_orbit_weight(const Weight& w);

// Unique expression of an orbit weight as sum_j (c_j - c_{j+1}) w_j:
// l = indices with coefficient -1, r = indices with +1.  The two lists
// strictly interleave; `r_first` records which comes first.
struct LrDecomposition {
    std::vector<int> l;
    std::vector<int> r;
    bool r_first = true;
};

LrDecomposition decompose_lr(const OrbitWeight& w);

// x reduced mod n into {0,...,n-1}.
inline int mod_index(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace slweb

#endif
