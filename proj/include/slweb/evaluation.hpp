#ifndef SLWEB_EVALUATION_HPP
#define SLWEB_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slweb/bigint.hpp"
#include "slweb/web.hpp"

namespace slweb {

// Exact invariant tensor attached to a web.  Keys are tuples of subset
// bitmasks of {1..n}, one per boundary slot, |S_i| = reading label i;
// coefficients are exact integers.
struct InvariantVector {
    int n = 0;
    std::vector<int> type;  // boundary reading labels
    std::map<std::vector<unsigned>, BigInt> coef;

    bool is_zero() const;
    bool operator==(const InvariantVector& o) const;
};

// parity of sorting the concatenation of disjoint subsets (each listed
// ascending) into ascending order: +1 or -1
int shuffle_sign(const std::vector<unsigned>& blocks);

// local invariant for an all-incoming vertex with the given leg sizes
// (sum n or 2n): list of (key tuple, coefficient)
std::vector<std::pair<std::vector<unsigned>, int>> local_tensor(int n,
                                                                const std::vector<int>& legs);
// pairing tensor on (k, n-k): keys (S, S^c) with the shuffle sign
std::vector<std::pair<std::vector<unsigned>, int>> cap(int n, int k);

// State sum over edge colorings.  Throws when the ambient dimension or
// the working frontier exceeds `budget` nonzero keys (0 = use the
// default, overridable via SLWEB_EVAL_BUDGET).
InvariantVector evaluate(const Web& w, std::size_t budget = 0);

// Exact rank of the span.  A full-rank modular screen may settle the
// answer early; otherwise fraction-free elimination over exact integers
// decides it.
int rank(const std::vector<InvariantVector>& vectors);

// b == s * a for a nonzero rational s?  Returns s as (num, den).
std::optional<std::pair<BigInt, BigInt>> proportionality(const InvariantVector& a,
                                                         const InvariantVector& b);

// action of the j-th simple lowering operator (moves j to j+1 in one
// slot); evaluates to zero exactly on invariant vectors
InvariantVector apply_lowering(const InvariantVector& v, int j);

enum class KimMove { SquareFlip, HSlide };

// Local rewrites on SL(4) webs: flipping an oriented square between
// four self-dual legs, or sliding a self-dual edge across its four
// single legs.  `edge_id` names an edge of the pattern (a square side,
// or the self-dual middle edge).  Throws on pattern mismatch, naming
// the failed precondition.
Web kim_rewrite(const Web& w, KimMove move, int edge_id);

}  // namespace slweb

#endif
