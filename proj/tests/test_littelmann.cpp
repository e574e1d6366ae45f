#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "slweb/littelmann.hpp"

using namespace slweb;

TEST_CASE("path enumeration pinned cases") {
    auto ps = enumerate_paths(2, {1, 1});
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].points[1] == fundamental(2, 1));

    auto qs = enumerate_paths(4, {1, 3, 1, 3});
    REQUIRE(qs.size() == 2);
    Weight w1 = fundamental(4, 1), w13 = fundamental(4, 1) + fundamental(4, 3);
    Weight z = zero_weight(4);
    CHECK(qs[0].points == std::vector<Weight>{z, w1, z, w1, z});
    CHECK(qs[1].points == std::vector<Weight>{z, w1, w13, w1, z});
}

TEST_CASE("sl2 path counts are Catalan") {
    std::vector<long> expect{1, 2, 5, 14, 42, 132};
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> boundary(2 * m, 1);
        CHECK(static_cast<long>(enumerate_paths(2, boundary).size()) == expect[m - 1]);
    }
}

TEST_CASE("enumerated paths satisfy the path invariants without duplicates") {
    auto ps = enumerate_paths(3, {1, 2, 1, 2, 1, 2});
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : ps) {
        CHECK(p.points.front().is_zero());
        CHECK(p.points.back().is_zero());
        std::vector<std::vector<int>> key;
        for (const auto& w : p.points) {
            CHECK(w.is_dominant());
            key.push_back(w.c);
        }
        for (int i = 0; i < p.length(); ++i) CHECK(orbit_class(p.step(i)).has_value());
        CHECK(seen.insert(key).second);
    }
}

TEST_CASE("pieri dimension pinned cases") {
    CHECK(pieri_dimension(2, {1, 1, 1, 1, 1, 1}) == 5);
    CHECK(pieri_dimension(4, {2, 2, 2, 2}) == 3);
    CHECK(pieri_dimension(4, {1, 1, 1}) == 0);
}

TEST_CASE("enumeration count equals the pieri dimension") {
    // exhaustive where cheap, seeded samples on larger ranks
    for (int len = 1; len <= 8; ++len)
        CHECK(static_cast<long>(enumerate_paths(2, std::vector<int>(len, 1)).size()) ==
              pieri_dimension(2, std::vector<int>(len, 1)));
    for (int code = 0; code < (1 << 6); ++code) {
        std::vector<int> boundary;
        for (int b = 0; b < 6; ++b) boundary.push_back((code >> b & 1) + 1);
        CHECK(static_cast<long>(enumerate_paths(3, boundary).size()) ==
              pieri_dimension(3, boundary));
    }
    std::mt19937 rng(20240817);
    for (int n = 4; n <= 5; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            int len = 2 + static_cast<int>(rng() % 7);
            std::vector<int> boundary;
            for (int i = 0; i < len; ++i) boundary.push_back(1 + static_cast<int>(rng() % (n - 1)));
            CHECK(static_cast<long>(enumerate_paths(n, boundary).size()) ==
                  pieri_dimension(n, boundary));
        }
}

TEST_CASE("path comparison") {
    auto qs = enumerate_paths(4, {1, 3, 1, 3});
    REQUIRE(qs.size() == 2);
    CHECK(path_compare(qs[0], qs[1]) == Ordering::Less);
    CHECK(path_compare(qs[1], qs[0]) == Ordering::Greater);
    CHECK(path_compare(qs[0], qs[0]) == Ordering::Equal);

    auto ps = enumerate_paths(3, {1, 1, 2, 2, 1, 2});
    REQUIRE(!ps.empty());
    bool found_incomparable = false;
    for (size_t i = 0; i < ps.size() && !found_incomparable; ++i)
        for (size_t j = i + 1; j < ps.size() && !found_incomparable; ++j)
            if (path_compare(ps[i], ps[j]) == Ordering::Incomparable) found_incomparable = true;
    CHECK(found_incomparable);

    // componentwise brute force agreement
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j) {
            bool le = true, ge = true;
            for (size_t t = 0; t < ps[i].points.size(); ++t) {
                auto o = dominance_compare(ps[i].points[t], ps[j].points[t]);
                if (o == Ordering::Incomparable) { le = ge = false; break; }
                if (o == Ordering::Less) ge = false;
                if (o == Ordering::Greater) le = false;
            }
            Ordering expect = le && ge   ? Ordering::Equal
                              : le       ? Ordering::Less
                              : ge       ? Ordering::Greater
                                         : Ordering::Incomparable;
            CHECK(path_compare(ps[i], ps[j]) == expect);
        }

    auto other = enumerate_paths(3, {1, 2});
    CHECK_THROWS(path_compare(ps[0], other[0]));
}

TEST_CASE("open endpoints and empty enumerations") {
    CHECK(enumerate_paths(4, {1, 1}).empty());  // sum not divisible by n
    auto open = enumerate_paths(4, {1, 1}, fundamental(4, 2));
    REQUIRE(open.size() == 1);
    CHECK(open[0].endpoint() == fundamental(4, 2));
    CHECK_THROWS(enumerate_paths(4, {0, 1}));
    CHECK_THROWS(enumerate_paths(4, {1, 1}, canonicalize(4, {0, 1, 0, 0})));
}
