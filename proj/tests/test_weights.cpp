#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slweb/weights.hpp"

using namespace slweb;

TEST_CASE("canonical representative has minimum coordinate zero") {
    CHECK(canonicalize(4, {2, 1, 1, 1}).c == std::vector<int>{1, 0, 0, 0});
    CHECK(canonicalize(4, {-1, -1, -1, 0}).c == std::vector<int>{0, 0, 0, 1});
    CHECK(canonicalize(2, {0, 0}).c == std::vector<int>{0, 0});
    CHECK_THROWS(canonicalize(4, {1, 2, 3}));
    CHECK_THROWS(canonicalize(1, {0}));
}

TEST_CASE("weight arithmetic stays canonical") {
    Weight a = fundamental(4, 1), b = fundamental(4, 3);
    CHECK((a + b).c == std::vector<int>{2, 1, 1, 0});
    CHECK((a - (a + b)).c == std::vector<int>{0, 0, 0, 1});
    CHECK((a - a).is_zero());
    CHECK(fundamental(4, 2).is_dominant());
    CHECK_FALSE(canonicalize(4, {0, 1, 0, 0}).is_dominant());
}

TEST_CASE("dominance comparison") {
    Weight w13 = fundamental(4, 1) + fundamental(4, 3);  // (2,1,1,0)
    Weight w22 = fundamental(4, 2) + fundamental(4, 2);  // (2,2,0,0)
    CHECK(dominance_compare(w13, w22) == Ordering::Less);
    CHECK(dominance_compare(w22, w13) == Ordering::Greater);
    CHECK(dominance_compare(fundamental(4, 1), fundamental(4, 3)) == Ordering::Incomparable);
    CHECK(dominance_compare(w13, w13) == Ordering::Equal);
    CHECK_THROWS(dominance_compare(fundamental(4, 1), fundamental(3, 1)));
}

TEST_CASE("dominance is a partial order on a coordinate box") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Weight> box;
        int limit = 1;
        for (int i = 0; i < n; ++i) limit *= 3;
        for (int code = 0; code < limit; ++code) {
            std::vector<int> c(n);
            int x = code;
            for (int i = 0; i < n; ++i) {
                c[i] = x % 3;
                x /= 3;
            }
            box.push_back(canonicalize(n, c));
        }
        std::sort(box.begin(), box.end());
        box.erase(std::unique(box.begin(), box.end()), box.end());
        for (const auto& a : box) {
            CHECK(dominance_compare(a, a) == Ordering::Equal);
            for (const auto& b : box) {
                auto ab = dominance_compare(a, b);
                auto ba = dominance_compare(b, a);
                if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
                if (ab == Ordering::Equal) CHECK(a == b);
                if (ab == Ordering::Incomparable) CHECK(ba == Ordering::Incomparable);
                for (const auto& c : box) {
                    if (ab == Ordering::Less && dominance_compare(b, c) == Ordering::Less)
                        CHECK(dominance_compare(a, c) == Ordering::Less);
                }
            }
        }
    }
}

TEST_CASE("triangle inequality of fundamental weights") {
    for (int n = 2; n <= 8; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                Weight sum = fundamental(n, a) + fundamental(n, b);
                Weight third = fundamental(n, (a + b) % n);
                auto o = dominance_compare(third, sum);
                CHECK((o == Ordering::Less || o == Ordering::Equal));
            }
}

TEST_CASE("weyl orbits and orbit classes") {
    CHECK(weyl_orbit(4, 2).size() == 6);
    CHECK(orbit_class(canonicalize(4, {0, 0, 0, 1})) == 1);
    CHECK_FALSE(orbit_class(fundamental(4, 1) + fundamental(4, 3)).has_value());
    CHECK_FALSE(orbit_class(zero_weight(4)).has_value());
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) CHECK(orbit_class(fundamental(n, k)) == k);
    CHECK_THROWS(weyl_orbit(4, 0));
    CHECK_THROWS(weyl_orbit(4, 4));
}

TEST_CASE("lr decomposition of orbit weights") {
    {
        auto d = decompose_lr(OrbitWeight(4, {1, 0, 1, 0}));
        CHECK(d.l == std::vector<int>{2});
        CHECK(d.r == std::vector<int>{1, 3});
        CHECK(d.r_first);
    }
    {
        auto d = decompose_lr(OrbitWeight(4, {1, 1, 0, 0}));
        CHECK(d.l.empty());
        CHECK(d.r == std::vector<int>{2});
        CHECK(d.r_first);
    }
    {
        auto d = decompose_lr(OrbitWeight(4, {0, 1, 1, 0}));
        CHECK(d.l == std::vector<int>{1});
        CHECK(d.r == std::vector<int>{3});
        CHECK_FALSE(d.r_first);
    }
}

TEST_CASE("lr decomposition reconstructs every orbit weight") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& w : weyl_orbit(n, k)) {
                auto d = decompose_lr(w);
                Weight sum = zero_weight(n);
                for (int r : d.r) sum = sum + fundamental(n, r);
                for (int l : d.l) sum = sum - fundamental(n, l);
                CHECK(sum == w.weight());
                // strict interleaving
                std::vector<std::pair<int, int>> merged;
                for (int l : d.l) merged.push_back({l, 0});
                for (int r : d.r) merged.push_back({r, 1});
                std::sort(merged.begin(), merged.end());
                for (size_t i = 1; i < merged.size(); ++i)
                    CHECK(merged[i].second != merged[i - 1].second);
                int diff = static_cast<int>(d.r.size()) - static_cast<int>(d.l.size());
                if (d.r_first)
                    CHECK((diff == 0 || diff == 1));
                else
                    CHECK((diff == 0 || diff == -1));
            }
}
