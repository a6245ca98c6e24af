#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "plates/combinatorics.hpp"
#include "test_support.hpp"

using namespace plates;

namespace {

int descents(const std::vector<int>& w) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    return d;
}

// Brute force: permutations of i+j+1 letters with exactly j descents.
long eulerian_brute(int i, int j) {
    std::vector<int> w(static_cast<std::size_t>(i + j + 1));
    std::iota(w.begin(), w.end(), 1);
    long count = 0;
    do {
        count += descents(w) == j;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

// Brute force: surjections [n] -> [k].
long surjections(int n, int k) {
    long total = 0;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
        std::set<int> image(f.begin(), f.end());
        total += static_cast<int>(image.size()) == k;
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == k) f[i++] = 0;
        if (i == f.size()) break;
    }
    return total;
}

}  // namespace

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("eulerian numbers") {
    CHECK(eulerian(0, 0) == 1);
    CHECK(eulerian(1, 1) == 4);
    CHECK(eulerian(1, 2) == 11);
    CHECK(eulerian_row(4) == std::vector<Integer>{1, 11, 11, 1});
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(eulerian(i, j) == eulerian_brute(i, j));
            CHECK(eulerian(i, j) == eulerian(j, i));
        }
    }
    for (int n = 1; n <= 12; ++n) {
        Integer sum = 0;
        for (const auto& e : eulerian_row(n)) sum += e;
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("ordered Bell numbers") {
    CHECK(ordered_bell(0) == 1);
    CHECK(ordered_bell(3) == 13);
    CHECK(ordered_bell(4) == 75);
    for (int n = 1; n <= 6; ++n) {
        long brute = 0;
        for (int k = 1; k <= n; ++k) brute += surjections(n, k);
        CHECK(ordered_bell(n) == brute);
    }
}

TEST_CASE("compositions") {
    const auto comps = enumerate_compositions(4, 3);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].parts == std::vector<int>{1, 1, 2});
    CHECK(comps[1].parts == std::vector<int>{1, 2, 1});
    CHECK(comps[2].parts == std::vector<int>{2, 1, 1});
    CHECK(enumerate_compositions(2, 3).empty());
    for (int r = 1; r <= 8; ++r) {
        for (int k = 1; k <= r; ++k) {
            CHECK(enumerate_compositions(r, k).size() == binomial(r - 1, k - 1));
        }
    }
}

TEST_CASE("ordered set partitions") {
    const auto osps = enumerate_osp(3, 2, true);
    REQUIRE(osps.size() == 3);
    CHECK(osps[0].blocks == std::vector<Block>{{1}, {2, 3}});
    CHECK(osps[1].blocks == std::vector<Block>{{1, 2}, {3}});
    CHECK(osps[2].blocks == std::vector<Block>{{1, 3}, {2}});
    CHECK(enumerate_osp(3, 2, false).size() == 6);
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (int k = 1; k <= n; ++k) {
            CHECK(enumerate_osp(n, k, false).size() == static_cast<std::size_t>(surjections(n, k)));
            // 1 sits in the first block for exactly 1/k of them.
            CHECK(enumerate_osp(n, k, true).size() * static_cast<std::size_t>(k) == enumerate_osp(n, k, false).size());
            total += enumerate_osp(n, k, false).size();
        }
        CHECK(enumerate_all_osp(n).size() == total);
        CHECK(ordered_bell(n) == static_cast<long>(total));
    }
    CHECK_THROWS_AS(validate_osp({{1, 2}, {2}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(validate_osp({{1}, {}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_osp({{1}}, 2), std::invalid_argument);
}

TEST_CASE("partitions and cycle types") {
    const auto parts = partitions(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts.front().str() == "(1,1,1,1)");
    CHECK(parts.back().str() == "(4)");
    CHECK(partitions(10).size() == 42);
    CHECK(CycleType({1, 2, 1}).str() == "(2,1,1)");
    CHECK(CycleType({2, 1, 1}).centralizer_order() == 4);
    CHECK(CycleType({2, 1, 1}).class_size() == 6);
    for (int n = 1; n <= 7; ++n) {
        Integer total = 0;
        for (const auto& t : partitions(n)) total += t.class_size();
        CHECK(total == factorial(n));
    }
}

TEST_CASE("permutations") {
    const auto p = Permutation::parse("(1 2 3)(4 5)", 6);
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p(6) == 6);
    CHECK(p.cycle_type().str() == "(3,2,1)");
    CHECK(p.one_line() == "[2,3,1,5,4,6]");
    CHECK(p.cycle_notation() == "(1 2 3)(4 5)");
    CHECK(Permutation::parse("[2,1,3]").cycle_type().str() == "(2,1)");
    CHECK(Permutation::identity(3).cycle_notation() == "()");
    CHECK((p * p.inverse()).is_identity());
    const auto a = Permutation::parse("(1 2)", 3), b = Permutation::parse("(2 3)", 3);
    CHECK((a * b)(3) == 1);  // a(b(3)) = a(2) = 1
    CHECK(Permutation::from_cycle_type(CycleType({3, 1})).cycle_type() == CycleType({3, 1}));
    CHECK(all_permutations(4).size() == 24);

    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(1 2", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(1 2 1)", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse("[1,2", 3), ParseError);
    // Non-disjoint cycles are a product, applied right to left.
    CHECK(Permutation::parse("(1 2)(2 3)", 3) == a * b);
    CHECK(compose(Permutation::parse("(1 2)", 2), Permutation::parse("(1 2)", 2)).is_identity());
    CHECK(Permutation::parse("[2,1,4,3]").cycle_notation() == "(1 2)(3 4)");
}

TEST_CASE("property: cycle type is a conjugacy invariant") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = testing::random_permutation(rng, n);
            const auto t = testing::random_permutation(rng, n);
            CHECK((t * s * t.inverse()).cycle_type() == s.cycle_type());
            CHECK(s.cycle_type().size() == n);
            CHECK(Permutation::parse(s.cycle_notation(), n) == s);
            CHECK(Permutation::parse(s.one_line()) == s);
        }
    }
}
