#include "doctest.h"
#include "plates/worpitzky.hpp"

using namespace plates;

namespace {

CycleType C(std::vector<int> parts) { return CycleType(std::move(parts)); }

ClassFunction values(int n, const std::vector<long>& v) {
    ClassFunction out(n);
    std::size_t i = 0;
    for (const auto& type : partitions(n)) out.set(type, Rational(v.at(i++)));
    return out;
}

}  // namespace

TEST_CASE("classical identity") {
    CHECK(classical_worpitzky_check(3, 2));
    CHECK(classical_worpitzky_check(4, 3));
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; r <= 10; ++r) CHECK(classical_worpitzky_check(n, r));
    }
    // The terms themselves: 27 = 1 + 4*4 + 10 at n=4, r=3.
    CHECK(binomial(4 + 3 - 1 - 1, 3) * eulerian(0, 2) == 10);
    CHECK(binomial(4 + 3 - 2 - 1, 3) * eulerian(1, 1) == 16);
    CHECK(binomial(4 + 3 - 3 - 1, 3) * eulerian(2, 0) == 1);
    CHECK_THROWS_AS((void)classical_worpitzky_check(1, 2), std::invalid_argument);
}

TEST_CASE("hypersimplex characters") {
    const auto b3 = derive_hypersimplex_characters(3);
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == ClassFunction::constant(3, Rational(1)));
    CHECK(b3[1] == ClassFunction::constant(3, Rational(1)));

    // Classes in ascending order: (1^4), (2,1,1), (2,2), (3,1), (4).
    const auto b4 = derive_hypersimplex_characters(4);
    REQUIRE(b4.size() == 3);
    CHECK(b4[1] == values(4, {4, 2, 0, 1, 0}));
    CHECK(b4[0] == ClassFunction::constant(4, Rational(1)));
    CHECK(b4[2] == ClassFunction::constant(4, Rational(1)));
}

TEST_CASE("categorified identity") {
    const auto r3 = verify_categorified_worpitzky(3, 8);
    CHECK(r3.ok());
    CHECK(r3.residuals.empty());
    CHECK(r3.dimensions == std::vector<Integer>{1, 1});
    CHECK(r3.dimensions == r3.eulerian_dimensions);

    const auto r4 = verify_categorified_worpitzky(4, 8);
    CHECK(r4.ok());
    CHECK(r4.dimensions == std::vector<Integer>{1, 4, 1});

    const auto r5 = verify_categorified_worpitzky(5, 10);
    CHECK(r5.ok());
    CHECK(r5.dimensions == std::vector<Integer>{1, 11, 11, 1});

    for (int n = 2; n <= 7; ++n) {
        const auto report = verify_categorified_worpitzky(n, n + 2);
        CAPTURE(n);
        CHECK(report.ok());
        CHECK(report.dimensions == eulerian_row(n - 1));
        for (const auto& m : report.hypersimplex_multiplicities) CHECK_FALSE(m.empty());
    }
    // B_{2,2} = trivial + standard.
    std::map<CycleType, Integer> nonzero;
    for (const auto& [mu, m] : r4.hypersimplex_multiplicities[1]) {
        if (m != 0) nonzero.emplace(mu, m);
    }
    CHECK(nonzero == std::map<CycleType, Integer>{{C({4}), 1}, {C({3, 1}), 1}});

    CHECK_THROWS_AS((void)verify_categorified_worpitzky(4, 3), std::invalid_argument);
}
