#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plates/repr.hpp"

namespace plates {

/// r^{n-1} == sum_{a=1}^{n-1} C(n+r-a-1, n-1) E_{a-1,n-a-1}.
[[nodiscard]] bool classical_worpitzky_check(int n, int r);

/// Hypersimplex characters chi_{B_{a,n-a}}, a = 1..n-1, obtained by solving
///   chi_{Delta_a} = sum_{a' <= a} chi_{Sym^{a-a'}} chi_{B_{a'}}
/// for a = 1..n-1 (triangular, Sym^0 is trivial), with chi_{Delta_a} the
/// closed-form plate character.
[[nodiscard]] std::vector<ClassFunction> derive_hypersimplex_characters(int n);

struct WorpitzkyResidual {
    int r = 0;
    CycleType type;
    Rational lhs;
    Rational rhs;
};

struct WorpitzkyReport {
    int n = 0;
    int r_max = 0;
    std::map<int, bool> classical;   // classical identity per r
    std::vector<ClassFunction> hypersimplex;  // index a-1
    std::vector<Integer> dimensions;          // chi_{B_a}(id)
    std::vector<Integer> eulerian_dimensions; // E_{a-1,n-a-1}
    std::vector<std::map<CycleType, Integer>> hypersimplex_multiplicities;
    std::vector<WorpitzkyResidual> residuals;  // nonzero residuals only
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// For every r <= r_max and cycle type, checks
///   chi_{Delta_r}(lambda) == sum_{a=1}^{n-1} chi_{Sym^{r-a}}(lambda) chi_{B_a}(lambda),
/// that chi_{B_a}(id) is the Eulerian number E_{a-1,n-a-1}, and that every
/// chi_{B_a} decomposes with nonnegative integer multiplicities.
[[nodiscard]] WorpitzkyReport verify_categorified_worpitzky(int n, int r_max);

}  // namespace plates
