#include "plates/worpitzky.hpp"

#include <stdexcept>

namespace plates {

bool classical_worpitzky_check(int n, int r) {
    if (n < 2 || r < 1) throw std::invalid_argument("classical_worpitzky_check needs n >= 2, r >= 1");
    Integer lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n - 1));
    Integer rhs = 0;
    for (int a = 1; a <= n - 1; ++a) rhs += binomial(n + r - a - 1, n - 1) * eulerian(a - 1, n - a - 1);
    return lhs == rhs;
}

std::vector<ClassFunction> derive_hypersimplex_characters(int n) {
    if (n < 2) throw std::invalid_argument("derive_hypersimplex_characters needs n >= 2");
    std::vector<ClassFunction> chi;
    for (int a = 1; a <= n - 1; ++a) {
        ClassFunction next = formula_character(n, a);
        for (int prev = 1; prev < a; ++prev) {
            next -= sym_power_character(a - prev, n) * chi[static_cast<std::size_t>(prev - 1)];
        }
        chi.push_back(std::move(next));
    }
    return chi;
}

WorpitzkyReport verify_categorified_worpitzky(int n, int r_max) {
    if (n < 2 || r_max < n) throw std::invalid_argument("verify_categorified_worpitzky needs n >= 2 and r_max >= n");
    WorpitzkyReport report;
    report.n = n;
    report.r_max = r_max;
    report.hypersimplex = derive_hypersimplex_characters(n);

    for (int r = 1; r <= r_max; ++r) {
        const bool ok = classical_worpitzky_check(n, r);
        report.classical[r] = ok;
        if (!ok) report.failures.push_back("classical identity fails at r=" + std::to_string(r));

        const ClassFunction lhs = formula_character(n, r);
        ClassFunction rhs(n);
        for (int a = 1; a <= n - 1; ++a) rhs += sym_power_character(r - a, n) * report.hypersimplex[static_cast<std::size_t>(a - 1)];
        for (const auto& [type, value] : lhs.values()) {
            if (value == rhs(type)) continue;
            report.residuals.push_back({r, type, value, rhs(type)});
            report.failures.push_back("categorified identity fails at r=" + std::to_string(r) + ", class " + type.str());
        }
    }

    for (int a = 1; a <= n - 1; ++a) {
        const ClassFunction& chi = report.hypersimplex[static_cast<std::size_t>(a - 1)];
        const Rational dim = chi.degree();
        const Integer expected = eulerian(a - 1, n - a - 1);
        report.dimensions.push_back(dim.numerator());
        report.eulerian_dimensions.push_back(expected);
        if (dim != Rational(expected)) report.failures.push_back("dim B_" + std::to_string(a) + " is not Eulerian");
        try {
            report.hypersimplex_multiplicities.push_back(multiplicities(chi));
        } catch (const NotACharacter&) {
            report.hypersimplex_multiplicities.emplace_back();
            report.failures.push_back("chi_B_" + std::to_string(a) + " is not a character");
        }
    }
    return report;
}

}  // namespace plates
