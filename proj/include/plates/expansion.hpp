#pragma once

#include <map>
#include <string>
#include <vector>

#include "plates/cyclotomic.hpp"
#include "plates/matrix.hpp"
#include "plates/oracle.hpp"
#include "plates/plate.hpp"

namespace plates {

/// Element of Pl(Delta_r^n) written in the standard basis. Coefficients live
/// in Q(zeta_r), r being the common total of all plates.
class PlateVector {
public:
    PlateVector(int n, int r);
    /// The basis vector of a standard plate.
    static PlateVector basis_vector(const Plate& p);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] const std::map<Plate, Cyclotomic>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Cyclotomic coefficient(const Plate& p) const;

    /// Adds c * p for a standard plate p.
    void add_term(const Plate& p, const Cyclotomic& c);

    PlateVector& operator+=(const PlateVector& o);
    PlateVector& operator-=(const PlateVector& o);
    PlateVector& operator*=(const Cyclotomic& c);

    friend PlateVector operator+(PlateVector a, const PlateVector& b) { return a += b; }
    friend PlateVector operator-(PlateVector a, const PlateVector& b) { return a -= b; }
    friend PlateVector operator*(const Cyclotomic& c, PlateVector v) { return v *= c; }
    friend bool operator==(const PlateVector&, const PlateVector&) = default;

    /// "[[{1,2}_2]] - [[{1}_1 {2}_1]]"; coefficients in parentheses when not rational.
    [[nodiscard]] std::string str() const;
    [[nodiscard]] PlateCombination to_combination() const;

private:
    void require_compatible(const PlateVector& o) const;

    int n_;
    int r_;
    std::map<Plate, Cyclotomic> terms_;
};

/// One term of a lumped shuffle: the merged lump sequence and its lump count.
struct LumpedShuffle {
    std::vector<Lump> lumps;
    int lump_count = 0;

    friend auto operator<=>(const LumpedShuffle&, const LumpedShuffle&) = default;
};

/// Lumped shuffles of a = (S_1, S_2, ..., S_m) with b = (S_{m+1}, ..., S_k):
/// a is first lumped along runs of consecutive blocks (the run holding S_1
/// becomes the leading lump), then the remaining a-lumps are quasi-shuffled
/// with b, where a merge joins exactly one a-lump with exactly one b-block.
/// Blocks of b are never merged with each other nor with the leading lump.
[[nodiscard]] std::vector<LumpedShuffle> lumped_shuffles(const std::vector<Lump>& a, const std::vector<Lump>& b);

/// Standard-basis expansion of an arbitrary plate by the lumped-shuffle
/// formula. For p = [[S_m ... S_2 S_1 S_{m+1} ... S_k]], 1 in S_1:
///   p = sum over lumped shuffles w of (S_1..S_m), (S_{m+1}..S_k) of
///       (-1)^{m-1} (-1)^{k - n_L(w)} [[w]].
[[nodiscard]] PlateVector expand(const Plate& p);

/// Expansion of a formal combination; every plate must share n and r.
[[nodiscard]] PlateVector expand(const PlateCombination& combination, int n, int r);

/// The oracle's expansion of p, solved against standard_basis(n, r).
[[nodiscard]] PlateVector oracle_expand(const Plate& p, const BasisSolver& solver);

/// sigma applied to every term, re-expanded into the standard basis.
[[nodiscard]] PlateVector apply_permutation(const Permutation& sigma, const PlateVector& v);

/// q-plate {(S_1)_{s_1} ... (S_k)_{s_k}}: the cyclic sum of rotations of the
/// representative, rotation t weighted by q^{-(positions moved to the front)}.
struct QPlate {
    Plate representative;
    PlateCombination expansion;  // one term per rotation t = 0..k-1
};

[[nodiscard]] QPlate qplate(const Plate& p);
[[nodiscard]] PlateVector qplate_expand(const Plate& p);

/// Row i holds the basis q-plate of standard_basis(n, r)[i] in standard
/// coordinates.
[[nodiscard]] Matrix<Cyclotomic> qbasis_matrix(int n, int r);
[[nodiscard]] bool is_invertible(const Matrix<Cyclotomic>& m);

}  // namespace plates
