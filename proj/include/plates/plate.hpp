#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "plates/combinatorics.hpp"
#include "plates/rational.hpp"

namespace plates {

/// One lump S_i of a plate together with its position s_i.
struct Lump {
    Block block;  // ascending
    int position = 0;

    friend auto operator<=>(const Lump&, const Lump&) = default;
};

/// Point of R^n with exact coordinates.
using RationalPoint = std::vector<Rational>;

/// Plate [[(S_1)_{s_1} ... (S_k)_{s_k}]]: indicator of the closed region
///
///   x_i >= 0,
///   x_{S_1} + ... + x_{S_j} >= s_1 + ... + s_j   (j = 1..k-1),
///   x_1 + ... + x_n = s_1 + ... + s_k.
///
/// The lumps form an ordered set partition of {1..n}; positions are >= 1.
class Plate {
public:
    Plate(int n, std::vector<Lump> lumps);
    Plate(int n, const OrderedSetPartition& blocks, const Composition& positions);

    /// Grammar: "[[" lump (SP lump)* "]]", lump := set "_" posint,
    /// set := "{" int ("," int)* "}" | digitstring. Digit strings are one
    /// letter per digit and only allowed when n <= 9. n defaults to the
    /// largest letter.
    static Plate parse(std::string_view text, int n = 0);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int total() const { return total_; }
    [[nodiscard]] std::size_t size() const { return lumps_.size(); }
    [[nodiscard]] const std::vector<Lump>& lumps() const { return lumps_; }
    [[nodiscard]] const Lump& lump(std::size_t i) const { return lumps_.at(i); }
    [[nodiscard]] std::vector<Block> blocks() const;
    [[nodiscard]] std::vector<int> positions() const;

    /// Index of the lump containing 1.
    [[nodiscard]] std::size_t lump_of_one() const;
    /// Standard-basis plate: 1 lies in the first lump.
    [[nodiscard]] bool is_standard() const { return lump_of_one() == 0; }

    /// Canonical brace form, e.g. "[[{3,5}_1 {1,2,4}_1 {6}_1]]".
    [[nodiscard]] std::string str() const;

    /// Canonical order: lump count, then blocks, then positions.
    friend std::strong_ordering operator<=>(const Plate& a, const Plate& b);
    friend bool operator==(const Plate& a, const Plate& b) { return a.n_ == b.n_ && a.lumps_ == b.lumps_; }

private:
    int n_;
    int total_ = 0;
    std::vector<Lump> lumps_;
};

/// 1 if x lies in the closed region of p, else 0.
[[nodiscard]] int evaluate(const Plate& p, const RationalPoint& x);

/// All plates obtained by merging runs of consecutive lumps (positions add),
/// including p itself; 2^{k-1} of them, canonical order.
[[nodiscard]] std::vector<Plate> lumpings(const Plate& p);

/// Moves the last t lumps (with their positions) to the front; t taken mod k.
[[nodiscard]] Plate rotate(const Plate& p, long t);

/// Each lump S_i becomes sigma(S_i); positions and lump order are kept.
[[nodiscard]] Plate apply_permutation(const Permutation& sigma, const Plate& p);

/// x permuted as (sigma x)_{sigma(i)} = x_i.
[[nodiscard]] RationalPoint apply_permutation(const Permutation& sigma, const RationalPoint& x);

/// All plates on {1..n} with total r whose first lump contains 1, canonical
/// order. Has r^{n-1} elements.
[[nodiscard]] std::vector<Plate> standard_basis(int n, int r);

/// Every plate on {1..n} with total r, canonical order.
[[nodiscard]] std::vector<Plate> all_plates(int n, int r);

}  // namespace plates
