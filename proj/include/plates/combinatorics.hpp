#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plates/rational.hpp"

namespace plates {

/// Malformed textual input; `position` is the 0-based offset of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// ---------------------------------------------------------------------------
// Counting

[[nodiscard]] Integer factorial(int n);
/// C(n, k); zero outside 0 <= k <= n.
[[nodiscard]] Integer binomial(long n, long k);

/// E_{i,j}: permutations of i+j+1 letters with i ascents and j descents.
[[nodiscard]] Integer eulerian(int i, int j);
/// Row n of the Eulerian triangle, E_{0,n-1} ... E_{n-1,0}.
[[nodiscard]] std::vector<Integer> eulerian_row(int n);

/// Number of ordered set partitions of an n-set (Fubini numbers).
[[nodiscard]] Integer ordered_bell(int n);

// ---------------------------------------------------------------------------
// Partitions and compositions

/// Integer partition lambda_1 >= ... >= lambda_k > 0. Used both as a cycle
/// type and as an irreducible-representation label.
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    /// Sorts the parts decreasingly; throws on a non-positive part.
    explicit CycleType(std::vector<int> parts);

    [[nodiscard]] int size() const;
    [[nodiscard]] std::size_t length() const { return parts.size(); }
    /// "(2,1,1)".
    [[nodiscard]] std::string str() const;
    /// Order of the centralizer: prod_i i^{m_i} m_i!.
    [[nodiscard]] Integer centralizer_order() const;
    /// n! / centralizer_order().
    [[nodiscard]] Integer class_size() const;
    /// +1 for even permutations, -1 for odd.
    [[nodiscard]] int sign() const;

    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// All partitions of n, lexicographically increasing as part vectors,
/// so (1,1,...,1) comes first and (n) last.
[[nodiscard]] std::vector<CycleType> partitions(int n);

struct Composition {
    std::vector<int> parts;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Compositions of r into exactly k positive parts, lexicographic order.
[[nodiscard]] std::vector<Composition> enumerate_compositions(int r, int k);

// ---------------------------------------------------------------------------
// Ordered set partitions

using Block = std::vector<int>;

struct OrderedSetPartition {
    std::vector<Block> blocks;
    friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

/// Throws std::invalid_argument unless the blocks are nonempty, disjoint and
/// cover 1..n.
void validate_osp(const std::vector<Block>& blocks, int n);

/// Ordered set partitions of {1..n} into k blocks, each block ascending, the
/// list sorted lexicographically. With one_first only those with 1 in the
/// first block.
[[nodiscard]] std::vector<OrderedSetPartition> enumerate_osp(int n, int k, bool one_first);

/// Same, over all block counts 1..n.
[[nodiscard]] std::vector<OrderedSetPartition> enumerate_all_osp(int n);

// ---------------------------------------------------------------------------
// Permutations

/// Bijection of {1..n}. Composition follows function notation: (p * q)(i) = p(q(i)).
class Permutation {
public:
    Permutation() = default;
    /// One-line images (1-based values). Throws unless a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Disjoint cycles of length lambda_1, lambda_2, ... on consecutive letters.
    static Permutation from_cycle_type(const CycleType& type);

    /// Accepts "[i1,...,in]" or cycle notation "(a b c)(d e)". For cycle
    /// notation n defaults to the largest letter mentioned; "()" is the
    /// identity on n letters.
    static Permutation parse(std::string_view text, int n = 0);

    [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] std::vector<std::vector<int>> cycles() const;
    [[nodiscard]] CycleType cycle_type() const;
    [[nodiscard]] bool is_identity() const;

    /// "[2,1,4,3]".
    [[nodiscard]] std::string one_line() const;
    /// "(1 2)(3 4)", fixed points omitted, "()" for the identity.
    [[nodiscard]] std::string cycle_notation() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

[[nodiscard]] inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
[[nodiscard]] inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

/// All n! permutations in lexicographic one-line order.
[[nodiscard]] std::vector<Permutation> all_permutations(int n);

}  // namespace plates
