#include "plates/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace plates {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// E_{i,j} = (i+1) E_{i,j-1} + (j+1) E_{i-1,j}: insert the largest letter into a
// permutation of one fewer letter, either at a descent slot or an ascent slot.
Integer eulerian(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("eulerian: indices must be nonnegative");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Integer> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
    }
    Integer value;
    if (i == 0 || j == 0) {
        value = 1;
    } else {
        value = (i + 1) * eulerian(i, j - 1) + (j + 1) * eulerian(i - 1, j);
    }
    std::lock_guard lock(mutex);
    memo.emplace(std::make_pair(i, j), value);
    return value;
}

std::vector<Integer> eulerian_row(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_row: n must be positive");
    std::vector<Integer> row;
    for (int i = 0; i < n; ++i) row.push_back(eulerian(i, n - 1 - i));
    return row;
}

Integer ordered_bell(int n) {
    std::vector<Integer> a(static_cast<std::size_t>(n) + 1);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(m)] += binomial(m, k) * a[static_cast<std::size_t>(m - k)];
    }
    return a[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts) {
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int CycleType::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

Integer CycleType::centralizer_order() const {
    std::map<int, int> mult;
    for (int x : parts) ++mult[x];
    Integer z = 1;
    for (auto [len, m] : mult) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(m));
        z *= p * factorial(m);
    }
    return z;
}

Integer CycleType::class_size() const { return factorial(size()) / centralizer_order(); }

int CycleType::sign() const {
    int even_parts = 0;
    for (int x : parts) even_parts += (x % 2 == 0);
    return even_parts % 2 == 0 ? 1 : -1;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<CycleType>& out) {
    if (remaining == 0) {
        CycleType t;
        t.parts = prefix;
        out.push_back(std::move(t));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void compositions_into(int remaining, int slots, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(Composition{prefix});
        prefix.pop_back();
        return;
    }
    for (int part = 1; part <= remaining - (slots - 1); ++part) {
        prefix.push_back(part);
        compositions_into(remaining - part, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<CycleType> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
    std::vector<CycleType> out;
    std::vector<int> prefix;
    partitions_into(n, n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> enumerate_compositions(int r, int k) {
    std::vector<Composition> out;
    if (r < 1 || k < 1 || k > r) return out;
    std::vector<int> parts;
    compositions_into(r, k, parts, out);
    return out;
}

void validate_osp(const std::vector<Block>& blocks, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int count = 0;
    for (const Block& b : blocks) {
        if (b.empty()) throw std::invalid_argument("ordered set partition has an empty block");
        for (int x : b) {
            if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = true;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("ordered set partition does not cover 1.." + std::to_string(n));
}

std::vector<OrderedSetPartition> enumerate_osp(int n, int k, bool one_first) {
    std::vector<OrderedSetPartition> out;
    if (k < 1 || k > n) return out;
    // Walk all surjective block assignments of the n elements.
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<Block> blocks(static_cast<std::size_t>(k));
        for (int e = 0; e < n; ++e) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(e)])].push_back(e + 1);
        const bool surjective = std::none_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); });
        if (surjective && (!one_first || assign[0] == 0)) out.push_back(OrderedSetPartition{std::move(blocks)});
        int pos = n - 1;
        while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == k - 1) assign[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++assign[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderedSetPartition> enumerate_all_osp(int n) {
    std::vector<OrderedSetPartition> out;
    for (int k = 1; k <= n; ++k) {
        auto part = enumerate_osp(n, k, false);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace plates
