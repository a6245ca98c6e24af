#include <algorithm>
#include <cctype>
#include <sstream>

#include "plates/combinatorics.hpp"

namespace plates {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycle_type(const CycleType& type) {
    std::vector<int> images(static_cast<std::size_t>(type.size()));
    int start = 1;
    for (int len : type.parts) {
        for (int j = 0; j < len; ++j) images[static_cast<std::size_t>(start + j - 1)] = start + (j + 1) % len;
        start += len;
    }
    return Permutation(std::move(images));
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return done() ? '\0' : text_[pos_]; }
    [[nodiscard]] std::size_t pos() const { return pos_; }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    int integer() {
        const std::size_t start = pos_;
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > 1'000'000) throw ParseError("integer too large", start);
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return static_cast<int>(value);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Permutation Permutation::parse(std::string_view text, int n) {
    Scanner s(text);
    s.skip_space();
    if (s.peek() == '[') {
        s.expect('[');
        std::vector<int> images;
        s.skip_space();
        while (s.peek() != ']') {
            if (!images.empty()) {
                s.expect(',');
                s.skip_space();
            }
            const std::size_t at = s.pos();
            images.push_back(s.integer());
            if (images.back() < 1) throw ParseError("letters start at 1", at);
            s.skip_space();
            if (s.done()) throw ParseError("unterminated one-line notation", s.pos());
        }
        s.expect(']');
        s.skip_space();
        if (!s.done()) throw ParseError("trailing characters", s.pos());
        if (n != 0 && static_cast<int>(images.size()) != n) throw ParseError("one-line notation has wrong length", 0);
        try {
            return Permutation(std::move(images));
        } catch (const std::invalid_argument&) {
            throw ParseError("one-line notation is not a bijection", 0);
        }
    }

    std::vector<std::vector<int>> cycles;
    int max_letter = 0;
    while (!s.done()) {
        s.expect('(');
        s.skip_space();
        std::vector<int> cycle;
        while (s.peek() != ')') {
            if (s.done()) throw ParseError("unterminated cycle", s.pos());
            const std::size_t at = s.pos();
            const int v = s.integer();
            if (v < 1) throw ParseError("letters start at 1", at);
            cycle.push_back(v);
            max_letter = std::max(max_letter, v);
            s.skip_space();
            if (s.peek() == ',') {
                s.expect(',');
                s.skip_space();
            }
        }
        s.expect(')');
        s.skip_space();
        cycles.push_back(std::move(cycle));
    }
    if (cycles.empty()) throw ParseError("empty permutation", 0);
    if (n == 0) n = std::max(max_letter, 1);
    if (max_letter > n) throw ParseError("letter exceeds n", 0);

    // Cycles compose right to left, matching function notation.
    Permutation result = identity(n);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> images = identity(n).images_;
        std::fill(used.begin(), used.end(), false);
        for (std::size_t j = 0; j < it->size(); ++j) {
            const int a = (*it)[j];
            if (used[static_cast<std::size_t>(a)]) throw ParseError("repeated letter in cycle", 0);
            used[static_cast<std::size_t>(a)] = true;
            images[static_cast<std::size_t>(a - 1)] = (*it)[(j + 1) % it->size()];
        }
        result = Permutation(std::move(images)) * result;
    }
    return result;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
            seen[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

std::string Permutation::one_line() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
}

std::string Permutation::cycle_notation() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        os << '(';
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
        os << ')';
    }
    const std::string out = os.str();
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> images(q.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q.images_[i]);
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> images = Permutation::identity(n).images();
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace plates
