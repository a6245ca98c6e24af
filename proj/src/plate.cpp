#include "plates/plate.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace plates {

Plate::Plate(int n, std::vector<Lump> lumps) : n_(n), lumps_(std::move(lumps)) {
    if (n < 1) throw std::invalid_argument("plate needs n >= 1");
    if (lumps_.empty()) throw std::invalid_argument("plate needs at least one lump");
    std::vector<Block> blocks;
    for (auto& l : lumps_) {
        if (l.position < 1) throw std::invalid_argument("plate positions must be positive");
        std::sort(l.block.begin(), l.block.end());
        total_ += l.position;
        blocks.push_back(l.block);
    }
    validate_osp(blocks, n);
}

Plate::Plate(int n, const OrderedSetPartition& blocks, const Composition& positions)
    : Plate(n, [&] {
          if (blocks.blocks.size() != positions.parts.size()) throw std::invalid_argument("plate needs one position per lump");
          std::vector<Lump> lumps;
          for (std::size_t i = 0; i < blocks.blocks.size(); ++i) lumps.push_back({blocks.blocks[i], positions.parts[i]});
          return lumps;
      }()) {}

std::vector<Block> Plate::blocks() const {
    std::vector<Block> out;
    for (const auto& l : lumps_) out.push_back(l.block);
    return out;
}

std::vector<int> Plate::positions() const {
    std::vector<int> out;
    for (const auto& l : lumps_) out.push_back(l.position);
    return out;
}

std::size_t Plate::lump_of_one() const {
    for (std::size_t i = 0; i < lumps_.size(); ++i) {
        if (std::find(lumps_[i].block.begin(), lumps_[i].block.end(), 1) != lumps_[i].block.end()) return i;
    }
    throw std::logic_error("plate without the letter 1");
}

std::string Plate::str() const {
    std::ostringstream os;
    os << "[[";
    for (std::size_t i = 0; i < lumps_.size(); ++i) {
        if (i) os << ' ';
        os << '{';
        for (std::size_t j = 0; j < lumps_[i].block.size(); ++j) os << (j ? "," : "") << lumps_[i].block[j];
        os << "}_" << lumps_[i].position;
    }
    os << "]]";
    return os.str();
}

std::strong_ordering operator<=>(const Plate& a, const Plate& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.lumps_.size() <=> b.lumps_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.lumps_.size(); ++i) {
        if (auto c = a.lumps_[i].block <=> b.lumps_[i].block; c != 0) return c;
    }
    for (std::size_t i = 0; i < a.lumps_.size(); ++i) {
        if (auto c = a.lumps_[i].position <=> b.lumps_[i].position; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Plate Plate::parse(std::string_view text, int n) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto peek = [&] { return pos < text.size() ? text[pos] : '\0'; };
    auto expect = [&](std::string_view token) {
        if (text.substr(pos, token.size()) != token) throw ParseError("expected '" + std::string(token) + "'", pos);
        pos += token.size();
    };
    auto integer = [&]() -> std::pair<long, std::size_t> {
        const std::size_t start = pos;
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text[pos++] - '0');
            if (value > 1'000'000) throw ParseError("integer too large", start);
        }
        if (pos == start) throw ParseError("expected integer", start);
        return {value, start};
    };

    struct Letter {
        int value;
        std::size_t at;
    };
    std::vector<std::vector<Letter>> sets;
    std::vector<int> positions;
    bool compact = false;
    std::size_t compact_at = 0;

    skip_space();
    expect("[[");
    skip_space();
    while (text.substr(pos, 2) != "]]") {
        if (pos >= text.size()) throw ParseError("unterminated plate", pos);
        std::vector<Letter> set;
        if (peek() == '{') {
            ++pos;
            skip_space();
            while (true) {
                auto [v, at] = integer();
                if (v < 1) throw ParseError("letters start at 1", at);
                set.push_back({static_cast<int>(v), at});
                skip_space();
                if (peek() == ',') {
                    ++pos;
                    skip_space();
                    continue;
                }
                if (peek() == '}') {
                    ++pos;
                    break;
                }
                throw ParseError("expected ',' or '}'", pos);
            }
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (!compact) compact_at = pos;
            compact = true;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                if (peek() == '0') throw ParseError("letters start at 1", pos);
                set.push_back({peek() - '0', pos});
                ++pos;
            }
        } else {
            throw ParseError("expected a lump", pos);
        }
        expect("_");
        if (peek() == '0') throw ParseError("zero position", pos);
        auto [s, at] = integer();
        (void)at;
        sets.push_back(std::move(set));
        positions.push_back(static_cast<int>(s));
        skip_space();
    }
    const std::size_t close_at = pos;
    expect("]]");
    skip_space();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    if (sets.empty()) throw ParseError("plate needs at least one lump", close_at);

    int max_letter = 0;
    for (const auto& set : sets)
        for (const auto& l : set) max_letter = std::max(max_letter, l.value);
    if (n == 0) n = max_letter;
    if (compact && n > 9) throw ParseError("compact digit lumps need n <= 9", compact_at);

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<Lump> lumps;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Lump lump;
        for (const auto& l : sets[i]) {
            if (l.value > n) throw ParseError("letter exceeds n", l.at);
            if (seen[static_cast<std::size_t>(l.value)]) throw ParseError("letter appears in two lumps", l.at);
            seen[static_cast<std::size_t>(l.value)] = true;
            lump.block.push_back(l.value);
        }
        lump.position = positions[i];
        lumps.push_back(std::move(lump));
    }
    for (int v = 1; v <= n; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) throw ParseError("letter " + std::to_string(v) + " missing", close_at);
    }
    return Plate(n, std::move(lumps));
}

int evaluate(const Plate& p, const RationalPoint& x) {
    if (static_cast<int>(x.size()) != p.n()) throw std::invalid_argument("evaluate: dimension mismatch");
    Rational total;
    for (const auto& xi : x) {
        if (xi.sign() < 0) return 0;
        total += xi;
    }
    if (total != Rational(p.total())) return 0;
    Rational partial;
    long bound = 0;
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        for (int e : p.lump(j).block) partial += x[static_cast<std::size_t>(e - 1)];
        bound += p.lump(j).position;
        if (partial < Rational(bound)) return 0;
    }
    return 1;
}

std::vector<Plate> lumpings(const Plate& p) {
    const std::size_t k = p.size();
    std::vector<Plate> out;
    // Bit j of mask set: lump j+1 is merged into the run containing lump j.
    for (unsigned long mask = 0; mask < (1UL << (k - 1)); ++mask) {
        std::vector<Lump> lumps{p.lump(0)};
        for (std::size_t j = 1; j < k; ++j) {
            if (mask & (1UL << (j - 1))) {
                Lump& last = lumps.back();
                last.block.insert(last.block.end(), p.lump(j).block.begin(), p.lump(j).block.end());
                last.position += p.lump(j).position;
            } else {
                lumps.push_back(p.lump(j));
            }
        }
        out.emplace_back(p.n(), std::move(lumps));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Plate rotate(const Plate& p, long t) {
    const long k = static_cast<long>(p.size());
    t = ((t % k) + k) % k;
    std::vector<Lump> lumps;
    for (long i = 0; i < k; ++i) lumps.push_back(p.lump(static_cast<std::size_t>((i - t + k) % k)));
    return Plate(p.n(), std::move(lumps));
}

Plate apply_permutation(const Permutation& sigma, const Plate& p) {
    if (sigma.size() != p.n()) throw std::invalid_argument("permutation and plate sizes differ");
    std::vector<Lump> lumps;
    for (const auto& l : p.lumps()) {
        Lump image{{}, l.position};
        for (int e : l.block) image.block.push_back(sigma(e));
        lumps.push_back(std::move(image));
    }
    return Plate(p.n(), std::move(lumps));
}

RationalPoint apply_permutation(const Permutation& sigma, const RationalPoint& x) {
    if (static_cast<int>(x.size()) != sigma.size()) throw std::invalid_argument("permutation and point sizes differ");
    RationalPoint y(x.size());
    for (int i = 1; i <= sigma.size(); ++i) y[static_cast<std::size_t>(sigma(i) - 1)] = x[static_cast<std::size_t>(i - 1)];
    return y;
}

namespace {

std::vector<Plate> plates_with(int n, int r, bool one_first) {
    if (n < 1 || r < 1) throw std::invalid_argument("plates need n >= 1 and r >= 1");
    std::vector<Plate> out;
    for (int k = 1; k <= std::min(n, r); ++k) {
        const auto comps = enumerate_compositions(r, k);
        for (const auto& osp : enumerate_osp(n, k, one_first)) {
            for (const auto& c : comps) out.emplace_back(n, osp, c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Plate> standard_basis(int n, int r) { return plates_with(n, r, true); }

std::vector<Plate> all_plates(int n, int r) { return plates_with(n, r, false); }

}  // namespace plates
