#include "plates/expansion.hpp"

#include <algorithm>
#include <sstream>

namespace plates {

PlateVector::PlateVector(int n, int r) : n_(n), r_(r) {
    if (n < 1 || r < 1) throw std::invalid_argument("PlateVector needs n >= 1 and r >= 1");
}

PlateVector PlateVector::basis_vector(const Plate& p) {
    PlateVector v(p.n(), p.total());
    v.add_term(p, Cyclotomic::one(p.total()));
    return v;
}

Cyclotomic PlateVector::coefficient(const Plate& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Cyclotomic(r_) : it->second;
}

void PlateVector::add_term(const Plate& p, const Cyclotomic& c) {
    if (p.n() != n_ || p.total() != r_) throw std::invalid_argument("plate does not belong to this module");
    if (!p.is_standard()) throw std::invalid_argument("PlateVector keys must be standard plates: " + p.str());
    if (c.order() != r_) throw OrderMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void PlateVector::require_compatible(const PlateVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PlateVector dimension mismatch");
    if (r_ != o.r_) throw OrderMismatch();
}

PlateVector& PlateVector::operator+=(const PlateVector& o) {
    require_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PlateVector& PlateVector::operator-=(const PlateVector& o) {
    require_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PlateVector& PlateVector::operator*=(const Cyclotomic& c) {
    if (c.order() != r_) throw OrderMismatch();
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, coeff] : terms_) coeff *= c;
    return *this;
}

std::string PlateVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (c.is_rational()) {
            const Rational q = c.to_rational();
            const Rational mag = q.sign() < 0 ? -q : q;
            if (first) {
                if (q.sign() < 0) os << '-';
            } else {
                os << (q.sign() < 0 ? " - " : " + ");
            }
            if (mag != Rational(1)) os << mag << '*';
        } else {
            if (!first) os << " + ";
            os << '(' << c.str() << ")*";
        }
        os << p.str();
        first = false;
    }
    return os.str();
}

PlateCombination PlateVector::to_combination() const {
    PlateCombination out;
    for (const auto& [p, c] : terms_) out.push_back({c, p});
    return out;
}

namespace {

Lump merged(const Lump& a, const Lump& b) {
    Lump out = a;
    out.block.insert(out.block.end(), b.block.begin(), b.block.end());
    std::sort(out.block.begin(), out.block.end());
    out.position += b.position;
    return out;
}

// Quasi-shuffles of u and v; a merge pairs one letter of each.
void stuffle(const std::vector<Lump>& u, std::size_t i, const std::vector<Lump>& v, std::size_t j,
             std::vector<Lump>& prefix, std::vector<std::vector<Lump>>& out) {
    if (i == u.size() || j == v.size()) {
        std::vector<Lump> word = prefix;
        word.insert(word.end(), u.begin() + static_cast<long>(i), u.end());
        word.insert(word.end(), v.begin() + static_cast<long>(j), v.end());
        out.push_back(std::move(word));
        return;
    }
    prefix.push_back(u[i]);
    stuffle(u, i + 1, v, j, prefix, out);
    prefix.back() = v[j];
    stuffle(u, i, v, j + 1, prefix, out);
    prefix.back() = merged(u[i], v[j]);
    stuffle(u, i + 1, v, j + 1, prefix, out);
    prefix.pop_back();
}

}  // namespace

std::vector<LumpedShuffle> lumped_shuffles(const std::vector<Lump>& a, const std::vector<Lump>& b) {
    if (a.empty()) throw std::invalid_argument("lumped_shuffles: first sequence must be nonempty");
    std::vector<LumpedShuffle> out;
    const std::size_t m = a.size();
    for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
        // Bit i-1 set: a[i] joins the run of a[i-1].
        std::vector<Lump> runs{a[0]};
        for (std::size_t i = 1; i < m; ++i) {
            if (mask & (1UL << (i - 1))) {
                runs.back() = merged(runs.back(), a[i]);
            } else {
                runs.push_back(a[i]);
            }
        }
        const std::vector<Lump> tail(runs.begin() + 1, runs.end());
        std::vector<std::vector<Lump>> words;
        std::vector<Lump> prefix;
        stuffle(tail, 0, b, 0, prefix, words);
        for (auto& w : words) {
            LumpedShuffle s;
            s.lumps.push_back(runs.front());
            s.lumps.insert(s.lumps.end(), w.begin(), w.end());
            s.lump_count = static_cast<int>(s.lumps.size());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlateVector expand(const Plate& p) {
    const int r = p.total();
    PlateVector out(p.n(), r);
    const std::size_t one_at = p.lump_of_one();
    const int m = static_cast<int>(one_at) + 1;
    const int k = static_cast<int>(p.size());
    std::vector<Lump> a;
    for (std::size_t i = one_at + 1; i-- > 0;) a.push_back(p.lump(i));
    const std::vector<Lump> b(p.lumps().begin() + static_cast<long>(one_at) + 1, p.lumps().end());
    for (auto& s : lumped_shuffles(a, b)) {
        const int sign = ((m - 1) + (k - s.lump_count)) % 2 == 0 ? 1 : -1;
        out.add_term(Plate(p.n(), std::move(s.lumps)), Cyclotomic(r, Rational(sign)));
    }
    return out;
}

PlateVector expand(const PlateCombination& combination, int n, int r) {
    PlateVector out(n, r);
    for (const auto& term : combination) {
        PlateVector v = expand(term.plate);
        v *= term.weight;
        out += v;
    }
    return out;
}

PlateVector oracle_expand(const Plate& p, const BasisSolver& solver) {
    const auto coefficients = solver.solve(p);
    PlateVector out(p.n(), p.total());
    for (std::size_t j = 0; j < coefficients.size(); ++j) out.add_term(solver.basis()[j], Cyclotomic(p.total(), coefficients[j]));
    return out;
}

PlateVector apply_permutation(const Permutation& sigma, const PlateVector& v) {
    PlateVector out(v.n(), v.r());
    for (const auto& [p, c] : v.terms()) {
        PlateVector image = expand(apply_permutation(sigma, p));
        image *= c;
        out += image;
    }
    return out;
}

QPlate qplate(const Plate& p) {
    const int r = p.total();
    const long k = static_cast<long>(p.size());
    QPlate out{p, {}};
    long moved = 0;
    for (long t = 0; t < k; ++t) {
        if (t > 0) moved += p.lump(static_cast<std::size_t>(k - t)).position;
        out.expansion.push_back({q_pow(r, -moved), rotate(p, t)});
    }
    return out;
}

PlateVector qplate_expand(const Plate& p) { return expand(qplate(p).expansion, p.n(), p.total()); }

Matrix<Cyclotomic> qbasis_matrix(int n, int r) {
    const auto basis = standard_basis(n, r);
    Matrix<Cyclotomic> m(basis.size(), basis.size(), Cyclotomic(r));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const PlateVector row = qplate_expand(basis[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = row.coefficient(basis[j]);
    }
    return m;
}

bool is_invertible(const Matrix<Cyclotomic>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace plates
