#include "plates/translation.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace plates {

namespace {

int mod(long a, int r) {
    const long m = a % r;
    return static_cast<int>(m < 0 ? m + r : m);
}

}  // namespace

TranslationElement::TranslationElement(int n, int r) : n_(n), r_(r) {
    if (n < 1 || r < 1) throw std::invalid_argument("translation algebra needs n >= 1 and r >= 1");
}

TranslationElement TranslationElement::one(int n, int r) {
    TranslationElement out(n, r);
    out.add_term(Exponents(static_cast<std::size_t>(n - 1), 0), Cyclotomic::one(r));
    return out;
}

TranslationElement TranslationElement::generator(int n, int r, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    std::vector<long> word(static_cast<std::size_t>(n), 0);
    word[static_cast<std::size_t>(i - 1)] = 1;
    return normalize(word, Cyclotomic::one(r), r);
}

Cyclotomic TranslationElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic(r_) : it->second;
}

void TranslationElement::add_term(const Exponents& e, const Cyclotomic& c) {
    if (static_cast<int>(e.size()) != n_ - 1) throw std::invalid_argument("exponent vector has wrong length");
    for (int x : e) {
        if (x < 0 || x >= r_) throw std::invalid_argument("exponents must be reduced mod r");
    }
    if (c.order() != r_) throw OrderMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void TranslationElement::require_compatible(const TranslationElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("translation elements with different n");
    if (r_ != o.r_) throw OrderMismatch();
}

TranslationElement& TranslationElement::operator+=(const TranslationElement& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TranslationElement& TranslationElement::operator-=(const TranslationElement& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TranslationElement& TranslationElement::operator*=(const Cyclotomic& c) {
    if (c.order() != r_) throw OrderMismatch();
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

TranslationElement operator*(const TranslationElement& a, const TranslationElement& b) {
    a.require_compatible(b);
    TranslationElement out(a.n_, a.r_);
    Exponents e(static_cast<std::size_t>(a.n_ - 1));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = (ea[i] + eb[i]) % a.r_;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string TranslationElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ')';
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*e" << i + 2;
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

TranslationElement normalize(const std::vector<long>& word, const Cyclotomic& scalar, int r) {
    const int n = static_cast<int>(word.size());
    TranslationElement out(n, r);
    Exponents e(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = mod(word[static_cast<std::size_t>(i)] - word[0], r);
    out.add_term(e, scalar * q_pow(r, word[0]));
    return out;
}

TranslationElement ta_act(const Permutation& sigma, const TranslationElement& x) {
    if (sigma.size() != x.n()) throw std::invalid_argument("permutation and algebra sizes differ");
    TranslationElement out(x.n(), x.r());
    std::vector<long> word(static_cast<std::size_t>(x.n()));
    for (const auto& [e, c] : x.terms()) {
        std::fill(word.begin(), word.end(), 0);
        for (int j = 2; j <= x.n(); ++j) word[static_cast<std::size_t>(sigma(j) - 1)] = e[static_cast<std::size_t>(j - 2)];
        out += normalize(word, c, x.r());
    }
    return out;
}

std::vector<Exponents> monomial_basis(int n, int r) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        out.push_back(e);
        int pos = n - 2;
        while (pos >= 0 && e[static_cast<std::size_t>(pos)] == r - 1) e[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++e[static_cast<std::size_t>(pos)];
    }
    return out;
}

Matrix<Cyclotomic> ta_action_matrix(const Permutation& sigma, int r) {
    const int n = sigma.size();
    const auto basis = monomial_basis(n, r);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    Matrix<Cyclotomic> m(basis.size(), basis.size(), Cyclotomic(r));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        TranslationElement mono(n, r);
        mono.add_term(basis[j], Cyclotomic::one(r));
        const TranslationElement image = ta_act(sigma, mono);
        for (const auto& [e, c] : image.terms()) m(index.at(e), j) = c;
    }
    return m;
}

Cyclotomic ta_trace(const Permutation& sigma, int r) {
    // The action is monomial, so the trace is the sum of the diagonal scalars.
    const int n = sigma.size();
    Cyclotomic sum(r);
    for (const auto& e : monomial_basis(n, r)) {
        TranslationElement mono(n, r);
        mono.add_term(e, Cyclotomic::one(r));
        sum += ta_act(sigma, mono).coefficient(e);
    }
    return sum;
}

Integer diophantine_count_enumerated(const CycleType& type, int r) {
    const std::size_t k = type.length();
    std::vector<int> x(k, 0);
    Integer count = 0;
    while (true) {
        long s = 0;
        for (std::size_t i = 0; i < k; ++i) s += static_cast<long>(type.parts[i]) * x[i];
        if (mod(s, r) == 1 % r) ++count;
        std::size_t pos = k;
        while (pos > 0 && x[pos - 1] == r - 1) x[--pos] = 0;
        if (pos == 0) break;
        ++x[pos - 1];
    }
    return count;
}

Integer diophantine_count_closed(const CycleType& type, int r) {
    long g = r;
    for (int part : type.parts) g = std::gcd(g, static_cast<long>(part));
    if (g != 1) return 0;
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(r), type.length() - 1);
    return out;
}

Integer diophantine_count(const CycleType& type, int r) {
    if (r < 1) throw std::invalid_argument("diophantine_count: r must be positive");
    Integer space;
    mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(r), type.length());
    if (space <= 10'000'000) return diophantine_count_enumerated(type, r);
    return diophantine_count_closed(type, r);
}

void validate_label(const IdempotentLabel& label, int r) {
    long s = 0;
    for (int i : label.indices) {
        if (i < 0 || i >= r) throw std::invalid_argument("idempotent label entries must lie in 0..r-1");
        s += i;
    }
    if (mod(s, r) != 1 % r) throw NotInLabelSet();
}

std::vector<IdempotentLabel> idempotent_labels(int n, int r) {
    std::vector<IdempotentLabel> out;
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    while (true) {
        const long s = std::accumulate(x.begin(), x.end(), 0L);
        if (mod(s, r) == 1 % r) out.push_back({x});
        int pos = n - 1;
        while (pos >= 0 && x[static_cast<std::size_t>(pos)] == r - 1) x[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++x[static_cast<std::size_t>(pos)];
    }
    return out;
}

TranslationElement idempotent(const IdempotentLabel& label, int r) {
    validate_label(label, r);
    const int n = static_cast<int>(label.indices.size());
    TranslationElement product = TranslationElement::one(n, r);
    for (int j = 1; j <= n; ++j) {
        const int ij = label.indices[static_cast<std::size_t>(j - 1)];
        TranslationElement factor(n, r);
        std::vector<long> word(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < r; ++k) {
            word[static_cast<std::size_t>(j - 1)] = k;
            factor += normalize(word, q_pow(r, -static_cast<long>(ij) * k), r);
        }
        product = product * factor;
    }
    Integer rn;
    mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
    product *= Cyclotomic(r, Rational(Integer(1), rn));
    return product;
}

PartitionOfUnityReport verify_partition_of_unity(int n, int r, std::uint64_t seed, unsigned long exhaustive_limit) {
    PartitionOfUnityReport report;
    report.n = n;
    report.r = r;
    const auto labels = idempotent_labels(n, r);
    std::vector<TranslationElement> eps;
    eps.reserve(labels.size());
    for (const auto& l : labels) eps.push_back(idempotent(l, r));

    auto label_str = [](const IdempotentLabel& l) {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < l.indices.size(); ++i) os << (i ? "," : "") << l.indices[i];
        os << ')';
        return os.str();
    };

    TranslationElement sum(n, r);
    for (const auto& e : eps) sum += e;
    if (!(sum == TranslationElement::one(n, r))) report.failures.push_back("sum of idempotents is not 1");

    TranslationElement all_generators = TranslationElement::one(n, r);
    for (int j = 1; j <= n; ++j) all_generators = all_generators * TranslationElement::generator(n, r, j);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        if (eps[a].is_zero()) report.failures.push_back("idempotent " + label_str(labels[a]) + " is zero");
        for (int j = 1; j <= n; ++j) {
            const Cyclotomic eigen = q_pow(r, labels[a].indices[static_cast<std::size_t>(j - 1)]);
            if (!(TranslationElement::generator(n, r, j) * eps[a] == eigen * eps[a])) {
                report.failures.push_back("e_" + std::to_string(j) + " is not diagonal on " + label_str(labels[a]));
            }
        }
        if (!(all_generators * eps[a] == q_pow(r, 1) * eps[a])) {
            report.failures.push_back("e_1...e_n does not act by q on " + label_str(labels[a]));
        }
    }

    auto check_pair = [&](std::size_t a, std::size_t b) {
        ++report.checked_pairs;
        const TranslationElement prod = eps[a] * eps[b];
        const bool ok = a == b ? prod == eps[a] : prod.is_zero();
        if (!ok) report.failures.push_back("product " + label_str(labels[a]) + " * " + label_str(labels[b]) + " is wrong");
    };
    Integer rn;
    mpz_ui_pow_ui(rn.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
    if (rn <= exhaustive_limit) {
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = 0; b < labels.size(); ++b) check_pair(a, b);
    } else {
        report.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        for (std::size_t a = 0; a < labels.size() && a < 64; ++a) check_pair(a, a);
        for (int t = 0; t < 512; ++t) check_pair(pick(rng), pick(rng));
    }
    return report;
}

Integer fixed_label_count(const Permutation& sigma, int r) {
    Integer count = 0;
    for (const auto& label : idempotent_labels(sigma.size(), r)) {
        bool fixed = true;
        for (int j = 1; j <= sigma.size() && fixed; ++j) {
            fixed = label.indices[static_cast<std::size_t>(sigma(j) - 1)] == label.indices[static_cast<std::size_t>(j - 1)];
        }
        if (fixed) ++count;
    }
    return count;
}

}  // namespace plates
