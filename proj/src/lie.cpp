#include "mcgfilt/lie.hpp"

#include <mutex>
#include <stdexcept>

namespace mcg {

SymWord sym_word(std::initializer_list<int> syms) {
    SymWord w;
    for (int s : syms) w.push_back(static_cast<char>(s));
    return w;
}

void TensorElement::add(const SymWord& w, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    for (const auto& [w, c] : other.coeffs) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    for (const auto& [w, c] : other.coeffs) add(w, -c);
    return *this;
}

TensorElement tensor_commutator(const TensorElement& u, const TensorElement& v) {
    TensorElement out(u.n, u.k + v.k);
    for (const auto& [wu, cu] : u.coeffs)
        for (const auto& [wv, cv] : v.coeffs) {
            out.add(wu + wv, cu * cv);
            out.add(wv + wu, -(cu * cv));
        }
    return out;
}

void LieElement::add(const SymWord& w, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other) {
    for (const auto& [w, c] : other.coeffs) add(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
    for (const auto& [w, c] : other.coeffs) add(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Int& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [w, v] : coeffs) v *= c;
    return *this;
}

long long witt_dimension(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("witt_dimension needs n, k >= 1");
    long long total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        // Moebius function of d from its squarefree factorization.
        int m = d, mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        }
        if (mu != 0 && m > 1) mu = -mu;
        if (mu == 0) continue;
        long long pw = 1;
        for (int i = 0; i < k / d; ++i) pw *= n;
        total += mu * pw;
    }
    return total / k;
}

const std::vector<SymWord>& lyndon_words(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lyndon_words needs n, k >= 1");
    static std::map<std::pair<int, int>, std::vector<SymWord>> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;

    // Duval's generation: pad w periodically up to length k, then strip
    // maximal symbols and bump; emits Lyndon words in lexicographic order.
    std::vector<SymWord> out;
    std::string w(1, '\0');
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        size_t base = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() % base]);
        while (!w.empty() && w.back() == static_cast<char>(n - 1)) w.pop_back();
        if (!w.empty()) w.back() = static_cast<char>(w.back() + 1);
    }
    auto [pos, inserted] = cache.emplace(std::make_pair(n, k), std::move(out));
    (void)inserted;
    return pos->second;
}

bool is_lyndon(const SymWord& w) {
    if (w.empty()) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w.substr(i) <= w) return false;
    return true;
}

std::pair<SymWord, SymWord> std_factorization(const SymWord& w) {
    if (w.size() < 2) throw std::invalid_argument("factorization needs length >= 2");
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
        if (w.compare(i, SymWord::npos, w, best, SymWord::npos) < 0) best = i;
    return {w.substr(0, best), w.substr(best)};
}

namespace {

using TensorCache = std::map<std::pair<int, SymWord>, TensorElement>;

const TensorElement& lyndon_tensor_locked(TensorCache& cache, int n,
                                          const SymWord& w) {
    auto key = std::make_pair(n, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    TensorElement t(n, static_cast<int>(w.size()));
    if (w.size() == 1) {
        t.add(w, 1);
    } else {
        auto [u, v] = std_factorization(w);
        // std::map references stay valid across later insertions
        const TensorElement& tu = lyndon_tensor_locked(cache, n, u);
        const TensorElement& tv = lyndon_tensor_locked(cache, n, v);
        t = tensor_commutator(tu, tv);
    }
    return cache.emplace(std::move(key), std::move(t)).first->second;
}

}  // namespace

const TensorElement& lyndon_tensor(int n, const SymWord& w) {
    static TensorCache cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    return lyndon_tensor_locked(cache, n, w);
}

LieElement lie_generator(int n, int sym) {
    if (sym < 0 || sym >= n) throw std::invalid_argument("generator out of range");
    LieElement a(n, 1);
    a.add(SymWord(1, static_cast<char>(sym)), 1);
    return a;
}

TensorElement to_tensor(const LieElement& a) {
    TensorElement t(a.n, a.k);
    for (const auto& [w, c] : a.coeffs) {
        const TensorElement& tw = lyndon_tensor(a.n, w);
        for (const auto& [m, cm] : tw.coeffs) t.add(m, c * cm);
    }
    return t;
}

LieElement from_tensor(const TensorElement& t) {
    LieElement a(t.n, t.k);
    TensorElement rest = t;
    while (!rest.coeffs.empty()) {
        // Leading (lexicographically smallest) monomial must be Lyndon and
        // carries the basis coefficient directly. Copies: the subtraction
        // below erases the node.
        SymWord w = rest.coeffs.begin()->first;
        Int coeff = rest.coeffs.begin()->second;
        if (!is_lyndon(w)) throw std::invalid_argument("non-Lie element");
        a.add(w, coeff);
        const TensorElement& tw = lyndon_tensor(t.n, w);
        for (const auto& [m, cm] : tw.coeffs) rest.add(m, -(coeff * cm));
    }
    return a;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    if (a.n != b.n) throw std::invalid_argument("alphabet mismatch");
    return from_tensor(tensor_commutator(to_tensor(a), to_tensor(b)));
}

LieElement project_alphabet(const LieElement& a, const std::vector<bool>& keep) {
    if (static_cast<int>(keep.size()) != a.n)
        throw std::invalid_argument("keep mask size mismatch");
    LieElement out(a.n, a.k);
    for (const auto& [w, c] : a.coeffs) {
        bool kept = true;
        for (char s : w)
            if (!keep[static_cast<unsigned char>(s)]) {
                kept = false;
                break;
            }
        if (kept) out.add(w, c);
    }
    return out;
}

}  // namespace mcg
