#include "mcgfilt/deriv.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "mcgfilt/words.hpp"

namespace mcg {

void DerivationElement::add(int sym, const SymWord& w, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(sym, w);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

DerivationElement& DerivationElement::operator+=(const DerivationElement& other) {
    if (n != other.n || k != other.k)
        throw std::invalid_argument("degree mismatch");
    for (const auto& [key, c] : other.coeffs) add(key.first, key.second, c);
    return *this;
}

DerivationElement& DerivationElement::operator-=(const DerivationElement& other) {
    if (n != other.n || k != other.k)
        throw std::invalid_argument("degree mismatch");
    for (const auto& [key, c] : other.coeffs) add(key.first, key.second, -c);
    return *this;
}

DerivationElement& DerivationElement::operator*=(const Int& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs) v *= c;
    return *this;
}

void Wedge3Element::add(std::array<int, 3> t, Int c) {
    if (c == 0) return;
    // sort the triple, tracking the permutation sign
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i + 1 < 3 - pass; ++i)
            if (t[i] > t[i + 1]) {
                std::swap(t[i], t[i + 1]);
                c = -c;
            }
    if (t[0] == t[1] || t[1] == t[2]) return;
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
        coeffs.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

void SymPowerElement::add(std::vector<int> key, const Int& c) {
    if (c == 0) return;
    std::sort(key.begin(), key.end());
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

int sym_pairing(int a, int b) {
    if (b != (a ^ 1)) return 0;
    return sym_is_x(a) ? 1 : -1;
}

DerivationElement dualize_hom(int n, int k, const std::vector<LieElement>& phi) {
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("need one value per basis symbol");
    for (const LieElement& v : phi)
        if (!v.is_zero() && (v.n != n || v.k != k + 1))
            throw std::invalid_argument("degree mismatch");
    DerivationElement out(n, k);
    for (int h = 0; h < n / 2; ++h) {
        int x = 2 * h, y = 2 * h + 1;
        for (const auto& [w, c] : phi[y].coeffs) out.add(x, w, c);
        for (const auto& [w, c] : phi[x].coeffs) out.add(y, w, -c);
    }
    return out;
}

LieElement hom_of(const DerivationElement& d, int z) {
    LieElement out(d.n, d.k + 1);
    for (const auto& [key, c] : d.coeffs) {
        int p = sym_pairing(key.first, z);
        if (p == 1) out.add(key.second, c);
        else if (p == -1) out.add(key.second, -c);
    }
    return out;
}

namespace {

LieElement lie_word(int n, const SymWord& w) {
    LieElement e(n, static_cast<int>(w.size()));
    e.add(w, 1);
    return e;
}

}  // namespace

LieElement bracket_map(const DerivationElement& d) {
    LieElement out(d.n, d.k + 2);
    for (const auto& [key, c] : d.coeffs) {
        LieElement t = bracket(lie_generator(d.n, key.first), lie_word(d.n, key.second));
        t *= c;
        out += t;
    }
    return out;
}

namespace {

const LieElement& derive_lyndon(const DerivationElement& d, const SymWord& w,
                                std::map<SymWord, LieElement>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    LieElement out;
    if (w.size() == 1) {
        out = hom_of(d, static_cast<unsigned char>(w[0]));
    } else {
        auto [u, v] = std_factorization(w);
        LieElement du = derive_lyndon(d, u, memo);
        LieElement dv = derive_lyndon(d, v, memo);
        out = bracket(du, lie_word(d.n, v));
        out += bracket(lie_word(d.n, u), dv);
    }
    return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

LieElement apply_derivation(const DerivationElement& d, const LieElement& a) {
    if (d.n != a.n) throw std::invalid_argument("symbol count mismatch");
    std::map<SymWord, LieElement> memo;
    LieElement out(a.n, a.k + d.k);
    for (const auto& [w, c] : a.coeffs) {
        LieElement t = derive_lyndon(d, w, memo);
        t *= c;
        out += t;
    }
    return out;
}

namespace {

std::string content_of(int n, int sym, const SymWord& w) {
    std::string c(n, '\0');
    ++c[sym];
    for (char ch : w) ++c[static_cast<unsigned char>(ch)];
    return c;
}

}  // namespace

const std::vector<DerivationElement>& dk_basis(int g, int k) {
    static std::map<std::pair<int, int>, std::vector<DerivationElement>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(g, k);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;
    if (g < 1 || k < 1) throw std::invalid_argument("genus and degree must be positive");

    int n = 2 * g;
    const auto& dom_words = lyndon_words(n, k + 1);
    const auto& cod_words = lyndon_words(n, k + 2);
    int w_count = static_cast<int>(dom_words.size());

    // beta preserves the symbol content, so the kernel splits into blocks
    std::map<std::string, std::vector<int>> dom_blocks;
    for (int a = 0; a < n; ++a)
        for (int wi = 0; wi < w_count; ++wi)
            dom_blocks[content_of(n, a, dom_words[wi])].push_back(a * w_count + wi);
    std::map<std::string, std::map<SymWord, int>> cod_blocks;
    for (const SymWord& w : cod_words) {
        std::string c(n, '\0');
        for (char ch : w) ++c[static_cast<unsigned char>(ch)];
        auto& m = cod_blocks[c];
        int idx = static_cast<int>(m.size());
        m.emplace(w, idx);
    }

    std::vector<std::vector<Int>> rows;
    int dim = n * w_count;
    for (const auto& [content, dom_idx] : dom_blocks) {
        const auto& cmap = cod_blocks[content];
        int m = static_cast<int>(dom_idx.size());
        MatZ bt(static_cast<int>(cmap.size()), m);
        for (int col = 0; col < m; ++col) {
            int a = dom_idx[col] / w_count;
            const SymWord& w = dom_words[dom_idx[col] % w_count];
            LieElement img = bracket(lie_generator(n, a), lie_word(n, w));
            for (const auto& [cw, cc] : img.coeffs) bt.at(cmap.at(cw), col) = cc;
        }
        MatZ ker = hnf(kernel_basis(bt)).h;
        for (int r = 0; r < ker.rows; ++r) {
            bool zero = true;
            for (int c = 0; c < ker.cols; ++c)
                if (ker.at(r, c) != 0) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            std::vector<Int> row(dim, Int(0));
            for (int c = 0; c < ker.cols; ++c) row[dom_idx[c]] = ker.at(r, c);
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0 && b[i] == 0) return true;
            if (b[i] != 0) return false;
        }
        return false;
    });

    std::vector<DerivationElement> basis;
    basis.reserve(rows.size());
    for (const auto& row : rows) {
        DerivationElement d(n, k);
        for (int i = 0; i < dim; ++i)
            if (row[i] != 0) d.add(i / w_count, dom_words[i % w_count], row[i]);
        basis.push_back(std::move(d));
    }
    return cache.emplace(key, std::move(basis)).first->second;
}

std::vector<Int> derivation_coords(const DerivationElement& d) {
    const auto& words = lyndon_words(d.n, d.k + 1);
    std::vector<Int> out(d.n * words.size(), Int(0));
    for (const auto& [key, c] : d.coeffs) {
        auto it = std::lower_bound(words.begin(), words.end(), key.second);
        if (it == words.end() || *it != key.second)
            throw std::invalid_argument("not a Lyndon basis word");
        out[key.first * words.size() + (it - words.begin())] = c;
    }
    return out;
}

DerivationElement derivation_bracket(const DerivationElement& a,
                                     const DerivationElement& b) {
    if (a.n != b.n) throw std::invalid_argument("symbol count mismatch");
    int n = a.n;
    std::vector<LieElement> phi(n);
    for (int z = 0; z < n; ++z) {
        phi[z] = apply_derivation(a, hom_of(b, z));
        phi[z] -= apply_derivation(b, hom_of(a, z));
    }
    return dualize_hom(n, a.k + b.k, phi);
}

DerivationElement wedge3_to_d1(const Wedge3Element& w) {
    DerivationElement out(w.n, 1);
    for (const auto& [t, c] : w.coeffs) {
        int a = t[0], b = t[1], z = t[2];
        LieElement bz = bracket(lie_generator(w.n, b), lie_generator(w.n, z));
        LieElement za = bracket(lie_generator(w.n, z), lie_generator(w.n, a));
        LieElement ab = bracket(lie_generator(w.n, a), lie_generator(w.n, b));
        for (const auto& [lw, lc] : bz.coeffs) out.add(a, lw, c * lc);
        for (const auto& [lw, lc] : za.coeffs) out.add(b, lw, c * lc);
        for (const auto& [lw, lc] : ab.coeffs) out.add(z, lw, c * lc);
    }
    return out;
}

Wedge3Element d1_to_wedge3(const DerivationElement& d) {
    if (d.k != 1) throw std::invalid_argument("degree must be 1");
    if (!bracket_map(d).is_zero()) throw std::invalid_argument("not in D_1");
    int n = d.n;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) triples.push_back({i, j, l});
    const auto& words = lyndon_words(n, 2);
    int dim = n * static_cast<int>(words.size());
    MatZ m(static_cast<int>(triples.size()), dim);
    for (size_t r = 0; r < triples.size(); ++r) {
        Wedge3Element e(n);
        e.add(triples[r], 1);
        std::vector<Int> coords = derivation_coords(wedge3_to_d1(e));
        for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = coords[c];
    }
    std::vector<Int> target = derivation_coords(d);
    std::vector<Int> sol;
    if (!in_row_lattice(m, target, &sol))
        throw std::logic_error("wedge coordinate solve failed");
    Wedge3Element out(n);
    for (size_t r = 0; r < triples.size(); ++r) out.add(triples[r], sol[r]);
    return out;
}

SymPowerElement morita_trace(const DerivationElement& d) {
    if (d.k < 1) throw std::invalid_argument("degree must be at least 1");
    SymPowerElement out(d.n, d.k);
    for (const auto& [key, c] : d.coeffs) {
        const TensorElement& tw = lyndon_tensor(d.n, key.second);
        for (const auto& [t, ct] : tw.coeffs) {
            int p = sym_pairing(key.first, static_cast<unsigned char>(t[0]));
            if (p == 0) continue;
            std::vector<int> rest;
            rest.reserve(t.size() - 1);
            for (size_t i = 1; i < t.size(); ++i)
                rest.push_back(static_cast<unsigned char>(t[i]));
            Int v = c * ct;
            if (p < 0) v = -v;
            out.add(std::move(rest), v);
        }
    }
    return out;
}

DerivationElement project_to_lagrangian(const DerivationElement& d) {
    DerivationElement out(d.n, d.k);
    for (const auto& [key, c] : d.coeffs) {
        if (sym_is_x(key.first)) continue;
        bool all_y = true;
        for (char ch : key.second)
            if (sym_is_x(static_cast<unsigned char>(ch))) {
                all_y = false;
                break;
            }
        if (all_y) out.add(key.first, key.second, c);
    }
    return out;
}

}  // namespace mcg
