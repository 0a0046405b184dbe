#include "mcgfilt/magnus.hpp"

#include <stdexcept>

namespace mcg {

void MagnusSeries::add(const SymWord& w, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

MagnusSeries magnus_one(int n, int trunc) {
    MagnusSeries s;
    s.n = n;
    s.trunc = trunc;
    s.terms.emplace(SymWord(), Int(1));
    return s;
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.n != b.n) throw std::invalid_argument("symbol count mismatch");
    MagnusSeries out;
    out.n = a.n;
    out.trunc = std::min(a.trunc, b.trunc);
    for (const auto& [wa, ca] : a.terms) {
        if (static_cast<int>(wa.size()) > out.trunc) continue;
        for (const auto& [wb, cb] : b.terms) {
            if (static_cast<int>(wa.size() + wb.size()) > out.trunc) continue;
            out.add(wa + wb, ca * cb);
        }
    }
    return out;
}

MagnusSeries magnus(const Word& w, int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be at least 1");
    int n = 2 * w.genus();
    MagnusSeries out = magnus_one(n, trunc);
    for (const auto& [sym, exp] : w.runs()) {
        // series of a generator power via the binomial coefficients C(exp, j),
        // which reproduce the geometric series for negative exponents
        MagnusSeries p;
        p.n = n;
        p.trunc = trunc;
        Int c = 1;
        SymWord pw;
        p.terms.emplace(pw, c);
        for (int j = 1; j <= trunc; ++j) {
            c *= exp - j + 1;
            c /= j;
            if (c == 0) break;
            pw.push_back(static_cast<char>(sym));
            p.terms.emplace(pw, c);
        }
        out = magnus_mul(out, p);
    }
    return out;
}

int lcs_degree(const Word& w, int max_degree) {
    if (w.empty()) throw std::invalid_argument("identity word");
    if (max_degree < 1) throw std::invalid_argument("truncation must be at least 1");
    MagnusSeries s = magnus(w, max_degree);
    int best = max_degree + 1;
    for (const auto& [word, c] : s.terms) {
        (void)c;
        if (word.empty()) continue;
        best = std::min(best, static_cast<int>(word.size()));
    }
    return best;
}

LieElement lcs_class(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("degree must be at least 1");
    int n = 2 * w.genus();
    if (w.empty()) return LieElement(n, k);
    MagnusSeries s = magnus(w, k);
    TensorElement t(n, k);
    for (const auto& [word, c] : s.terms) {
        if (word.empty()) continue;
        if (static_cast<int>(word.size()) < k)
            throw std::invalid_argument("not in F_k");
        t.coeffs.emplace(word, c);
    }
    try {
        return from_tensor(t);
    } catch (const std::invalid_argument&) {
        throw std::logic_error("non-Lie residue");
    }
}

}  // namespace mcg
