#include "mcgfilt/filtration.hpp"

#include <stdexcept>
#include <utility>

#include "mcgfilt/lie.hpp"
#include "mcgfilt/magnus.hpp"

namespace mcg {

namespace {

// Smallest degree with a nonvanishing Magnus term, capped: returns k+1 when
// every degree through k vanishes (so >= k+1 means membership in F_{k+1}).
int capped_degree(const Word& w, int k) {
    if (w.empty()) return k + 1;
    return lcs_degree(w, k);
}

}  // namespace

MembershipReport johnson_membership(const Endo& h, int k) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (!fixes_boundary(h)) throw std::invalid_argument("boundary not fixed");
    int g = h.genus();
    MembershipReport rep;
    rep.filtration = "J";
    rep.k = k;
    rep.member = true;
    for (int s = 0; s < 2 * g; ++s) {
        Word w(g);
        w.append(s, -1);
        w *= h.image(s);
        if (capped_degree(w, k) <= k) {
            rep.member = false;
            rep.witness_generator = sym_name(s);
            rep.witness_word = word_to_text(w);
            return rep;
        }
    }
    return rep;
}

DerivationElement johnson_hom(const Endo& h, int k) {
    MembershipReport rep = johnson_membership(h, k);
    if (!rep.member)
        throw std::invalid_argument("not in the Johnson filtration at level " +
                                    std::to_string(k) + ", witness " +
                                    rep.witness_generator);
    int g = h.genus(), n = 2 * g;
    std::vector<LieElement> phi;
    phi.reserve(n);
    for (int s = 0; s < n; ++s) {
        Word w(g);
        w.append(s, -1);
        w *= h.image(s);
        phi.push_back(w.empty() ? LieElement(n, k + 1) : lcs_class(w, k + 1));
    }
    DerivationElement out = dualize_hom(n, k, phi);
    if (!bracket_map(out).is_zero())
        throw std::logic_error("value escapes the kernel of the bracket map");
    return out;
}

MembershipReport lagrangian_membership(const Endo& h, int k) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    int g = h.genus();
    MembershipReport rep;
    rep.filtration = "L";
    rep.k = k;
    rep.member = true;
    for (int i = 1; i <= g; ++i) {
        const Word& w = h.image(sym_x(i));
        std::vector<long long> ab(2 * g, 0);
        for (const auto& [s, e] : w.runs()) ab[s] += e;
        bool primitive = true;
        for (int s = 0; s < 2 * g; ++s)
            if (ab[s] != (s == sym_x(i) ? 1 : 0)) primitive = false;
        if (!primitive) {
            rep.member = false;
            rep.witness_generator = sym_name(sym_x(i));
            rep.witness_word = word_to_text(w);
            return rep;
        }
        Word yw = w.delete_x();
        if (capped_degree(yw, k) <= k) {
            rep.member = false;
            rep.witness_generator = sym_name(sym_x(i));
            rep.witness_word = word_to_text(yw);
            return rep;
        }
    }
    return rep;
}

DerivationElement lagrangian_hom(const Endo& h, int k) {
    MembershipReport rep = lagrangian_membership(h, k);
    if (!rep.member)
        throw std::invalid_argument("not in the Lagrangian filtration at level " +
                                    std::to_string(k) + ", witness " +
                                    rep.witness_generator);
    int g = h.genus(), n = 2 * g;
    DerivationElement out(n, k);
    for (int i = 1; i <= g; ++i) {
        Word yw = h.image(sym_x(i)).delete_x();
        if (yw.empty()) continue;
        LieElement lam = lcs_class(yw, k + 1);
        for (const auto& [w, c] : lam.coeffs) out.add(sym_y(i), w, -c);
    }
    if (!bracket_map(out).is_zero())
        throw std::logic_error("value escapes the kernel of the bracket map");
    return out;
}

MatZ sp_matrix(const Endo& h) {
    int n = 2 * h.genus();
    MatZ m(n, n);
    for (int c = 0; c < n; ++c)
        for (const auto& [s, e] : h.image(c).runs()) m.at(s, c) += e;
    if (fixes_boundary(h)) {
        MatZ j(n, n);
        for (int i = 0; i < n; i += 2) {
            j.at(i, i + 1) = 1;
            j.at(i + 1, i) = -1;
        }
        if (mat_mul(mat_mul(m.transpose(), j), m) != j)
            throw std::logic_error("abelianized action is not symplectic");
    }
    return m;
}

namespace {

std::vector<Word> identity_images(int g) {
    std::vector<Word> out;
    for (int s = 0; s < 2 * g; ++s) {
        Word w(g);
        w.append(s, 1);
        out.push_back(std::move(w));
    }
    return out;
}

Endo meridian_twist(int g, int kk, int eps) {
    std::vector<Word> images = identity_images(g), inv = identity_images(g);
    images[sym_y(kk)].append(sym_x(kk), eps);
    inv[sym_y(kk)].append(sym_x(kk), -eps);
    return Endo(g, std::move(images), std::move(inv));
}

Endo longitude_twist(int g, int kk, int eps) {
    std::vector<Word> images = identity_images(g), inv = identity_images(g);
    images[sym_x(kk)].append(sym_y(kk), eps);
    inv[sym_x(kk)].append(sym_y(kk), -eps);
    return Endo(g, std::move(images), std::move(inv));
}

// z -> c z c^-1 on the listed symbols, identity elsewhere.
Endo conjugation_endo(int g, const Word& c, const std::vector<int>& syms) {
    std::vector<Word> images = identity_images(g), inv = identity_images(g);
    Word ci = c.inverse();
    for (int s : syms) {
        images[s] = c * images[s] * ci;
        inv[s] = ci * inv[s] * c;
    }
    return Endo(g, std::move(images), std::move(inv));
}

Endo flip_endo(int g) {
    std::vector<Word> images, inv;
    for (int i = 1; i <= g; ++i) {
        Word xi(g), yi(g);
        xi.append(sym_x(i), 1);
        yi.append(sym_y(i), 1);
        images.push_back(xi * yi * xi.inverse());
        images.push_back(xi.inverse());
        inv.push_back(yi.inverse());
        inv.push_back(yi * xi * yi.inverse());
    }
    return Endo(g, std::move(images), std::move(inv));
}

// Handle slide supporting the meridian-sum twist, on handles 1 and 2.
Endo slide_endo(int g) {
    std::vector<Word> images = identity_images(g), inv = identity_images(g);
    images[sym_y(1)] = word_from_text(g, "y1 x1^-1 y1^-1 x2 y2 x2^-1 y1 x1");
    images[sym_x(2)] = word_from_text(g, "y1 x1^-1 y1^-1 x2");
    inv[sym_y(1)] = word_from_text(g, "x2 y2^-1 x2^-1 y1");
    inv[sym_x(2)] = word_from_text(g, "x2 y2^-1 x2^-1 y1 x1 y1^-1 x2 y2");
    return Endo(g, std::move(images), std::move(inv));
}

// Swaps handles i and i+1; the handle moving down picks up a commutator
// conjugation so the boundary word is fixed exactly.
Endo handle_swap(int g, int i) {
    std::vector<Word> images = identity_images(g), inv = identity_images(g);
    Word xi(g), yi(g), xj(g), yj(g);
    xi.append(sym_x(i), 1);
    yi.append(sym_y(i), 1);
    xj.append(sym_x(i + 1), 1);
    yj.append(sym_y(i + 1), 1);
    Word b = commutator(xj, yj), c = commutator(xi, yi);
    images[sym_x(i)] = xj;
    images[sym_y(i)] = yj;
    images[sym_x(i + 1)] = b.inverse() * xi * b;
    images[sym_y(i + 1)] = b.inverse() * yi * b;
    inv[sym_x(i + 1)] = xi;
    inv[sym_y(i + 1)] = yi;
    inv[sym_x(i)] = c * xj * c.inverse();
    inv[sym_y(i)] = c * yj * c.inverse();
    return Endo(g, std::move(images), std::move(inv));
}

Endo sum_twist(int g, int kk, int ll, int eps) {
    Endo s = slide_endo(g);
    Endo t = meridian_twist(g, 2, -1);
    Endo base = eps > 0 ? compose(s.inverse(), compose(t, s))
                        : compose(s, compose(t, s.inverse()));
    if (kk == 1 && ll == 2) return base;
    Endo pi = Endo::identity(g);
    for (int i = 2; i < ll; ++i) pi = compose(handle_swap(g, i), pi);
    for (int i = 1; i < kk; ++i) pi = compose(handle_swap(g, i), pi);
    return compose(pi, compose(base, pi.inverse()));
}

MatZ sp_shear(int g, const std::vector<std::pair<std::pair<int, int>, int>>& b) {
    MatZ m = MatZ::identity(2 * g);
    for (const auto& [kl, v] : b) m.at(sym_x(kl.first), sym_y(kl.second)) = v;
    return m;
}

void push_entry(std::vector<CatalogEntry>& out, std::string name, Endo endo,
                std::string note, std::optional<MatZ> expected,
                bool rel_boundary) {
    if (rel_boundary && !fixes_boundary(endo))
        throw std::logic_error("catalog entry does not fix the boundary: " + name);
    MatZ m = sp_matrix(endo);
    if (expected && m != *expected)
        throw std::logic_error("catalog entry has the wrong homology action: " + name);
    out.push_back({std::move(name), std::move(endo), std::move(note),
                   std::move(expected), rel_boundary});
}

}  // namespace

std::vector<CatalogEntry> catalog(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    std::vector<CatalogEntry> out;
    push_entry(out, "identity", Endo::identity(g), "identity map",
               MatZ::identity(2 * g), true);
    push_entry(out, "r", flip_endo(g), "handlebody flip", std::nullopt, false);
    for (int k = 1; k <= g; ++k)
        for (int eps : {1, -1}) {
            std::string sign = eps > 0 ? "+" : "-";
            push_entry(out, "t_x" + std::to_string(k) + sign,
                       meridian_twist(g, k, eps), "meridian twist",
                       sp_shear(g, {{{k, k}, eps}}), true);
        }
    for (int k = 1; k <= g; ++k)
        for (int eps : {1, -1}) {
            std::string sign = eps > 0 ? "+" : "-";
            MatZ m = MatZ::identity(2 * g);
            m.at(sym_y(k), sym_x(k)) = eps;
            push_entry(out, "t_y" + std::to_string(k) + sign,
                       longitude_twist(g, k, eps), "longitude twist", m, true);
        }
    for (int k = 1; k <= g; ++k)
        for (int l = k + 1; l <= g; ++l)
            for (int eps : {1, -1}) {
                std::string sign = eps > 0 ? "+" : "-";
                push_entry(out,
                           "sum_x" + std::to_string(k) + "_x" + std::to_string(l) + sign,
                           sum_twist(g, k, l, eps), "meridian-sum twist",
                           sp_shear(g, {{{k, k}, -1},
                                        {{l, l}, -1},
                                        {{k, l}, -eps},
                                        {{l, k}, -eps}}),
                           true);
            }
    for (int k = 1; k <= g; ++k) {
        Word xk(g), yk(g);
        xk.append(sym_x(k), 1);
        yk.append(sym_y(k), 1);
        push_entry(out, "t_c" + std::to_string(k),
                   conjugation_endo(g, commutator(xk, yk), {sym_x(k), sym_y(k)}),
                   "separating twist about [xk,yk]", MatZ::identity(2 * g), true);
    }
    std::vector<int> all;
    for (int s = 0; s < 2 * g; ++s) all.push_back(s);
    push_entry(out, "c_delta", conjugation_endo(g, boundary_word(g), all),
               "conjugation by the boundary word", MatZ::identity(2 * g), true);
    return out;
}

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& entries,
                                  const std::string& name) {
    for (const CatalogEntry& e : entries)
        if (e.name == name) return e;
    throw std::invalid_argument("no catalog entry named " + name);
}

namespace {

void discover_walk(const std::vector<CatalogEntry>& gens,
                   const std::vector<std::vector<bool>>& cancels, int max_length,
                   int k, std::vector<int>& seq, const Endo& cur,
                   std::vector<DiscoverResult>& out) {
    if (!seq.empty()) {
        std::string name;
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i) name += ' ';
            name += gens[seq[i]].name;
        }
        MembershipReport rep = lagrangian_membership(cur, k);
        rep.endo = name;
        if (rep.member) {
            DerivationElement value = lagrangian_hom(cur, k);
            out.push_back({std::move(name), std::move(rep), std::move(value)});
        }
    }
    if (static_cast<int>(seq.size()) == max_length) return;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        if (!seq.empty() && cancels[seq.back()][j]) continue;
        seq.push_back(j);
        discover_walk(gens, cancels, max_length, k, seq, compose(cur, gens[j].endo),
                      out);
        seq.pop_back();
    }
}

}  // namespace

std::vector<DiscoverResult> discover(const std::vector<CatalogEntry>& gens,
                                     int max_length, int k) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    if (max_length < 1 || max_length > 8)
        throw std::invalid_argument("max_length must be between 1 and 8");
    int g = gens.front().endo.genus();
    Endo id = Endo::identity(g);
    std::vector<std::vector<bool>> cancels(gens.size(),
                                           std::vector<bool>(gens.size(), false));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            cancels[i][j] = compose(gens[i].endo, gens[j].endo) == id;
    std::vector<DiscoverResult> out;
    std::vector<int> seq;
    discover_walk(gens, cancels, max_length, k, seq, id, out);
    return out;
}

}  // namespace mcg
