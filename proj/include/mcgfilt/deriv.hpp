#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "mcgfilt/bigint.hpp"
#include "mcgfilt/lie.hpp"
#include "mcgfilt/zlinalg.hpp"

namespace mcg {

// Element of H (x) L_{k+1}(H): keys pair a left-factor basis symbol with a
// Lyndon word of length k+1. Degree k is the derivation degree.
struct DerivationElement {
    int n = 0;
    int k = 0;
    std::map<std::pair<int, SymWord>, Int> coeffs;

    DerivationElement() = default;
    DerivationElement(int n, int k) : n(n), k(k) {}
    bool is_zero() const { return coeffs.empty(); }
    void add(int sym, const SymWord& w, const Int& c);
    DerivationElement& operator+=(const DerivationElement& other);
    DerivationElement& operator-=(const DerivationElement& other);
    DerivationElement& operator*=(const Int& c);
    friend bool operator==(const DerivationElement&, const DerivationElement&) = default;
};

// Alternating element of Lambda^3 H; keys are strictly increasing triples.
struct Wedge3Element {
    int n = 0;
    std::map<std::array<int, 3>, Int> coeffs;

    Wedge3Element() = default;
    explicit Wedge3Element(int n) : n(n) {}
    bool is_zero() const { return coeffs.empty(); }
    void add(std::array<int, 3> t, Int c);
    friend bool operator==(const Wedge3Element&, const Wedge3Element&) = default;
};

// Element of the k-th symmetric power of H; keys are sorted multisets.
struct SymPowerElement {
    int n = 0;
    int k = 0;
    std::map<std::vector<int>, Int> coeffs;

    SymPowerElement() = default;
    SymPowerElement(int n, int k) : n(n), k(k) {}
    bool is_zero() const { return coeffs.empty(); }
    void add(std::vector<int> key, const Int& c);
    friend bool operator==(const SymPowerElement&, const SymPowerElement&) = default;
};

// <x_i, y_i> = +1, <y_i, x_i> = -1, all other basis pairs 0.
int sym_pairing(int a, int b);

// phi given on basis symbols (phi[z] of degree k+1, or zero); returns
// sum_i x_i (x) phi(y_i) - y_i (x) phi(x_i).
DerivationElement dualize_hom(int n, int k, const std::vector<LieElement>& phi);

// The homomorphism realized by d, on a basis symbol: (a (x) l)(z) = <a,z> l.
LieElement hom_of(const DerivationElement& d, int z);

// beta: a (x) l -> [a, l].
LieElement bracket_map(const DerivationElement& d);

// Extension of hom_of(d) to a derivation of the free Lie algebra, applied to a.
LieElement apply_derivation(const DerivationElement& d, const LieElement& a);

// Basis of the saturated kernel lattice D_k(H_g) of beta, deterministic
// (content-blockwise kernels, Hermite-reduced, sorted by pivot); cached.
const std::vector<DerivationElement>& dk_basis(int g, int k);

// Coordinates of d in the ordering used by dk_basis rows: index of (a, w) is
// a * |lyndon_words(n, k+1)| + (rank of w).
std::vector<Int> derivation_coords(const DerivationElement& d);

DerivationElement derivation_bracket(const DerivationElement& a,
                                     const DerivationElement& b);

// a ^ b ^ c -> a (x) [b,c] + b (x) [c,a] + c (x) [a,b]; inverse defined on D_1.
DerivationElement wedge3_to_d1(const Wedge3Element& w);
Wedge3Element d1_to_wedge3(const DerivationElement& d);

// Contraction of the input slot against the first tensor slot of hom_of(d),
// symmetrizing the remaining k slots.
SymPowerElement morita_trace(const DerivationElement& d);

// Kill x_i in the left factor and project the right factor to the y-alphabet.
DerivationElement project_to_lagrangian(const DerivationElement& d);

}  // namespace mcg
