#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcgfilt/bigint.hpp"

namespace mcg {

// A word over the alphabet {0, ..., n-1}, one byte per symbol. For the
// symplectic alphabet the symbol ids are the ones fixed in words.hpp.
using SymWord = std::string;

SymWord sym_word(std::initializer_list<int> syms);

// Homogeneous element of the degree-k part of the tensor algebra on n
// symbols. Zero coefficients are never stored.
struct TensorElement {
    int n = 0;
    int k = 0;
    std::map<SymWord, Int> coeffs;

    TensorElement() = default;
    TensorElement(int n, int k) : n(n), k(k) {}
    bool is_zero() const { return coeffs.empty(); }
    void add(const SymWord& w, const Int& c);
    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

// uv - vu, degree adds.
TensorElement tensor_commutator(const TensorElement& u, const TensorElement& v);

// Element of the degree-k part of the free Lie algebra, written in the
// Lyndon basis: keys are Lyndon words, each standing for its standard
// (Chen-Fox-Lyndon) bracketing.
struct LieElement {
    int n = 0;
    int k = 0;
    std::map<SymWord, Int> coeffs;

    LieElement() = default;
    LieElement(int n, int k) : n(n), k(k) {}
    bool is_zero() const { return coeffs.empty(); }
    void add(const SymWord& w, const Int& c);
    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Int& c);
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

// Number of Lyndon words of length k over n symbols (necklace formula
// (1/k) * sum over d|k of mu(d) n^(k/d)).
long long witt_dimension(int n, int k);

// All Lyndon words of length k over {0..n-1}, lexicographically sorted.
const std::vector<SymWord>& lyndon_words(int n, int k);

bool is_lyndon(const SymWord& w);

// w = uv with v the lexicographically smallest proper suffix (equivalently
// the longest proper Lyndon suffix); requires |w| >= 2 and w Lyndon.
std::pair<SymWord, SymWord> std_factorization(const SymWord& w);

// Expansion of the standard bracketing of one Lyndon word; memoized.
const TensorElement& lyndon_tensor(int n, const SymWord& w);

LieElement lie_generator(int n, int sym);
TensorElement to_tensor(const LieElement& a);

// Unique Lie preimage of a tensor element, by leading-term elimination (the
// standard bracketing of a Lyndon word is that word plus lexicographically
// greater terms). Throws std::invalid_argument("non-Lie element") when the
// input is not in the image of to_tensor.
LieElement from_tensor(const TensorElement& t);

LieElement bracket(const LieElement& a, const LieElement& b);

// The Lie algebra map fixing kept generators and sending dropped ones to 0;
// in the Lyndon basis this deletes every basis word containing a dropped
// symbol. keep has size n.
LieElement project_alphabet(const LieElement& a, const std::vector<bool>& keep);

}  // namespace mcg
