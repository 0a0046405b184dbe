#pragma once

#include <map>

#include "mcgfilt/bigint.hpp"
#include "mcgfilt/lie.hpp"
#include "mcgfilt/words.hpp"

namespace mcg {

// Truncated series in the free associative ring on n non-commuting symbols.
struct MagnusSeries {
    int n = 0;
    int trunc = 0;
    std::map<SymWord, Int> terms;

    void add(const SymWord& w, const Int& c);
    bool operator==(const MagnusSeries&) const = default;
};

MagnusSeries magnus_one(int n, int trunc);
MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);

// Multiplicative extension of x -> 1+X, x^-1 -> 1-X+X^2-... cut at degree trunc.
MagnusSeries magnus(const Word& w, int trunc);

// Smallest positive degree with a nonzero coefficient; max_degree+1 stands for
// "every degree up to max_degree vanishes". Throws on the identity word.
int lcs_degree(const Word& w, int max_degree);

// Degree-k part of the expansion in the Lyndon basis; requires all lower
// degrees to vanish.
LieElement lcs_class(const Word& w, int k);

}  // namespace mcg
