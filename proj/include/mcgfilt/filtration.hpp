#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcgfilt/deriv.hpp"
#include "mcgfilt/words.hpp"
#include "mcgfilt/zlinalg.hpp"

namespace mcg {

struct MembershipReport {
    std::string endo;        // name or file, filled by the caller
    std::string filtration;  // "J" or "L"
    int k = 0;
    bool member = false;
    std::string witness_generator;  // nonempty iff not a member
    std::string witness_word;       // the word failing the degree test
};

// True iff z^-1 h(z) lies in F_{k+1} for every generator z. Requires
// h(delta) = delta.
MembershipReport johnson_membership(const Endo& h, int k);

// Dualized leading-term homomorphism of h at level k; lies in ker beta.
DerivationElement johnson_hom(const Endo& h, int k);

// Condition (2): h(x_i) abelianizes to x_i; condition (1): the y-word
// i_* h(x_i) lies in F'_{k+1}. No boundary requirement.
MembershipReport lagrangian_membership(const Endo& h, int k);

// -sum_i y_i (x) class of i_* h(x_i); the sign makes this the Lagrangian
// projection of johnson_hom on Johnson-level maps. Lies in ker beta over H'.
DerivationElement lagrangian_hom(const Endo& h, int k);

// Action on H_1, columns = images of basis vectors in the order x1,y1,...;
// verified symplectic whenever h fixes the boundary word.
MatZ sp_matrix(const Endo& h);

struct CatalogEntry {
    std::string name;
    Endo endo;
    std::string note;
    std::optional<MatZ> expected_sp;  // checked against sp_matrix at build
    bool rel_boundary = true;         // fixes_boundary verified when set
};

// Explicit automorphisms: identity, the handlebody flip r, meridian twists
// t_xk^±, longitude twists t_yk^±, meridian-sum twists sum_xk_xl^±,
// separating twists t_ck, and the boundary conjugation c_delta. Every
// stated inverse and expected matrix is verified on construction.
std::vector<CatalogEntry> catalog(int g);

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& entries,
                                  const std::string& name);

struct DiscoverResult {
    std::string word;  // space-separated entry names, rightmost applied first
    MembershipReport report;
    DerivationElement value;  // the Lagrangian homomorphism at level k
};

// Enumerates reduced compositions of the generators up to max_length (at
// most 8) in deterministic order and reports the Lagrangian members at
// level k with their homomorphism values, zero or not.
std::vector<DiscoverResult> discover(const std::vector<CatalogEntry>& gens,
                                     int max_length, int k);

}  // namespace mcg
