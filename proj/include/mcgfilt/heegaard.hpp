#pragma once

#include <optional>
#include <vector>

#include "mcgfilt/words.hpp"
#include "mcgfilt/zlinalg.hpp"

namespace mcg {

// pi_1 of the glued manifold M_h: free generators y_1..y_g and one relator
// per meridian, freely reduced over the y-alphabet.
struct GroupPresentation {
    int g = 0;
    std::vector<Word> relators;
};

struct HomologyReport {
    MatZ relation_matrix;            // one row per relator, columns y_1..y_g
    std::optional<Int> determinant;  // present when the matrix is square
    std::vector<Int> divisors;
    bool homology_sphere = false;
};

// Relators are the meridian images of the composed gluing map: the word
// (r o h)(x_j) with every x-letter deleted, for j = 1..g. The identity
// yields relators {y_j} and the three-sphere.
GroupPresentation heegaard_presentation(const Endo& h);

HomologyReport first_homology(const GroupPresentation& p);

bool is_homology_sphere(const Endo& h);

}  // namespace mcg
