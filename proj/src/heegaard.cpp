#include "mcgfilt/heegaard.hpp"

#include <stdexcept>
#include <utility>

namespace mcg {

namespace {

Endo gluing_flip(int g) {
    std::vector<Word> images;
    for (int i = 1; i <= g; ++i) {
        Word xi(g), yi(g);
        xi.append(sym_x(i), 1);
        yi.append(sym_y(i), 1);
        images.push_back(xi * yi * xi.inverse());
        images.push_back(xi.inverse());
    }
    return Endo(g, std::move(images));
}

}  // namespace

GroupPresentation heegaard_presentation(const Endo& h) {
    int g = h.genus();
    Endo glued = compose(gluing_flip(g), h);
    GroupPresentation p;
    p.g = g;
    for (int j = 1; j <= g; ++j)
        p.relators.push_back(glued.image(sym_x(j)).delete_x());
    return p;
}

HomologyReport first_homology(const GroupPresentation& p) {
    if (p.g < 1) throw std::invalid_argument("presentation needs generators");
    int rows = static_cast<int>(p.relators.size());
    MatZ m(rows, p.g);
    for (int r = 0; r < rows; ++r)
        for (const auto& [s, e] : p.relators[r].runs()) {
            if (sym_is_x(s)) throw std::invalid_argument("relator uses a meridian");
            m.at(r, sym_handle(s) - 1) += e;
        }
    HomologyReport rep;
    rep.relation_matrix = m;
    if (rows == p.g) rep.determinant = det(m);
    rep.divisors = snf(m).divisors();
    int units = 0;
    for (const Int& d : rep.divisors)
        if (d == 1) ++units;
    rep.homology_sphere = units == p.g;
    return rep;
}

bool is_homology_sphere(const Endo& h) {
    return first_homology(heegaard_presentation(h)).homology_sphere;
}

}  // namespace mcg
