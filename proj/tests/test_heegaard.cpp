#include "mcgfilt/heegaard.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "mcgfilt/filtration.hpp"
#include "mcgfilt/words.hpp"

using namespace mcg;

TEST_SUITE("heegaard") {

TEST_CASE("the identity gluing gives the three-sphere") {
    for (int g : {1, 2, 3}) {
        GroupPresentation p = heegaard_presentation(Endo::identity(g));
        REQUIRE(p.relators.size() == size_t(g));
        for (int j = 1; j <= g; ++j) {
            Word yj(g);
            yj.append(sym_y(j), 1);
            CHECK(p.relators[j - 1] == yj);
        }
        HomologyReport rep = first_homology(p);
        CHECK(rep.homology_sphere);
        REQUIRE(rep.determinant.has_value());
        CHECK(*rep.determinant == 1);
        for (const Int& d : rep.divisors) CHECK(d == 1);
    }
    CHECK(is_homology_sphere(Endo::identity(2)));
}

TEST_CASE("meridian twists do not change the presentation") {
    auto cat = catalog(2);
    GroupPresentation base = heegaard_presentation(Endo::identity(2));
    GroupPresentation tw =
        heegaard_presentation(catalog_entry(cat, "t_x1+").endo);
    REQUIRE(tw.relators.size() == base.relators.size());
    for (size_t i = 0; i < tw.relators.size(); ++i)
        CHECK(tw.relators[i] == base.relators[i]);
}

TEST_CASE("hand-built abelianizations") {
    Word r1(2), r2(2);
    r1.append(sym_y(1), 2);
    r2.append(sym_y(2), 1);
    HomologyReport rep = first_homology({2, {r1, r2}});
    REQUIRE(rep.divisors.size() == 2);
    CHECK(rep.divisors[0] == 1);
    CHECK(rep.divisors[1] == 2);
    CHECK(!rep.homology_sphere);
    CHECK(*rep.determinant == 2);

    Word lone(2);
    lone.append(sym_y(1), 1);
    HomologyReport under = first_homology({2, {lone}});
    CHECK(!under.homology_sphere);
    CHECK(!under.determinant.has_value());

    Word bad(2);
    bad.append(sym_x(1), 1);
    GroupPresentation badp{2, {bad}};
    CHECK_THROWS_WITH_AS((void)first_homology(badp), "relator uses a meridian",
                         std::invalid_argument);
}

TEST_CASE("Lagrangian gluings give homology spheres") {
    std::mt19937 rng(811);
    auto cat = catalog(2);
    std::vector<Endo> gens;
    for (const char* name : {"t_x1+", "t_x1-", "t_x2+", "t_x2-", "sum_x1_x2+",
                             "sum_x1_x2-", "t_c1", "t_c2", "c_delta"})
        gens.push_back(catalog_entry(cat, name).endo);
    for (int trial = 0; trial < 12; ++trial) {
        Endo h = Endo::identity(2);
        int len = 1 + int(rng() % 4);
        for (int i = 0; i < len; ++i)
            h = compose(h, gens[rng() % gens.size()]);
        CHECK(lagrangian_membership(h, 1).member);
        CHECK(is_homology_sphere(h));
        HomologyReport rep = first_homology(heegaard_presentation(h));
        Int dd = *rep.determinant;
        if (dd < 0) dd = -dd;
        CHECK(dd == 1);
    }
}

TEST_CASE("the verdict only depends on the gluing modulo handlebody twists") {
    // Meridian twists leave the meridian-image lattice alone on maps whose
    // homology action is block upper triangular, which covers the Lagrangian
    // catalog closure.
    std::mt19937 rng(812);
    auto cat = catalog(2);
    std::vector<Endo> pool;
    for (const char* name : {"t_x1+", "t_x2-", "sum_x1_x2+", "sum_x1_x2-",
                             "t_c1", "t_c2", "c_delta"})
        pool.push_back(catalog_entry(cat, name).endo);
    std::vector<Endo> twists = {catalog_entry(cat, "t_x1+").endo,
                                catalog_entry(cat, "t_x2-").endo};
    for (int trial = 0; trial < 10; ++trial) {
        Endo h = compose(pool[rng() % pool.size()], pool[rng() % pool.size()]);
        bool verdict = is_homology_sphere(h);
        CHECK(verdict);
        for (const Endo& t : twists) {
            CHECK(is_homology_sphere(compose(t, h)) == verdict);
            CHECK(is_homology_sphere(compose(h, t)) == verdict);
        }
    }
}

TEST_CASE("a longitude gluing is decided by the determinant") {
    auto cat = catalog(2);
    HomologyReport rep = first_homology(
        heegaard_presentation(catalog_entry(cat, "t_y1+").endo));
    REQUIRE(rep.determinant.has_value());
    Int dd = *rep.determinant;
    if (dd < 0) dd = -dd;
    CHECK(rep.homology_sphere == (dd == 1));
}

}
