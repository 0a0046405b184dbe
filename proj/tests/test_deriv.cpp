#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mcgfilt/deriv.hpp"
#include "mcgfilt/words.hpp"

using namespace mcg;

namespace {

LieElement random_lie(std::mt19937& rng, int n, int k) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    LieElement out(n, k);
    for (const SymWord& w : lyndon_words(n, k)) out.add(w, coeff(rng));
    return out;
}

DerivationElement random_derivation(std::mt19937& rng, int n, int k) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    DerivationElement out(n, k);
    for (int a = 0; a < n; ++a)
        for (const SymWord& w : lyndon_words(n, k + 1)) out.add(a, w, coeff(rng));
    return out;
}

DerivationElement random_kernel_element(std::mt19937& rng, int g, int k) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    const auto& basis = dk_basis(g, k);
    DerivationElement out(2 * g, k);
    for (const DerivationElement& b : basis) {
        DerivationElement t = b;
        t *= coeff(rng);
        out += t;
    }
    return out;
}

LieElement omega(int n) {
    LieElement out(n, 2);
    for (int h = 0; h < n / 2; ++h)
        out += bracket(lie_generator(n, 2 * h), lie_generator(n, 2 * h + 1));
    return out;
}

}  // namespace

TEST_SUITE("deriv") {

TEST_CASE("pairing convention") {
    CHECK(sym_pairing(0, 1) == 1);
    CHECK(sym_pairing(1, 0) == -1);
    CHECK(sym_pairing(0, 0) == 0);
    CHECK(sym_pairing(0, 2) == 0);
    CHECK(sym_pairing(2, 3) == 1);
    CHECK(sym_pairing(3, 2) == -1);
}

TEST_CASE("dualize_hom single term") {
    std::vector<LieElement> phi(2);
    phi[1] = bracket(lie_generator(2, 0), lie_generator(2, 1));
    DerivationElement d = dualize_hom(2, 1, phi);
    DerivationElement want(2, 1);
    want.add(0, sym_word({0, 1}), 1);
    CHECK(d == want);
    CHECK(dualize_hom(2, 1, std::vector<LieElement>(2)).is_zero());

    std::vector<LieElement> bad(2);
    bad[0] = lie_generator(2, 0);
    CHECK_THROWS_AS(dualize_hom(2, 1, bad), std::invalid_argument);
}

TEST_CASE("hom_of evaluates the pairing") {
    DerivationElement d(2, 1);
    d.add(0, sym_word({0, 1}), 1);
    LieElement lam(2, 2);
    lam.add(sym_word({0, 1}), 1);
    CHECK(hom_of(d, 1) == lam);
    CHECK(hom_of(d, 0).is_zero());
}

TEST_CASE("dualize_hom and hom_of are mutually inverse") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 100; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 2);
        int n = 2 * g;
        std::vector<LieElement> phi;
        for (int z = 0; z < n; ++z) phi.push_back(random_lie(rng, n, k + 1));
        DerivationElement d = dualize_hom(n, k, phi);
        for (int z = 0; z < n; ++z) CHECK(hom_of(d, z) == phi[z]);
        std::vector<LieElement> back;
        for (int z = 0; z < n; ++z) back.push_back(hom_of(d, z));
        CHECK(dualize_hom(n, k, back) == d);
    }
}

TEST_CASE("bracket_map basics") {
    DerivationElement d(2, 1);
    d.add(0, sym_word({0, 1}), 1);
    LieElement want = bracket(lie_generator(2, 0),
                              bracket(lie_generator(2, 0), lie_generator(2, 1)));
    CHECK(bracket_map(d) == want);
}

TEST_CASE("bracket_map agrees with the derivation extension on omega") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 100; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 2);
        DerivationElement d = random_derivation(rng, 2 * g, k);
        CHECK(bracket_map(d) == apply_derivation(d, omega(2 * g)));
    }
}

TEST_CASE("dk_basis ranks and kernel membership") {
    CHECK(dk_basis(2, 1).size() == 4);
    CHECK(dk_basis(3, 1).size() == 20);
    CHECK(dk_basis(2, 2).size() == 20);
    CHECK(dk_basis(1, 1).empty());
    for (int g = 1; g <= 2; ++g)
        for (int k = 1; k <= 2; ++k) {
            const auto& basis = dk_basis(g, k);
            long long expect = 2 * g * witt_dimension(2 * g, k + 1) -
                               witt_dimension(2 * g, k + 2);
            CHECK(static_cast<long long>(basis.size()) == expect);
            for (const DerivationElement& d : basis) CHECK(bracket_map(d).is_zero());
        }
    // deterministic: repeated calls hand back the same object
    CHECK(&dk_basis(2, 1) == &dk_basis(2, 1));
}

TEST_CASE("dk_basis rows are a saturated lattice") {
    const auto& basis = dk_basis(2, 1);
    MatZ m(static_cast<int>(basis.size()),
           static_cast<int>(derivation_coords(basis[0]).size()));
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Int> row = derivation_coords(basis[i]);
        for (size_t j = 0; j < row.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = row[j];
    }
    CHECK(rank(m) == m.rows);
    // doubling a basis vector keeps membership; halving must fail
    std::vector<Int> twice = derivation_coords(basis[0]);
    for (Int& v : twice) v *= 2;
    CHECK(in_row_lattice(m, twice));
}

TEST_CASE("derivation_bracket is alternating") {
    std::mt19937 rng(227);
    for (int trial = 0; trial < 50; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 2);
        DerivationElement d = random_derivation(rng, 2 * g, k);
        CHECK(derivation_bracket(d, d).is_zero());
    }
}

TEST_CASE("derivation_bracket satisfies Jacobi") {
    std::mt19937 rng(229);
    for (int trial = 0; trial < 12; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        DerivationElement a = random_derivation(rng, 2 * g, 1);
        DerivationElement b = random_derivation(rng, 2 * g, 1);
        DerivationElement c = random_derivation(rng, 2 * g, trial % 2 ? 1 : 2);
        DerivationElement sum = derivation_bracket(a, derivation_bracket(b, c));
        sum += derivation_bracket(b, derivation_bracket(c, a));
        sum += derivation_bracket(c, derivation_bracket(a, b));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("kernel of beta is closed under the bracket") {
    std::mt19937 rng(233);
    for (int trial = 0; trial < 100; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int k1 = 1 + static_cast<int>(rng() % 2);
        int k2 = 1 + static_cast<int>(rng() % 2);
        DerivationElement a = random_kernel_element(rng, g, k1);
        DerivationElement b = random_kernel_element(rng, g, k2);
        CHECK(bracket_map(derivation_bracket(a, b)).is_zero());
    }
}

TEST_CASE("wedge formula instance") {
    Wedge3Element w(4);
    w.add({0, 1, 2}, 1);  // x1 ^ y1 ^ x2
    DerivationElement d = wedge3_to_d1(w);
    DerivationElement want(4, 1);
    want.add(0, sym_word({1, 2}), 1);   // x1 (x) [y1,x2]
    want.add(1, sym_word({0, 2}), -1);  // y1 (x) [x2,x1]
    want.add(2, sym_word({0, 1}), 1);   // x2 (x) [x1,y1]
    CHECK(d == want);
    CHECK(bracket_map(d).is_zero());
}

TEST_CASE("wedge antisymmetry normalization") {
    Wedge3Element w(4);
    w.add({1, 0, 2}, 1);
    Wedge3Element v(4);
    v.add({0, 1, 2}, -1);
    CHECK(w == v);
    Wedge3Element degenerate(4);
    degenerate.add({0, 0, 2}, 5);
    CHECK(degenerate.is_zero());
}

TEST_CASE("wedge and d1 identification round-trips") {
    for (int g = 1; g <= 3; ++g) {
        int n = 2 * g;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    Wedge3Element w(n);
                    w.add({i, j, l}, 1);
                    DerivationElement d = wedge3_to_d1(w);
                    CHECK(bracket_map(d).is_zero());
                    CHECK(d1_to_wedge3(d) == w);
                }
    }
    DerivationElement off(4, 1);
    off.add(0, sym_word({0, 1}), 1);
    CHECK_THROWS_AS(d1_to_wedge3(off), std::invalid_argument);
}

TEST_CASE("morita trace on the wedge image") {
    // trace(a^b^c) = 2(<a,b>c + <b,c>a + <c,a>b)
    Wedge3Element w(4);
    w.add({0, 1, 2}, 1);
    SymPowerElement t = morita_trace(wedge3_to_d1(w));
    SymPowerElement want(4, 1);
    want.add({2}, 2);
    CHECK(t == want);

    MatZ m(4, 4);
    int r = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int l = j + 1; l < 4; ++l) {
                Wedge3Element e(4);
                e.add({i, j, l}, 1);
                SymPowerElement tr = morita_trace(wedge3_to_d1(e));
                for (const auto& [key, c] : tr.coeffs) m.at(r, key[0]) = c;
                ++r;
            }
    CHECK(rank(m) == 4);
}

TEST_CASE("morita trace vanishes in even degree") {
    for (const DerivationElement& d : dk_basis(2, 2))
        CHECK(morita_trace(d).is_zero());
}

TEST_CASE("lagrangian projection") {
    DerivationElement d(4, 1);
    d.add(0, sym_word({1, 3}), 1);
    CHECK(project_to_lagrangian(d).is_zero());
    DerivationElement e(6, 1);
    e.add(1, sym_word({3, 5}), 1);
    CHECK(project_to_lagrangian(e) == e);
    DerivationElement mix(4, 1);
    mix.add(1, sym_word({1, 3}), 2);
    mix.add(1, sym_word({0, 3}), 7);
    mix.add(0, sym_word({1, 3}), 3);
    DerivationElement want(4, 1);
    want.add(1, sym_word({1, 3}), 2);
    CHECK(project_to_lagrangian(mix) == want);
}

TEST_CASE("projection preserves the bracket kernel") {
    std::mt19937 rng(239);
    for (int trial = 0; trial < 100; ++trial) {
        int g = 2;
        int k = 1 + static_cast<int>(rng() % 2);
        DerivationElement d = random_kernel_element(rng, g, k);
        CHECK(bracket_map(project_to_lagrangian(d)).is_zero());
    }
}

}
