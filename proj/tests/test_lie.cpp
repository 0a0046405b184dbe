#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mcgfilt/lie.hpp"

using namespace mcg;

namespace {

LieElement random_lie(int n, int k, std::mt19937_64& rng) {
    const auto& basis = lyndon_words(n, k);
    std::uniform_int_distribution<int> coeff(-4, 4);
    LieElement a(n, k);
    for (const auto& w : basis) a.add(w, coeff(rng));
    return a;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("lyndon word enumeration") {
    CHECK(lyndon_words(2, 1) == std::vector<SymWord>{sym_word({0}), sym_word({1})});
    CHECK(lyndon_words(2, 2) == std::vector<SymWord>{sym_word({0, 1})});
    CHECK(lyndon_words(2, 3) ==
          std::vector<SymWord>{sym_word({0, 0, 1}), sym_word({0, 1, 1})});
    for (const auto& w : lyndon_words(3, 4)) CHECK(is_lyndon(w));
}

TEST_CASE("witt dimension matches enumeration") {
    CHECK(witt_dimension(4, 2) == 6);
    CHECK(witt_dimension(4, 3) == 20);
    CHECK(witt_dimension(2, 5) == 6);
    for (int n = 2; n <= 8; n += 2)
        for (int k = 1; k <= 6; ++k)
            CHECK(lyndon_words(n, k).size() ==
                  static_cast<size_t>(witt_dimension(n, k)));
}

TEST_CASE("standard factorization") {
    auto [u, v] = std_factorization(sym_word({0, 0, 1}));
    CHECK(u == sym_word({0}));
    CHECK(v == sym_word({0, 1}));
    auto [u2, v2] = std_factorization(sym_word({0, 1, 1}));
    CHECK(u2 == sym_word({0, 1}));
    CHECK(v2 == sym_word({1}));
    for (int k = 2; k <= 6; ++k)
        for (const auto& w : lyndon_words(3, k)) {
            auto [a, b] = std_factorization(w);
            CHECK(a + b == w);
            CHECK(is_lyndon(a));
            CHECK(is_lyndon(b));
            CHECK(a < b);
        }
}

TEST_CASE("to_tensor basics") {
    LieElement x = lie_generator(2, 0);
    TensorElement tx = to_tensor(x);
    CHECK(tx.coeffs.size() == 1);
    CHECK(tx.coeffs.at(sym_word({0})) == 1);

    LieElement xy(2, 2);
    xy.add(sym_word({0, 1}), 1);
    TensorElement t = to_tensor(xy);
    CHECK(t.coeffs.at(sym_word({0, 1})) == 1);
    CHECK(t.coeffs.at(sym_word({1, 0})) == -1);
}

TEST_CASE("to_tensor is linear") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        LieElement a = random_lie(3, 4, rng);
        LieElement b = random_lie(3, 4, rng);
        LieElement sum = a;
        sum += b;
        TensorElement ta = to_tensor(a);
        ta += to_tensor(b);
        CHECK(to_tensor(sum) == ta);
    }
}

TEST_CASE("from_tensor") {
    TensorElement t(2, 2);
    t.add(sym_word({0, 1}), 1);
    t.add(sym_word({1, 0}), -1);
    LieElement a = from_tensor(t);
    CHECK(a.coeffs.size() == 1);
    CHECK(a.coeffs.at(sym_word({0, 1})) == 1);

    TensorElement bad(2, 2);
    bad.add(sym_word({0, 1}), 1);
    bad.add(sym_word({1, 0}), 1);
    CHECK_THROWS_AS(from_tensor(bad), std::invalid_argument);

    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + trial % 6;
        LieElement a = random_lie(2 + (trial % 2) * 2, k, rng);
        CHECK(from_tensor(to_tensor(a)) == a);
    }
}

TEST_CASE("bracket basics") {
    LieElement x = lie_generator(2, 0), y = lie_generator(2, 1);
    LieElement xy = bracket(x, y);
    CHECK(xy.coeffs.size() == 1);
    CHECK(xy.coeffs.at(sym_word({0, 1})) == 1);

    LieElement xxy = bracket(x, xy);
    CHECK(xxy.coeffs.size() == 1);
    CHECK(xxy.coeffs.at(sym_word({0, 0, 1})) == 1);

    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        LieElement a = random_lie(4, 1 + trial % 3, rng);
        CHECK(bracket(a, a).is_zero());
    }
}

TEST_CASE("bracket expands through the tensor algebra") {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 50; ++trial) {
        LieElement a = random_lie(3, 2, rng), b = random_lie(3, 3, rng);
        CHECK(to_tensor(bracket(a, b)) ==
              tensor_commutator(to_tensor(a), to_tensor(b)));
    }
}

TEST_CASE("antisymmetry and Jacobi") {
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 30; ++trial) {
        LieElement a = random_lie(4, 1 + trial % 3, rng);
        LieElement b = random_lie(4, 1 + (trial / 2) % 2, rng);
        LieElement c = random_lie(4, 2, rng);
        LieElement ab = bracket(a, b);
        LieElement ba = bracket(b, a);
        ab += ba;
        CHECK(ab.is_zero());
        LieElement jac = bracket(a, bracket(b, c));
        jac += bracket(b, bracket(c, a));
        jac += bracket(c, bracket(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("alphabet projection") {
    // keep only y symbols (odd ids) of a 2-handle alphabet
    std::vector<bool> keep = {false, true, false, true};
    LieElement xy(4, 2);
    xy.add(sym_word({0, 1}), 1);
    CHECK(project_alphabet(xy, keep).is_zero());

    LieElement yy(4, 2);
    yy.add(sym_word({1, 3}), 2);
    CHECK(project_alphabet(yy, keep) == yy);

    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 200; ++trial) {
        LieElement a = random_lie(4, 1 + trial % 3, rng);
        LieElement b = random_lie(4, 1 + (trial / 3) % 3, rng);
        LieElement lhs = project_alphabet(bracket(a, b), keep);
        LieElement rhs =
            bracket(project_alphabet(a, keep), project_alphabet(b, keep));
        CHECK(lhs == rhs);
    }
}

}  // TEST_SUITE
