#include <functional>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mcgfilt/magnus.hpp"

using namespace mcg;

namespace {

Word random_word(std::mt19937& rng, int g, int len) {
    Word w(g);
    std::uniform_int_distribution<int> sym(0, 2 * g - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < len; ++i) w.append(sym(rng), sgn(rng) ? 1 : -1);
    return w;
}

// Random nested commutator with a nonzero symbolic class at every node.
// Returns the word together with its lower-central class.
std::pair<Word, LieElement> random_deep_commutator(std::mt19937& rng, int g,
                                                   int depth) {
    int n = 2 * g;
    while (true) {
        std::uniform_int_distribution<int> sym(0, n - 1);
        std::function<std::pair<Word, LieElement>(int)> build =
            [&](int d) -> std::pair<Word, LieElement> {
            if (d == 1) {
                int s = sym(rng);
                Word w(g);
                w.append(s, 1);
                return {w, lie_generator(n, s)};
            }
            std::uniform_int_distribution<int> split(1, d - 1);
            int a = split(rng);
            auto [wl, ll] = build(a);
            auto [wr, lr] = build(d - a);
            return {commutator(wl, wr), bracket(ll, lr)};
        };
        auto out = build(depth);
        if (!out.second.is_zero()) return out;
    }
}

}  // namespace

TEST_SUITE("magnus") {

TEST_CASE("generator expansions") {
    Word x1(1);
    x1.append(0, 1);
    MagnusSeries s = magnus(x1, 2);
    MagnusSeries want = magnus_one(2, 2);
    want.add(sym_word({0}), 1);
    CHECK(s == want);

    MagnusSeries inv = magnus(x1.inverse(), 2);
    MagnusSeries want_inv = magnus_one(2, 2);
    want_inv.add(sym_word({0}), -1);
    want_inv.add(sym_word({0, 0}), 1);
    CHECK(inv == want_inv);

    MagnusSeries comm = magnus(boundary_word(1), 2);
    MagnusSeries want_comm = magnus_one(2, 2);
    want_comm.add(sym_word({0, 1}), 1);
    want_comm.add(sym_word({1, 0}), -1);
    CHECK(comm == want_comm);
}

TEST_CASE("multiplicativity up to truncation") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        Word u = random_word(rng, g, 1 + static_cast<int>(rng() % 8));
        Word v = random_word(rng, g, 1 + static_cast<int>(rng() % 8));
        CHECK(magnus(u * v, 3) == magnus_mul(magnus(u, 3), magnus(v, 3)));
    }
}

TEST_CASE("power runs agree with letterwise products") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(rng, 2, 6);
        Word p = w.pow(3);
        MagnusSeries direct = magnus(p, 4);
        MagnusSeries stepped = magnus_one(4, 4);
        for (int i = 0; i < 3; ++i) stepped = magnus_mul(stepped, magnus(w, 4));
        CHECK(direct == stepped);
    }
}

TEST_CASE("lcs_degree basics") {
    Word x1(1);
    x1.append(0, 1);
    CHECK(lcs_degree(x1, 3) == 1);
    CHECK(lcs_degree(boundary_word(1), 3) == 2);
    Word c = commutator(x1, boundary_word(1));
    CHECK(lcs_degree(c, 4) == 3);
    CHECK(lcs_degree(boundary_word(2), 3) == 2);
    CHECK_THROWS_AS(lcs_degree(Word(2), 3), std::invalid_argument);
}

TEST_CASE("lcs_class basics") {
    LieElement cls = lcs_class(boundary_word(1), 2);
    LieElement want(2, 2);
    want.add(sym_word({0, 1}), 1);
    CHECK(cls == want);

    Word sq(1);
    sq.append(0, 2);
    LieElement ab = lcs_class(sq, 1);
    LieElement want_ab(2, 1);
    want_ab.add(sym_word({0}), 2);
    CHECK(ab == want_ab);

    Word x1(1);
    x1.append(0, 1);
    CHECK_THROWS_AS(lcs_class(x1, 2), std::invalid_argument);
    CHECK(lcs_class(Word(1), 3).is_zero());
}

TEST_CASE("commutator classes match the symbolic bracket") {
    Word h34(2);
    h34.append(2, 1);
    h34.append(3, 1);
    h34.append(2, -1);
    h34.append(3, -1);
    Word c1(2);
    c1.append(0, 1);
    c1.append(1, 1);
    c1.append(0, -1);
    c1.append(1, -1);
    Word deep = commutator(c1, h34);
    LieElement lhs = lcs_class(deep, 4);
    LieElement rhs = bracket(bracket(lie_generator(4, 0), lie_generator(4, 1)),
                             bracket(lie_generator(4, 2), lie_generator(4, 3)));
    CHECK(lhs == rhs);
}

TEST_CASE("random nested commutators: degree and class") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int depth = 2 + static_cast<int>(rng() % 4);
        auto [w, cls] = random_deep_commutator(rng, g, depth);
        CHECK(lcs_degree(w, depth) == depth);
        CHECK(lcs_class(w, depth) == cls);
    }
}

TEST_CASE("collapsing commutators vanish or drop deeper") {
    Word x1(1);
    x1.append(0, 1);
    CHECK(commutator(x1, x1) == Word(1));
    Word c = boundary_word(1);
    CHECK(commutator(c, c) == Word(1));
    // nonzero word whose top-degree bracket cancels
    Word u = commutator(x1, boundary_word(1));
    Word v(1);
    v.append(0, 1);
    v = v * boundary_word(1) * v.inverse();
    Word w = commutator(u, v * u * v.inverse());
    if (!w.empty()) CHECK(lcs_degree(w, 6) == 7);
}

TEST_CASE("class additivity inside F_k") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        int g = 1 + static_cast<int>(rng() % 2);
        int k = 2 + static_cast<int>(rng() % 3);
        auto [u, cu] = random_deep_commutator(rng, g, k);
        auto [v, cv] = random_deep_commutator(rng, g, k);
        LieElement sum = cu;
        sum += cv;
        CHECK(lcs_class(u * v, k) == sum);
    }
}

}
