#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mcgfilt/words.hpp"

using namespace mcg;

namespace {

Word W(int g, const std::string& text) { return word_from_text(g, text); }

Word random_word(int g, int len, std::mt19937_64& rng) {
    Word w(g);
    std::uniform_int_distribution<int> sym(0, 2 * g - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < len; ++i) w.append(sym(rng), sgn(rng) ? 1 : -1);
    return w;
}

Endo twist_x1(int g) {
    std::vector<Word> images, inv;
    for (int s = 0; s < 2 * g; ++s) {
        images.push_back(W(g, sym_name(s)));
        inv.push_back(W(g, sym_name(s)));
    }
    images[sym_y(1)] = W(g, "y1 x1");
    inv[sym_y(1)] = W(g, "y1 x1^-1");
    return Endo(g, images, inv);
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("free reduction") {
    CHECK(W(1, "x1 y1 y1^-1") == W(1, "x1"));
    CHECK(W(1, "").empty());
    CHECK(W(1, "e").empty());
    CHECK(W(2, "x1 x1 x1^-1 x1^-1 x2") == W(2, "x2"));
    CHECK(W(1, "x1^3").length() == 3);
}

TEST_CASE("reduction is idempotent and kills inserted cancelling pairs") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> sym(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(2, 12, rng);
        Word rebuilt(2);
        auto letters = w.letters();
        std::uniform_int_distribution<size_t> pos(0, letters.size());
        size_t insert_at = pos(rng);
        int s = sym(rng);
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i == insert_at) {
                rebuilt.append(s, 1);
                rebuilt.append(s, -1);
            }
            rebuilt.append(letters[i].first, letters[i].second);
        }
        if (letters.size() == insert_at) {
            rebuilt.append(s, 1);
            rebuilt.append(s, -1);
        }
        CHECK(rebuilt == w);
        CHECK(Word(2, w.letters()) == w);
    }
}

TEST_CASE("boundary word") {
    CHECK(word_to_text(boundary_word(1)) == "x1 y1 x1^-1 y1^-1");
    CHECK(word_to_text(boundary_word(2)) ==
          "x1 y1 x1^-1 y1^-1 x2 y2 x2^-1 y2^-1");
    for (int g = 1; g <= 10; ++g) CHECK(boundary_word(g).length() == 4 * g);
}

TEST_CASE("generator range errors") {
    CHECK_THROWS_AS(W(1, "x2"), std::invalid_argument);
    CHECK_THROWS_AS(W(2, "y3"), std::invalid_argument);
    CHECK_THROWS_AS(W(1, "z1"), std::invalid_argument);
    CHECK_THROWS_AS(W(1, "x1^z"), std::invalid_argument);
}

TEST_CASE("apply_endo basics") {
    Endo r1(1, {W(1, "x1 y1 x1^-1"), W(1, "x1^-1")},
            {W(1, "y1^-1"), W(1, "y1 x1 y1^-1")});
    CHECK(r1.apply(W(1, "x1")) == W(1, "x1 y1 x1^-1"));
    Endo id = Endo::identity(2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(2, 10, rng);
        CHECK(id.apply(w) == w);
    }
    CHECK(twist_x1(2).apply(boundary_word(2)) == boundary_word(2));
}

TEST_CASE("apply_endo respects composition") {
    std::mt19937_64 rng(11);
    Endo r1(1, {W(1, "x1 y1 x1^-1"), W(1, "x1^-1")},
            {W(1, "y1^-1"), W(1, "y1 x1 y1^-1")});
    Endo t = twist_x1(1);
    Endo both = compose(r1, t);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(1, 10, rng);
        CHECK(both.apply(w) == r1.apply(t.apply(w)));
    }
    CHECK(compose(r1, r1.inverse()) == Endo::identity(1));
    CHECK(compose(r1.inverse(), r1) == Endo::identity(1));
}

TEST_CASE("fixes_boundary") {
    CHECK(fixes_boundary(twist_x1(1)));
    CHECK(fixes_boundary(twist_x1(3)));

    Word c = commutator(W(1, "x1"), W(1, "y1"));
    Endo sep(1, {c * W(1, "x1") * c.inverse(), c * W(1, "y1") * c.inverse()});
    CHECK(fixes_boundary(sep));

    Endo swap(1, {W(1, "y1"), W(1, "x1")});
    CHECK_FALSE(fixes_boundary(swap));
}

TEST_CASE("inverse verification") {
    auto bad_inverse = [] {
        return Endo(1, {W(1, "x1 y1 x1^-1"), W(1, "x1^-1")},
                    {W(1, "y1^-1"), W(1, "x1 y1^-1")});
    };
    CHECK_THROWS_AS(bad_inverse(), std::invalid_argument);
    Endo r1(1, {W(1, "x1 y1 x1^-1"), W(1, "x1^-1")},
            {W(1, "y1^-1"), W(1, "y1 x1 y1^-1")});
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(1, 8, rng);
        CHECK(r1.apply_inverse(r1.apply(w)) == w);
    }
}

TEST_CASE("delete_x kills meridian letters") {
    CHECK(W(2, "x1 y1 x2 y2 x1^-1").delete_x() == W(2, "y1 y2"));
    CHECK(W(2, "x1 x2^5").delete_x().empty());
    CHECK(W(2, "y1 x1 y1^-1").delete_x().empty());
}

TEST_CASE("word text round trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(3, 15, rng);
        CHECK(word_from_text(3, word_to_text(w)) == w);
    }
    CHECK(word_to_text(Word(2)) == "e");
    CHECK(W(2, "x1^3 y2^-2") == W(2, "x1 x1 x1 y2^-1 y2^-1"));
}

}  // TEST_SUITE
