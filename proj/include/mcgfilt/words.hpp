#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mcg {

// Symbols index the generators of the free group F on x1,y1,...,xg,yg in the
// fixed alphabet order x1 < y1 < x2 < y2 < ...: x_i has id 2(i-1), y_i has id
// 2(i-1)+1.
inline int sym_x(int i) { return 2 * (i - 1); }
inline int sym_y(int i) { return 2 * (i - 1) + 1; }
inline bool sym_is_x(int s) { return s % 2 == 0; }
inline int sym_handle(int s) { return s / 2 + 1; }
std::string sym_name(int s);
// Parses "x3" / "y12"; returns -1 if the token is not a generator name.
int parse_sym(const std::string& token);

// Freely reduced word in F. Letters are stored run-length as (symbol,
// exponent) with nonzero exponents and distinct adjacent symbols, and exposed
// as exponent-±1 sequences through letters().
class Word {
public:
    explicit Word(int g) : g_(check_genus(g)) {}
    // Accepts any (symbol, exponent) sequence and reduces it.
    Word(int g, const std::vector<std::pair<int, int>>& letters);

    int genus() const { return g_; }
    bool empty() const { return runs_.empty(); }
    int length() const;
    const std::vector<std::pair<int, int>>& runs() const { return runs_; }
    std::vector<std::pair<int, int>> letters() const;

    // Multiplies by sym^exp on the right, keeping the word reduced.
    Word& append(int sym, int exp);
    Word& operator*=(const Word& other);
    Word inverse() const;
    Word pow(int e) const;
    // The image under killing every x-generator (the projection onto the
    // subgroup freely generated by the y's).
    Word delete_x() const;

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic on the letter expansion; total order for containers.
    friend bool operator<(const Word& a, const Word& b);

private:
    static int check_genus(int g);
    int g_;
    std::vector<std::pair<int, int>> runs_;
};

Word operator*(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);

// delta = [x1,y1][x2,y2]...[xg,yg], the boundary word; reduced length 4g.
Word boundary_word(int g);

// Word text grammar: whitespace-separated tokens `x<i>` or `y<i>`, each with
// an optional `^-1` (or `^<n>`) suffix; the empty word is the single token
// `e`. Throws std::invalid_argument on malformed input.
Word word_from_text(int g, const std::string& text);
std::string word_to_text(const Word& w);

// Endomorphism of F given by generator images. An inverse may be supplied,
// never computed; when present, both compositions are checked to fix every
// generator.
class Endo {
public:
    Endo(int g, std::vector<Word> images);
    Endo(int g, std::vector<Word> images, std::vector<Word> inverse_images);
    static Endo identity(int g);

    int genus() const { return g_; }
    const Word& image(int sym) const { return images_.at(sym); }
    bool has_inverse() const { return !inverse_images_.empty(); }
    const Word& inverse_image(int sym) const;
    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;
    Endo inverse() const;

    friend bool operator==(const Endo&, const Endo&) = default;

private:
    static Word apply_images(const std::vector<Word>& images, const Word& w);
    int g_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

// compose(f, g) is f after g: compose(f, g).apply(w) = f.apply(g.apply(w)).
Endo compose(const Endo& f, const Endo& g);

// True iff h(delta) = delta as reduced words (exact equality, no conjugacy
// slack).
bool fixes_boundary(const Endo& h);

}  // namespace mcg
