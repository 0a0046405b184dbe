#include "mcgfilt/words.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mcg {

std::string sym_name(int s) {
    return (sym_is_x(s) ? "x" : "y") + std::to_string(sym_handle(s));
}

int parse_sym(const std::string& token) {
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) return -1;
    for (size_t i = 1; i < token.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(token[i]))) return -1;
    int idx = std::atoi(token.c_str() + 1);
    if (idx < 1) return -1;
    return token[0] == 'x' ? sym_x(idx) : sym_y(idx);
}

int Word::check_genus(int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    return g;
}

Word::Word(int g, const std::vector<std::pair<int, int>>& letters)
    : g_(check_genus(g)) {
    for (auto [sym, exp] : letters) append(sym, exp);
}

int Word::length() const {
    int n = 0;
    for (auto [sym, exp] : runs_) n += std::abs(exp);
    return n;
}

std::vector<std::pair<int, int>> Word::letters() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(length());
    for (auto [sym, exp] : runs_) {
        int sign = exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(exp); ++i) out.emplace_back(sym, sign);
    }
    return out;
}

Word& Word::append(int sym, int exp) {
    if (sym < 0 || sym >= 2 * g_)
        throw std::invalid_argument("generator index out of 1..g");
    if (exp == 0) return *this;
    if (!runs_.empty() && runs_.back().first == sym) {
        runs_.back().second += exp;
        if (runs_.back().second == 0) runs_.pop_back();
    } else {
        runs_.emplace_back(sym, exp);
    }
    return *this;
}

Word& Word::operator*=(const Word& other) {
    if (other.g_ != g_) throw std::invalid_argument("genus mismatch");
    for (auto [sym, exp] : other.runs_) append(sym, exp);
    return *this;
}

Word Word::inverse() const {
    Word out(g_);
    out.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
        out.runs_.emplace_back(it->first, -it->second);
    return out;
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word out(g_);
    for (int i = 0; i < std::abs(e); ++i) out *= base;
    return out;
}

Word Word::delete_x() const {
    Word out(g_);
    for (auto [sym, exp] : runs_)
        if (!sym_is_x(sym)) out.append(sym, exp);
    return out;
}

bool operator<(const Word& a, const Word& b) {
    return a.letters() < b.letters();
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out *= b;
    return out;
}

Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

Word boundary_word(int g) {
    Word out(g);
    for (int i = 1; i <= g; ++i) {
        out.append(sym_x(i), 1).append(sym_y(i), 1);
        out.append(sym_x(i), -1).append(sym_y(i), -1);
    }
    return out;
}

Word word_from_text(int g, const std::string& text) {
    Word out(g);
    std::istringstream in(text);
    std::string token;
    bool saw_e = false, saw_letter = false;
    while (in >> token) {
        if (token == "e") {
            saw_e = true;
            continue;
        }
        saw_letter = true;
        int exp = 1;
        auto caret = token.find('^');
        std::string base = token;
        if (caret != std::string::npos) {
            base = token.substr(0, caret);
            std::string tail = token.substr(caret + 1);
            size_t pos = 0;
            try {
                exp = std::stoi(tail, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed exponent: " + token);
            }
            if (pos != tail.size())
                throw std::invalid_argument("malformed exponent: " + token);
        }
        int sym = parse_sym(base);
        if (sym < 0) throw std::invalid_argument("malformed generator: " + token);
        if (sym >= 2 * g)
            throw std::invalid_argument("generator index out of 1..g");
        out.append(sym, exp);
    }
    if (!saw_e && !saw_letter && text.find_first_not_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("malformed word: " + text);
    return out;
}

std::string word_to_text(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (auto [sym, sign] : w.letters()) {
        if (!out.empty()) out += ' ';
        out += sym_name(sym);
        if (sign < 0) out += "^-1";
    }
    return out;
}

Endo::Endo(int g, std::vector<Word> images) : g_(g), images_(std::move(images)) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    if (images_.size() != static_cast<size_t>(2 * g))
        throw std::invalid_argument("expected one image per generator");
    for (const Word& w : images_)
        if (w.genus() != g) throw std::invalid_argument("genus mismatch");
}

Endo::Endo(int g, std::vector<Word> images, std::vector<Word> inverse_images)
    : Endo(g, std::move(images)) {
    if (inverse_images.size() != static_cast<size_t>(2 * g))
        throw std::invalid_argument("expected one inverse image per generator");
    for (const Word& w : inverse_images)
        if (w.genus() != g) throw std::invalid_argument("genus mismatch");
    inverse_images_ = std::move(inverse_images);
    for (int s = 0; s < 2 * g_; ++s) {
        Word gen(g_);
        gen.append(s, 1);
        if (apply_images(images_, inverse_images_[s]) != gen ||
            apply_images(inverse_images_, images_[s]) != gen)
            throw std::invalid_argument("inverse images do not invert the endomorphism");
    }
}

Endo Endo::identity(int g) {
    std::vector<Word> images;
    for (int s = 0; s < 2 * g; ++s) {
        Word w(g);
        w.append(s, 1);
        images.push_back(w);
    }
    std::vector<Word> inv = images;
    return Endo(g, std::move(images), std::move(inv));
}

const Word& Endo::inverse_image(int sym) const {
    if (!has_inverse()) throw std::invalid_argument("endomorphism has no stored inverse");
    return inverse_images_.at(sym);
}

Word Endo::apply_images(const std::vector<Word>& images, const Word& w) {
    Word out(w.genus());
    for (auto [sym, exp] : w.runs()) {
        const Word& img = images[sym];
        Word factor = img.pow(exp);
        out *= factor;
    }
    return out;
}

Word Endo::apply(const Word& w) const {
    if (w.genus() != g_) throw std::invalid_argument("genus mismatch");
    return apply_images(images_, w);
}

Word Endo::apply_inverse(const Word& w) const {
    if (w.genus() != g_) throw std::invalid_argument("genus mismatch");
    if (!has_inverse()) throw std::invalid_argument("endomorphism has no stored inverse");
    return apply_images(inverse_images_, w);
}

Endo Endo::inverse() const {
    if (!has_inverse()) throw std::invalid_argument("endomorphism has no stored inverse");
    return Endo(g_, inverse_images_, images_);
}

Endo compose(const Endo& f, const Endo& g) {
    if (f.genus() != g.genus()) throw std::invalid_argument("genus mismatch");
    int n = 2 * f.genus();
    std::vector<Word> images;
    images.reserve(n);
    for (int s = 0; s < n; ++s) images.push_back(f.apply(g.image(s)));
    if (f.has_inverse() && g.has_inverse()) {
        std::vector<Word> inv;
        inv.reserve(n);
        for (int s = 0; s < n; ++s)
            inv.push_back(g.apply_inverse(f.inverse_image(s)));
        return Endo(f.genus(), std::move(images), std::move(inv));
    }
    return Endo(f.genus(), std::move(images));
}

bool fixes_boundary(const Endo& h) {
    Word delta = boundary_word(h.genus());
    return h.apply(delta) == delta;
}

}  // namespace mcg
