#include "mcgfilt/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcg {
namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument(what);
}

// Converts nlohmann's own exceptions (wrong type, missing field, parse
// error) into std::invalid_argument so callers see one error type for every
// malformed input.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

void check_keys(const Json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional,
                const char* what) {
    if (!j.is_object()) bad(std::string(what) + ": expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key)) bad(std::string(what) + ": missing \"" + key + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : required) known = known || it.key() == key;
        for (const char* key : optional) known = known || it.key() == key;
        if (!known) bad(std::string(what) + ": unknown key \"" + it.key() + "\"");
    }
}

SymWord checked_symword(int n, const std::string& text, size_t len,
                        const char* what) {
    SymWord w = symword_from_name(text);
    if (w.size() != len) bad(std::string(what) + ": key \"" + text + "\" has the wrong degree");
    for (char c : w)
        if (int(c) >= n) bad(std::string(what) + ": key \"" + text + "\" uses a symbol outside the alphabet");
    if (!is_lyndon(w)) bad(std::string(what) + ": key \"" + text + "\" is not a Lyndon word");
    return w;
}

}  // namespace

Json int_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("not a decimal integer: \"" + j.get<std::string>() + "\"");
        }
    }
    bad("expected an integer or a decimal string");
}

std::string symword_name(const SymWord& w) {
    std::string out;
    for (char c : w) out += sym_name(int(c));
    return out;
}

SymWord symword_from_name(const std::string& text) {
    SymWord w;
    size_t i = 0;
    while (i < text.size()) {
        size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        int s = parse_sym(text.substr(i, j - i));
        if (s < 0) bad("bad generator name in \"" + text + "\"");
        if (s > 127) bad("symbol out of range in \"" + text + "\"");
        w.push_back(static_cast<char>(s));
        i = j;
    }
    return w;
}

Json lie_json(const LieElement& a) {
    Json coeffs = Json::object();
    for (const auto& [w, c] : a.coeffs) coeffs[symword_name(w)] = int_json(c);
    return Json{{"k", a.k}, {"coeffs", coeffs}};
}

LieElement lie_from_json(int n, const Json& j) {
    return guarded("Lie element", [&] {
        check_keys(j, {"k", "coeffs"}, {}, "Lie element");
        LieElement a(n, j.at("k").get<int>());
        if (a.k < 1) bad("Lie element: degree must be positive");
        const Json& coeffs = j.at("coeffs");
        if (!coeffs.is_object()) bad("Lie element: \"coeffs\" must be an object");
        for (auto it = coeffs.begin(); it != coeffs.end(); ++it)
            a.add(checked_symword(n, it.key(), size_t(a.k), "Lie element"),
                  int_from_json(it.value()));
        return a;
    });
}

std::string lie_text(const LieElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : a.coeffs) {
        Int m = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += m.get_str() + "*[" + symword_name(w) + "]";
    }
    return out;
}

Json deriv_json(const DerivationElement& d) {
    Json coeffs = Json::object();
    for (const auto& [key, c] : d.coeffs)
        coeffs[sym_name(key.first) + "|" + symword_name(key.second)] = int_json(c);
    return Json{{"k", d.k}, {"coeffs", coeffs}};
}

DerivationElement deriv_from_json(int n, const Json& j) {
    return guarded("derivation element", [&] {
        check_keys(j, {"k", "coeffs"}, {}, "derivation element");
        DerivationElement d(n, j.at("k").get<int>());
        if (d.k < 1) bad("derivation element: degree must be positive");
        const Json& coeffs = j.at("coeffs");
        if (!coeffs.is_object()) bad("derivation element: \"coeffs\" must be an object");
        for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
            const std::string& key = it.key();
            size_t bar = key.find('|');
            if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
                bad("derivation element: key \"" + key + "\" is not left|word");
            int a = parse_sym(key.substr(0, bar));
            if (a < 0 || a >= n)
                bad("derivation element: bad left factor in \"" + key + "\"");
            d.add(a,
                  checked_symword(n, key.substr(bar + 1), size_t(d.k) + 1,
                                  "derivation element"),
                  int_from_json(it.value()));
        }
        return d;
    });
}

std::string deriv_text(const DerivationElement& d) {
    if (d.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : d.coeffs) {
        Int m = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += m.get_str() + "*" + sym_name(key.first) + "|[" +
               symword_name(key.second) + "]";
    }
    return out;
}

Json sympower_json(const SymPowerElement& s) {
    Json coeffs = Json::object();
    for (const auto& [key, c] : s.coeffs) {
        std::string name;
        for (int sym : key) name += sym_name(sym);
        coeffs[name] = int_json(c);
    }
    return Json{{"k", s.k}, {"coeffs", coeffs}};
}

std::string sympower_text(const SymPowerElement& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : s.coeffs) {
        Int m = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string name;
        for (int sym : key) name += sym_name(sym);
        out += m.get_str() + "*[" + name + "]";
    }
    return out;
}

Json matrix_json(const MatZ& m) {
    Json data = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(int_json(m.at(r, c)));
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"data", data}};
}

MatZ matrix_from_json(const Json& j) {
    return guarded("matrix", [&] {
        check_keys(j, {"rows", "cols", "data"}, {}, "matrix");
        int rows = j.at("rows").get<int>();
        int cols = j.at("cols").get<int>();
        if (rows < 0 || cols < 0) bad("matrix: negative dimensions");
        const Json& data = j.at("data");
        if (!data.is_array() || int(data.size()) != rows)
            bad("matrix: \"data\" must hold one array per row");
        MatZ m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            const Json& row = data.at(r);
            if (!row.is_array() || int(row.size()) != cols)
                bad("matrix: row " + std::to_string(r) + " has the wrong length");
            for (int c = 0; c < cols; ++c) m.at(r, c) = int_from_json(row.at(c));
        }
        return m;
    });
}

Json endo_json(const Endo& h) {
    Json images = Json::object();
    for (int s = 0; s < 2 * h.genus(); ++s)
        images[sym_name(s)] = word_to_text(h.image(s));
    Json out{{"g", h.genus()}, {"images", images}};
    if (h.has_inverse()) {
        Json inv = Json::object();
        for (int s = 0; s < 2 * h.genus(); ++s)
            inv[sym_name(s)] = word_to_text(h.inverse_image(s));
        out["inverse_images"] = inv;
    }
    return out;
}

namespace {

std::vector<Word> images_from_json(int g, const Json& j, const char* what) {
    if (!j.is_object()) bad(std::string(what) + ": expected an object of generator images");
    std::vector<Word> images;
    images.reserve(size_t(2) * g);
    for (int s = 0; s < 2 * g; ++s) {
        std::string name = sym_name(s);
        if (!j.contains(name)) bad(std::string(what) + ": missing image for " + name);
        const Json& v = j.at(name);
        if (!v.is_string()) bad(std::string(what) + ": image of " + name + " must be a word string");
        images.push_back(word_from_text(g, v.get<std::string>()));
    }
    if (int(j.size()) != 2 * g) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            int s = parse_sym(it.key());
            if (s < 0 || s >= 2 * g)
                bad(std::string(what) + ": unknown generator \"" + it.key() + "\"");
        }
    }
    return images;
}

}  // namespace

Endo endo_from_json(const Json& j) {
    return guarded("endomorphism", [&] {
        check_keys(j, {"g", "images"}, {"inverse_images"}, "endomorphism");
        int g = j.at("g").get<int>();
        std::vector<Word> images = images_from_json(g, j.at("images"), "images");
        if (!j.contains("inverse_images")) return Endo(g, std::move(images));
        std::vector<Word> inv =
            images_from_json(g, j.at("inverse_images"), "inverse_images");
        return Endo(g, std::move(images), std::move(inv));
    });
}

Endo endo_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read endomorphism file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return endo_from_json(json_from_text(buf.str()));
}

Json membership_json(const MembershipReport& r) {
    Json witness = Json::object();
    if (!r.member) {
        witness["generator"] = r.witness_generator;
        witness["word"] = r.witness_word;
    }
    return Json{{"endo", r.endo},
                {"filtration", r.filtration},
                {"k", r.k},
                {"member", r.member},
                {"witness", witness}};
}

Json json_from_text(const std::string& text) {
    return guarded("JSON", [&] { return Json::parse(text); });
}

}  // namespace mcg
