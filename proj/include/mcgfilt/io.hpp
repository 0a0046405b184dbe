#pragma once

#include <string>

#include "json.hpp"
#include "mcgfilt/deriv.hpp"
#include "mcgfilt/filtration.hpp"
#include "mcgfilt/lie.hpp"
#include "mcgfilt/words.hpp"
#include "mcgfilt/zlinalg.hpp"

namespace mcg {

using Json = nlohmann::json;

// Integers serialize as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; parsing accepts either.
Json int_json(const Int& v);
Int int_from_json(const Json& j);

// Concatenated generator names, e.g. "x1y1" for the word {0, 1}.
std::string symword_name(const SymWord& w);
SymWord symword_from_name(const std::string& text);

// {"k": int, "coeffs": {"x1y1": 1, ...}}; the alphabet size is supplied on
// input. Every coefficient key must be a Lyndon word of length k over the
// first n symbols.
Json lie_json(const LieElement& a);
LieElement lie_from_json(int n, const Json& j);
// `1*[x1y1] - 2*[x1x1y1]`, or `0`.
std::string lie_text(const LieElement& a);

// {"k": int, "coeffs": {"x1|x1y1": -1, ...}}; keys pair the left-factor
// generator with a Lyndon word of length k+1.
Json deriv_json(const DerivationElement& d);
DerivationElement deriv_from_json(int n, const Json& j);
// `1*x1|[x1y1] - 2*y1|[x1x1y1]`, or `0`.
std::string deriv_text(const DerivationElement& d);

// {"k": int, "coeffs": {"x1x1y1": 2, ...}}; keys are sorted multisets.
Json sympower_json(const SymPowerElement& s);
std::string sympower_text(const SymPowerElement& s);

// {"rows": r, "cols": c, "data": [[...], ...]}.
Json matrix_json(const MatZ& m);
MatZ matrix_from_json(const Json& j);

// {"g": int, "images": {"x1": word-text, ...}, "inverse_images": optional
// same shape}. Every generator needs an image; unknown keys are rejected.
Json endo_json(const Endo& h);
Endo endo_from_json(const Json& j);
Endo endo_from_file(const std::string& path);

// {"endo": ..., "filtration": "J"|"L", "k": int, "member": bool,
//  "witness": {"generator": ..., "word": ...} or {}}.
Json membership_json(const MembershipReport& r);

// Parses text that must be a complete JSON document; malformed input throws
// std::invalid_argument (as do all parsers above).
Json json_from_text(const std::string& text);

}  // namespace mcg
