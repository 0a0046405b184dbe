#include "mcgfilt/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgfilt/acceptance.hpp"
#include "mcgfilt/deriv.hpp"
#include "mcgfilt/filtration.hpp"
#include "mcgfilt/heegaard.hpp"
#include "mcgfilt/io.hpp"
#include "mcgfilt/lie.hpp"
#include "mcgfilt/trees.hpp"
#include "mcgfilt/words.hpp"

namespace mcg {
namespace {

struct CliError {
    int code;
    std::string message;
};

// Thrown when a computation's precondition fails; the report is printed and
// the process exits with code 2.
struct Precondition {
    Json report;
};

struct Parsed {
    std::string command;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> flags;
    bool timing = false;
    std::string format = "json";
    unsigned seed = 20260822;
};

struct Result {
    Json params = Json::object();
    Json payload = Json::object();
    std::string text;
    int exit = 0;
};

const char* kUsage =
    "usage: mcgfilt <command> [flags]\n"
    "  basis g k                 Lyndon basis of degree k on 2g symbols\n"
    "  dk g k                    basis of the derivation lattice D_k\n"
    "  eta-image g k             elementary divisors of D_k over Im eta\n"
    "  decompose --tree T --g g  tripod decomposition of a Lagrangian tree\n"
    "  johnson --endo E --k k    Johnson homomorphism at level k\n"
    "  lagrangian --endo E --k k Lagrangian homomorphism at level k\n"
    "  membership --endo E --k k --filtration J|L\n"
    "  trace --endo E --k k      Morita trace of the Johnson value\n"
    "  heegaard --endo E         homology certificate of the glued manifold\n"
    "  catalog g                 the built-in automorphisms\n"
    "  discover --g g --k k --max-length N [--gens a,b,c]\n"
    "  selftest [--seed N]       run the acceptance checks\n"
    "flags: --format json|text, --timing, --g g (catalog-name endos),\n"
    "       --seed N (selftest)\n";

int to_int(const std::string& s, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw CliError{64, what + " must be an integer, got \"" + s + "\""};
    return v;
}

Parsed parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw CliError{64, kUsage};
    Parsed p;
    p.command = args[0];
    static const std::set<std::string> value_flags = {
        "--format", "--seed", "--endo",       "--k",
        "--g",      "--tree", "--filtration", "--max-length",
        "--gens"};
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--timing") {
            p.timing = true;
            continue;
        }
        if (a.rfind("--", 0) == 0) {
            if (!value_flags.count(a)) throw CliError{64, "unknown flag " + a};
            if (i + 1 >= args.size())
                throw CliError{64, "flag " + a + " needs a value"};
            p.flags[a.substr(2)] = args[++i];
            continue;
        }
        p.positionals.push_back(a);
    }
    if (auto it = p.flags.find("format"); it != p.flags.end()) {
        if (it->second != "json" && it->second != "text")
            throw CliError{64, "--format must be json or text"};
        p.format = it->second;
        p.flags.erase(it);
    }
    if (auto it = p.flags.find("seed"); it != p.flags.end()) {
        long long v = to_int(it->second, "--seed");
        if (v < 0) throw CliError{64, "--seed must be nonnegative"};
        p.seed = unsigned(v);
        p.flags.erase(it);
    }
    return p;
}

void expect_shape(const Parsed& p, size_t positionals,
                  std::initializer_list<const char*> allowed) {
    if (p.positionals.size() != positionals)
        throw CliError{64, p.command + " takes " + std::to_string(positionals) +
                               " positional argument(s)\n" + kUsage};
    for (const auto& [key, value] : p.flags) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok)
            throw CliError{64, "flag --" + key + " is not valid for " + p.command};
    }
}

const std::string& require_flag(const Parsed& p, const char* name) {
    auto it = p.flags.find(name);
    if (it == p.flags.end())
        throw CliError{64, p.command + " requires --" + std::string(name)};
    return it->second;
}

int positive(int v, const std::string& what) {
    if (v < 1) throw CliError{64, what + " must be positive"};
    return v;
}

// Size guards keep interactive commands inside sane memory and time bounds;
// the library itself is not capped.
void guard_basis(int n, int k) {
    if (k > 12 || witt_dimension(n, k) > 5000000)
        throw CliError{64, "basis exceeds the CLI size limit"};
}

void guard_lattice(int g, int k) {
    if (k > 6 || 2LL * g * witt_dimension(2 * g, k + 1) > 4000)
        throw CliError{64, "lattice exceeds the CLI size limit"};
}

void guard_expansion(int g, int k) {
    if (k > 10 || std::pow(2.0 * g, k + 1) > 2e7)
        throw CliError{64, "expansion exceeds the CLI size limit"};
}

// Maps malformed user input (words, trees, JSON files) to exit code 65.
template <typename F>
auto input(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw CliError{65, e.what()};
    }
}

// Resolves --endo as a catalog name when --g is given, or as a JSON file
// path otherwise. Returns the endomorphism and its display name.
std::pair<Endo, std::string> resolve_endo(const Parsed& p) {
    const std::string& arg = require_flag(p, "endo");
    if (auto it = p.flags.find("g"); it != p.flags.end()) {
        int g = positive(to_int(it->second, "--g"), "--g");
        try {
            return {catalog_entry(catalog(g), arg).endo, arg};
        } catch (const std::invalid_argument& e) {
            throw CliError{64, e.what()};
        }
    }
    return {input([&] { return endo_from_file(arg); }), arg};
}

Json report_error(const std::string& endo, const std::string& filtration,
                  int k, const std::string& message) {
    return Json{{"endo", endo},
                {"filtration", filtration},
                {"k", k},
                {"member", false},
                {"witness", Json{{"error", message}}}};
}

Result cmd_basis(const Parsed& p) {
    expect_shape(p, 2, {});
    int g = positive(to_int(p.positionals[0], "g"), "g");
    int k = positive(to_int(p.positionals[1], "k"), "k");
    guard_basis(2 * g, k);
    const auto& words = lyndon_words(2 * g, k);
    Result r;
    r.params = Json{{"g", g}, {"k", k}};
    Json names = Json::array();
    std::string lines;
    for (const SymWord& w : words) {
        names.push_back(symword_name(w));
        lines += symword_name(w) + "\n";
    }
    r.payload = Json{{"witt", witt_dimension(2 * g, k)}, {"words", names}};
    r.text = "witt " + std::to_string(witt_dimension(2 * g, k)) + "\n" + lines;
    return r;
}

Result cmd_dk(const Parsed& p) {
    expect_shape(p, 2, {});
    int g = positive(to_int(p.positionals[0], "g"), "g");
    int k = positive(to_int(p.positionals[1], "k"), "k");
    guard_lattice(g, k);
    const auto& basis = dk_basis(g, k);
    Result r;
    r.params = Json{{"g", g}, {"k", k}};
    Json rows = Json::array();
    std::string lines;
    for (const DerivationElement& d : basis) {
        rows.push_back(deriv_json(d));
        lines += deriv_text(d) + "\n";
    }
    r.payload = Json{{"rank", basis.size()}, {"basis", rows}};
    r.text = "rank " + std::to_string(basis.size()) + "\n" + lines;
    return r;
}

Result cmd_eta_image(const Parsed& p) {
    expect_shape(p, 2, {});
    int g = positive(to_int(p.positionals[0], "g"), "g");
    int k = positive(to_int(p.positionals[1], "k"), "k");
    guard_lattice(g, k);
    std::vector<Int> divs = image_lattice(g, k);
    Result r;
    r.params = Json{{"g", g}, {"k", k}};
    Json out = Json::array();
    std::string line = "divisors";
    for (const Int& d : divs) {
        out.push_back(int_json(d));
        line += " " + d.get_str();
    }
    r.payload = Json{{"divisors", out}};
    r.text = line + "\n";
    return r;
}

Result cmd_decompose(const Parsed& p) {
    expect_shape(p, 0, {"tree", "g"});
    int g = positive(to_int(require_flag(p, "g"), "--g"), "--g");
    const std::string& text = require_flag(p, "tree");
    DecoratedTree t = input([&] { return tree_from_text(g, text); });
    if (leaf_count(t.a) + leaf_count(t.b) > 10)
        throw CliError{64, "tree exceeds the CLI size limit"};
    TripodExpression e;
    try {
        e = full_decompose(t);
    } catch (const std::invalid_argument& err) {
        throw Precondition{Json{{"tree", tree_to_text(t)},
                                {"error", err.what()}}};
    }
    Result r;
    r.params = Json{{"g", g}, {"tree", text}};
    Json tripods = Json::array();
    std::string lines;
    for (const DecoratedTree& trip : e.tripods) {
        tripods.push_back(tree_to_text(trip));
        lines += "tripod " + tree_to_text(trip) + "\n";
    }
    r.payload = Json{{"tree", tree_to_text(t)},
                     {"degree", t.degree()},
                     {"sign", e.sign},
                     {"tripods", tripods}};
    r.text = "tree " + tree_to_text(t) + "\nsign " +
             (e.sign > 0 ? std::string("+1") : std::string("-1")) + "\n" + lines;
    return r;
}

MembershipReport checked_membership(const std::string& name, const Endo& h,
                                    int k, const std::string& filtration) {
    try {
        MembershipReport rep = filtration == "J" ? johnson_membership(h, k)
                                                 : lagrangian_membership(h, k);
        rep.endo = name;
        return rep;
    } catch (const std::invalid_argument& e) {
        throw Precondition{report_error(name, filtration, k, e.what())};
    }
}

Result cmd_johnson(const Parsed& p, const std::string& filtration) {
    expect_shape(p, 0, {"endo", "k", "g"});
    int k = positive(to_int(require_flag(p, "k"), "--k"), "--k");
    auto [h, name] = resolve_endo(p);
    guard_expansion(h.genus(), k);
    MembershipReport rep = checked_membership(name, h, k, filtration);
    if (!rep.member) throw Precondition{membership_json(rep)};
    DerivationElement value =
        filtration == "J" ? johnson_hom(h, k) : lagrangian_hom(h, k);
    Result r;
    r.params = Json{{"endo", name}, {"k", k}};
    r.payload = Json{{"report", membership_json(rep)}, {"value", deriv_json(value)}};
    r.text = "member true\nvalue " + deriv_text(value) + "\n";
    return r;
}

Result cmd_membership(const Parsed& p) {
    expect_shape(p, 0, {"endo", "k", "g", "filtration"});
    int k = positive(to_int(require_flag(p, "k"), "--k"), "--k");
    const std::string& filtration = require_flag(p, "filtration");
    if (filtration != "J" && filtration != "L")
        throw CliError{64, "--filtration must be J or L"};
    auto [h, name] = resolve_endo(p);
    guard_expansion(h.genus(), k);
    MembershipReport rep = checked_membership(name, h, k, filtration);
    Result r;
    r.params = Json{{"endo", name}, {"filtration", filtration}, {"k", k}};
    r.payload = membership_json(rep);
    r.text = rep.member ? "member true\n"
                        : "member false\nwitness " + rep.witness_generator +
                              " -> " + rep.witness_word + "\n";
    return r;
}

Result cmd_trace(const Parsed& p) {
    expect_shape(p, 0, {"endo", "k", "g"});
    int k = positive(to_int(require_flag(p, "k"), "--k"), "--k");
    auto [h, name] = resolve_endo(p);
    guard_expansion(h.genus(), k);
    MembershipReport rep = checked_membership(name, h, k, "J");
    if (!rep.member) throw Precondition{membership_json(rep)};
    SymPowerElement tr = morita_trace(johnson_hom(h, k));
    Result r;
    r.params = Json{{"endo", name}, {"k", k}};
    r.payload = Json{{"report", membership_json(rep)}, {"trace", sympower_json(tr)}};
    r.text = "member true\ntrace " + sympower_text(tr) + "\n";
    return r;
}

Result cmd_heegaard(const Parsed& p) {
    expect_shape(p, 0, {"endo", "g"});
    auto [h, name] = resolve_endo(p);
    GroupPresentation pres = heegaard_presentation(h);
    HomologyReport rep = first_homology(pres);
    Result r;
    r.params = Json{{"endo", name}};
    Json relators = Json::array();
    std::string rel_line = "relators";
    for (const Word& w : pres.relators) {
        relators.push_back(word_to_text(w));
        rel_line += " " + word_to_text(w) + ",";
    }
    if (!pres.relators.empty()) rel_line.pop_back();
    Json divisors = Json::array();
    std::string div_line = "divisors";
    for (const Int& d : rep.divisors) {
        divisors.push_back(int_json(d));
        div_line += " " + d.get_str();
    }
    r.payload = Json{{"h", name},
                     {"relators", relators},
                     {"divisors", divisors},
                     {"homology_sphere", rep.homology_sphere}};
    r.text = rel_line + "\n" + div_line + "\nhomology_sphere " +
             (rep.homology_sphere ? "true" : "false") + "\n";
    return r;
}

Result cmd_catalog(const Parsed& p) {
    expect_shape(p, 1, {});
    int g = positive(to_int(p.positionals[0], "g"), "g");
    if (g > 8) throw CliError{64, "catalog exceeds the CLI size limit"};
    auto entries = catalog(g);
    Result r;
    r.params = Json{{"g", g}};
    Json rows = Json::array();
    std::string lines;
    for (const CatalogEntry& e : entries) {
        rows.push_back(Json{{"name", e.name},
                            {"note", e.note},
                            {"rel_boundary", e.rel_boundary},
                            {"sp", matrix_json(sp_matrix(e.endo))}});
        lines += e.name + "  " + e.note + "\n";
    }
    r.payload = Json{{"count", entries.size()}, {"entries", rows}};
    r.text = lines;
    return r;
}

Result cmd_discover(const Parsed& p) {
    expect_shape(p, 0, {"g", "k", "max-length", "gens"});
    int g = positive(to_int(require_flag(p, "g"), "--g"), "--g");
    int k = positive(to_int(require_flag(p, "k"), "--k"), "--k");
    int max_length = positive(to_int(require_flag(p, "max-length"), "--max-length"),
                              "--max-length");
    if (max_length > 8) throw CliError{64, "--max-length is capped at 8"};
    guard_expansion(g, k);
    auto entries = catalog(g);
    std::vector<CatalogEntry> gens;
    Json gen_names = Json::array();
    if (auto it = p.flags.find("gens"); it != p.flags.end()) {
        std::stringstream ss(it->second);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) throw CliError{64, "--gens has an empty name"};
            try {
                gens.push_back(catalog_entry(entries, name));
            } catch (const std::invalid_argument& e) {
                throw CliError{64, e.what()};
            }
            gen_names.push_back(name);
        }
        if (gens.empty()) throw CliError{64, "--gens has no names"};
    } else {
        gens = entries;
        for (const CatalogEntry& e : entries) gen_names.push_back(e.name);
    }
    std::vector<DiscoverResult> found = discover(gens, max_length, k);
    Result r;
    r.params = Json{
        {"g", g}, {"k", k}, {"max_length", max_length}, {"gens", gen_names}};
    Json rows = Json::array();
    std::string lines;
    for (const DiscoverResult& d : found) {
        rows.push_back(Json{{"word", d.word},
                            {"report", membership_json(d.report)},
                            {"value", deriv_json(d.value)}});
        lines += d.word + " :: " + deriv_text(d.value) + "\n";
    }
    r.payload = Json{{"count", found.size()}, {"results", rows}};
    r.text = lines;
    return r;
}

Result cmd_selftest(const Parsed& p) {
    expect_shape(p, 0, {});
    std::ostringstream report;
    int failures = run_acceptance(report, p.seed);
    Result r;
    r.params = Json{{"seed", p.seed}};
    r.payload = Json{{"failures", failures}, {"report", report.str()}};
    r.text = report.str();
    r.exit = failures > 0 ? 1 : 0;
    return r;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::string& out) {
    try {
        Parsed p = parse_args(args);
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        if (p.command == "basis")
            r = cmd_basis(p);
        else if (p.command == "dk")
            r = cmd_dk(p);
        else if (p.command == "eta-image")
            r = cmd_eta_image(p);
        else if (p.command == "decompose")
            r = cmd_decompose(p);
        else if (p.command == "johnson")
            r = cmd_johnson(p, "J");
        else if (p.command == "lagrangian")
            r = cmd_johnson(p, "L");
        else if (p.command == "membership")
            r = cmd_membership(p);
        else if (p.command == "trace")
            r = cmd_trace(p);
        else if (p.command == "heegaard")
            r = cmd_heegaard(p);
        else if (p.command == "catalog")
            r = cmd_catalog(p);
        else if (p.command == "discover")
            r = cmd_discover(p);
        else if (p.command == "selftest")
            r = cmd_selftest(p);
        else
            throw CliError{64, "unknown subcommand \"" + p.command + "\"\n" + kUsage};
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (p.format == "json") {
            Json envelope{{"command", p.command},
                          {"parameters", r.params},
                          {"payload", r.payload}};
            if (p.timing) envelope["timing"] = Json{{"ms", ms}};
            out += envelope.dump(2) + "\n";
        } else {
            out += r.text;
            if (p.timing) out += "# time_ms " + std::to_string(ms) + "\n";
        }
        return r.exit;
    } catch (const CliError& e) {
        out += e.message;
        if (out.empty() || out.back() != '\n') out += "\n";
        return e.code;
    } catch (const Precondition& e) {
        out += e.report.dump(2) + "\n";
        return 2;
    } catch (const std::exception& e) {
        out += std::string("internal error: ") + e.what() + "\n";
        return 70;
    }
}

}  // namespace mcg
