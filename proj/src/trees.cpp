#include "mcgfilt/trees.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mcgfilt/words.hpp"
#include "mcgfilt/zlinalg.hpp"

namespace mcg {

TreePtr tree_leaf(int sym) {
    if (sym < 0) throw std::invalid_argument("leaf decoration must be a basis symbol");
    auto n = std::make_shared<TreeNode>();
    n->sym = sym;
    return n;
}

TreePtr tree_node(TreePtr l, TreePtr r) {
    if (!l || !r) throw std::invalid_argument("null subtree");
    auto n = std::make_shared<TreeNode>();
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

int leaf_count(const TreePtr& t) {
    if (t->is_leaf()) return 1;
    return leaf_count(t->left) + leaf_count(t->right);
}

bool tree_equal(const TreePtr& a, const TreePtr& b) {
    if (a->is_leaf() != b->is_leaf()) return false;
    if (a->is_leaf()) return a->sym == b->sym;
    return tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

int DecoratedTree::degree() const { return leaf_count(a) + leaf_count(b) - 2; }

bool operator==(const DecoratedTree& s, const DecoratedTree& t) {
    return s.n == t.n && tree_equal(s.a, t.a) && tree_equal(s.b, t.b);
}

DecoratedTree tripod(int n, int s1, int s2, int s3) {
    for (int s : {s1, s2, s3})
        if (s < 0 || s >= n) throw std::invalid_argument("decoration out of range");
    return {n, tree_leaf(s1), tree_node(tree_leaf(s2), tree_leaf(s3))};
}

namespace {

void skip_spaces(const std::string& s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

TreePtr parse_subtree(const std::string& s, size_t& pos, int n) {
    skip_spaces(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree text");
    if (s[pos] == '(') {
        ++pos;
        TreePtr l = parse_subtree(s, pos, n);
        skip_spaces(s, pos);
        if (pos >= s.size() || s[pos] != ',')
            throw std::invalid_argument("expected ',' in tree text");
        ++pos;
        TreePtr r = parse_subtree(s, pos, n);
        skip_spaces(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("expected ')' in tree text");
        ++pos;
        return tree_node(std::move(l), std::move(r));
    }
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')' && s[pos] != '(' &&
           s[pos] != ' ')
        ++pos;
    int sym = parse_sym(s.substr(start, pos - start));
    if (sym < 0 || sym >= n) throw std::invalid_argument("bad leaf decoration");
    return tree_leaf(sym);
}

}  // namespace

DecoratedTree tree_from_text(int g, const std::string& text) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    size_t pos = 0;
    TreePtr root = parse_subtree(text, pos, 2 * g);
    skip_spaces(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in tree text");
    if (root->is_leaf()) throw std::invalid_argument("tree needs at least 3 leaves");
    DecoratedTree t{2 * g, root->left, root->right};
    if (t.degree() < 1) throw std::invalid_argument("tree needs at least 3 leaves");
    return t;
}

namespace {

void render_subtree(const TreePtr& t, std::string& out) {
    if (t->is_leaf()) {
        out += sym_name(t->sym);
        return;
    }
    out += '(';
    render_subtree(t->left, out);
    out += ',';
    render_subtree(t->right, out);
    out += ')';
}

}  // namespace

std::string tree_to_text(const DecoratedTree& t) {
    std::string out = "(";
    render_subtree(t.a, out);
    out += ',';
    render_subtree(t.b, out);
    out += ')';
    return out;
}

namespace {

LieElement subtree_lie(int n, const TreePtr& t) {
    if (t->is_leaf()) return lie_generator(n, t->sym);
    return bracket(subtree_lie(n, t->left), subtree_lie(n, t->right));
}

void eta_walk(DerivationElement& out, int n, const TreePtr& pos, const TreePtr& ctx) {
    if (pos->is_leaf()) {
        LieElement lam = subtree_lie(n, ctx);
        for (const auto& [w, c] : lam.coeffs) out.add(pos->sym, w, c);
        return;
    }
    eta_walk(out, n, pos->left, tree_node(pos->right, ctx));
    eta_walk(out, n, pos->right, tree_node(ctx, pos->left));
}

}  // namespace

DerivationElement eta(const DecoratedTree& t) {
    if (t.degree() < 1) throw std::invalid_argument("tree needs at least 3 leaves");
    DerivationElement out(t.n, t.degree());
    eta_walk(out, t.n, t.a, t.b);
    eta_walk(out, t.n, t.b, t.a);
    return out;
}

DerivationElement eta(const TreeSum& s) {
    DerivationElement out;
    bool first = true;
    for (const TreeTerm& term : s) {
        DerivationElement e = eta(term.tree);
        e *= term.coeff;
        if (first) {
            out = std::move(e);
            first = false;
        } else {
            out += e;
        }
    }
    return out;
}

namespace {

void collect_contexts(const TreePtr& pos, const TreePtr& ctx,
                      std::vector<std::pair<int, TreePtr>>& out) {
    if (pos->is_leaf()) {
        out.emplace_back(pos->sym, ctx);
        return;
    }
    collect_contexts(pos->left, tree_node(pos->right, ctx), out);
    collect_contexts(pos->right, tree_node(ctx, pos->left), out);
}

}  // namespace

TreeSum tree_bracket(const DecoratedTree& t1, const DecoratedTree& t2) {
    if (t1.n != t2.n) throw std::invalid_argument("symbol count mismatch");
    std::vector<std::pair<int, TreePtr>> c1, c2;
    collect_contexts(t1.a, t1.b, c1);
    collect_contexts(t1.b, t1.a, c1);
    collect_contexts(t2.a, t2.b, c2);
    collect_contexts(t2.b, t2.a, c2);
    TreeSum out;
    for (const auto& [ai, ctx1] : c1)
        for (const auto& [bj, ctx2] : c2) {
            int p = sym_pairing(ai, bj);
            if (p == 0) continue;
            out.push_back({Int(p), DecoratedTree{t1.n, ctx1, ctx2}});
        }
    return out;
}

namespace {

// All rooted decorated subtrees with m leaves over n symbols; cached.
const std::vector<TreePtr>& all_subtrees(int n, int m) {
    static std::map<std::pair<int, int>, std::vector<TreePtr>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::function<const std::vector<TreePtr>&(int)> build =
        [&](int leaves) -> const std::vector<TreePtr>& {
        auto key = std::make_pair(n, leaves);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<TreePtr> out;
        if (leaves == 1) {
            for (int s = 0; s < n; ++s) out.push_back(tree_leaf(s));
        } else {
            for (int a = 1; a < leaves; ++a) {
                const auto& ls = build(a);
                const auto& rs = build(leaves - a);
                for (const TreePtr& l : ls)
                    for (const TreePtr& r : rs) out.push_back(tree_node(l, r));
            }
        }
        return cache.emplace(key, std::move(out)).first->second;
    };
    return build(m);
}

// Planted trees of degree k, one planting per unordered top pair.
void for_each_tree(int n, int k,
                   const std::function<void(const DecoratedTree&)>& f) {
    int m = k + 2;
    for (int asz = 1; 2 * asz <= m; ++asz) {
        const auto& as = all_subtrees(n, asz);
        const auto& bs = all_subtrees(n, m - asz);
        for (const TreePtr& a : as)
            for (const TreePtr& b : bs) f(DecoratedTree{n, a, b});
    }
}

// Each result swaps the children of exactly one internal node.
void swap_variants(const TreePtr& t, std::vector<TreePtr>& out) {
    if (t->is_leaf()) return;
    out.push_back(tree_node(t->right, t->left));
    std::vector<TreePtr> sub;
    swap_variants(t->left, sub);
    for (TreePtr& v : sub) out.push_back(tree_node(v, t->right));
    sub.clear();
    swap_variants(t->right, sub);
    for (TreePtr& v : sub) out.push_back(tree_node(t->left, v));
}

}  // namespace

std::vector<TreeSum> as_relators(int g, int k) {
    if (g < 1 || k < 1) throw std::invalid_argument("genus and degree must be positive");
    int n = 2 * g;
    std::vector<TreeSum> out;
    for_each_tree(n, k, [&](const DecoratedTree& t) {
        std::vector<TreePtr> va;
        swap_variants(t.a, va);
        for (const TreePtr& v : va)
            out.push_back({{Int(1), t}, {Int(1), DecoratedTree{n, v, t.b}}});
        std::vector<TreePtr> vb;
        swap_variants(t.b, vb);
        for (const TreePtr& v : vb)
            out.push_back({{Int(1), t}, {Int(1), DecoratedTree{n, t.a, v}}});
    });
    return out;
}

std::vector<TreeSum> ihx_relators(int g, int k) {
    if (g < 1 || k < 1) throw std::invalid_argument("genus and degree must be positive");
    int n = 2 * g;
    int m = k + 2;
    std::vector<TreeSum> out;
    for (int m1 = 1; m1 <= m - 3; ++m1)
        for (int m2 = 1; m1 + m2 <= m - 2; ++m2)
            for (int m3 = 1; m1 + m2 + m3 <= m - 1; ++m3) {
                int m4 = m - m1 - m2 - m3;
                for (const TreePtr& a : all_subtrees(n, m1))
                    for (const TreePtr& b : all_subtrees(n, m2))
                        for (const TreePtr& c : all_subtrees(n, m3))
                            for (const TreePtr& d : all_subtrees(n, m4)) {
                                out.push_back(
                                    {{Int(1), DecoratedTree{n, tree_node(a, b), tree_node(c, d)}},
                                     {Int(-1), DecoratedTree{n, tree_node(a, c), tree_node(b, d)}},
                                     {Int(1), DecoratedTree{n, tree_node(a, d), tree_node(b, c)}}});
                            }
            }
    return out;
}

namespace {

std::string content_key(int n, int sym, const SymWord& w) {
    std::string c(n, '\0');
    ++c[sym];
    for (char ch : w) ++c[static_cast<unsigned char>(ch)];
    return c;
}

}  // namespace

std::vector<Int> image_lattice(int g, int k) {
    int n = 2 * g;
    const auto& basis = dk_basis(g, k);
    if (basis.empty()) return {};
    const auto& words = lyndon_words(n, k + 1);
    int w_count = static_cast<int>(words.size());

    std::map<std::string, std::vector<const DerivationElement*>> bblocks;
    for (const DerivationElement& d : basis) {
        const auto& key0 = d.coeffs.begin()->first;
        bblocks[content_key(n, key0.first, key0.second)].push_back(&d);
    }
    std::map<std::string, std::vector<int>> cols;
    for (int a = 0; a < n; ++a)
        for (int wi = 0; wi < w_count; ++wi) {
            std::string key = content_key(n, a, words[wi]);
            if (bblocks.count(key)) cols[key].push_back(a * w_count + wi);
        }
    auto restrict_coords = [&](const DerivationElement& d,
                               const std::vector<int>& cl) {
        std::vector<Int> v(cl.size(), Int(0));
        for (const auto& [key, c] : d.coeffs) {
            auto wit = std::lower_bound(words.begin(), words.end(), key.second);
            int idx = key.first * w_count + static_cast<int>(wit - words.begin());
            auto pit = std::lower_bound(cl.begin(), cl.end(), idx);
            if (pit == cl.end() || *pit != idx)
                throw std::logic_error("coordinate outside its content block");
            v[pit - cl.begin()] = c;
        }
        return v;
    };

    std::map<std::string, std::vector<std::vector<Int>>> rows;
    std::map<std::string, std::set<std::string>> seen;
    for_each_tree(n, k, [&](const DecoratedTree& t) {
        DerivationElement e = eta(t);
        if (e.is_zero()) return;
        const auto& key0 = e.coeffs.begin()->first;
        std::string key = content_key(n, key0.first, key0.second);
        auto ct = cols.find(key);
        if (ct == cols.end())
            throw std::logic_error("eta image misses the kernel blocks");
        std::vector<Int> v = restrict_coords(e, ct->second);
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
        std::string ser;
        for (const Int& x : v) {
            ser += x.get_str();
            ser += ',';
        }
        if (seen[key].insert(ser).second) rows[key].push_back(std::move(v));
    });

    std::vector<Int> parts;
    for (const auto& [key, belems] : bblocks) {
        const auto& cl = cols[key];
        MatZ amb(static_cast<int>(belems.size()), static_cast<int>(cl.size()));
        for (size_t i = 0; i < belems.size(); ++i) {
            std::vector<Int> v = restrict_coords(*belems[i], cl);
            for (size_t j = 0; j < v.size(); ++j)
                amb.at(static_cast<int>(i), static_cast<int>(j)) = v[j];
        }
        auto rit = rows.find(key);
        int nrows = rit == rows.end() ? 0 : static_cast<int>(rit->second.size());
        MatZ sub(nrows, static_cast<int>(cl.size()));
        for (int i = 0; i < nrows; ++i)
            for (size_t j = 0; j < cl.size(); ++j)
                sub.at(i, static_cast<int>(j)) = rit->second[i][j];
        for (Int& d : lattice_quotient(amb, sub)) parts.push_back(std::move(d));
    }

    MatZ diag(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        diag.at(static_cast<int>(i), static_cast<int>(i)) = parts[i];
    return snf(diag).divisors();
}

namespace {

// Tensor expansion with words packed one symbol per byte into a uint64.
struct PackedTensor {
    int len = 0;
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
};

PackedTensor packed_commutator(const PackedTensor& u, const PackedTensor& v) {
    PackedTensor out;
    out.len = u.len + v.len;
    out.terms.reserve(2 * u.terms.size() * v.terms.size());
    for (const auto& [uw, uc] : u.terms)
        for (const auto& [vw, vc] : v.terms) {
            out.terms.emplace_back(uw | vw << (8 * u.len), uc * vc);
            out.terms.emplace_back(vw | uw << (8 * v.len), -(uc * vc));
        }
    return out;
}

using TensorCache = std::unordered_map<const TreeNode*, PackedTensor>;

PackedTensor packed_subtree(const TreePtr& t, const TensorCache& cache) {
    auto it = cache.find(t.get());
    if (it != cache.end()) return it->second;
    if (t->is_leaf())
        return {1, {{static_cast<std::uint64_t>(t->sym), 1}}};
    return packed_commutator(packed_subtree(t->left, cache),
                             packed_subtree(t->right, cache));
}

using PackedAcc = std::vector<std::pair<std::uint64_t, std::int64_t>>;

void packed_walk(const TreePtr& pos, const PackedTensor& ctx, std::int64_t scale,
                 PackedAcc& acc, const TensorCache& cache) {
    if (pos->is_leaf()) {
        for (const auto& [w, c] : ctx.terms)
            acc.emplace_back(w << 8 | static_cast<std::uint64_t>(pos->sym),
                             scale * c);
        return;
    }
    packed_walk(pos->left, packed_commutator(packed_subtree(pos->right, cache), ctx),
                scale, acc, cache);
    packed_walk(pos->right, packed_commutator(ctx, packed_subtree(pos->left, cache)),
                scale, acc, cache);
}

void packed_eta(const DecoratedTree& t, std::int64_t scale, PackedAcc& acc,
                const TensorCache& cache) {
    packed_walk(t.a, packed_subtree(t.b, cache), scale, acc, cache);
    packed_walk(t.b, packed_subtree(t.a, cache), scale, acc, cache);
}

bool packed_is_zero(PackedAcc& acc) {
    std::sort(acc.begin(), acc.end());
    size_t i = 0;
    while (i < acc.size()) {
        std::int64_t sum = 0;
        size_t j = i;
        while (j < acc.size() && acc[j].first == acc[i].first) sum += acc[j++].second;
        if (sum != 0) return false;
        i = j;
    }
    return true;
}

}  // namespace

long long relator_sweep(int g, int max_k, int threads) {
    if (g < 1 || max_k < 1) throw std::invalid_argument("genus and degree must be positive");
    if (threads < 1) threads = 1;
    int n = 2 * g;

    TensorCache cache;
    for (int m = 1; m <= max_k + 1; ++m)
        for (const TreePtr& t : all_subtrees(n, m))
            cache.emplace(t.get(), packed_subtree(t, cache));

    // work item: one AS batch (top split, fixed a-subtree) or one IHX batch
    // (leaf split, fixed first subtree)
    struct WorkItem {
        bool ihx;
        int k;
        int m1, m2, m3, m4;  // IHX split; AS uses m1 (a size) only
        int first;           // index of the fixed first subtree
    };
    std::vector<WorkItem> items;
    for (int k = 1; k <= max_k; ++k) {
        int m = k + 2;
        for (int asz = 1; 2 * asz <= m; ++asz)
            for (int i = 0; i < static_cast<int>(all_subtrees(n, asz).size()); ++i)
                items.push_back({false, k, asz, m - asz, 0, 0, i});
        for (int m1 = 1; m1 <= m - 3; ++m1)
            for (int m2 = 1; m1 + m2 <= m - 2; ++m2)
                for (int m3 = 1; m1 + m2 + m3 <= m - 1; ++m3)
                    for (int i = 0; i < static_cast<int>(all_subtrees(n, m1).size()); ++i)
                        items.push_back({true, k, m1, m2, m3, m - m1 - m2 - m3, i});
    }

    std::atomic<size_t> cursor{0};
    std::atomic<long long> checked{0};
    std::mutex fail_mu;
    std::string failure;

    auto worker = [&]() {
        PackedAcc acc;
        long long local = 0;
        while (true) {
            size_t idx = cursor.fetch_add(1);
            if (idx >= items.size()) break;
            const WorkItem& it = items[idx];
            if (!it.ihx) {
                const TreePtr& a = all_subtrees(n, it.m1)[it.first];
                std::vector<TreePtr> va;
                swap_variants(a, va);
                for (const TreePtr& b : all_subtrees(n, it.m2)) {
                    DecoratedTree t{n, a, b};
                    std::vector<TreePtr> vb;
                    swap_variants(b, vb);
                    for (const TreePtr& v : va) {
                        acc.clear();
                        packed_eta(t, 1, acc, cache);
                        packed_eta(DecoratedTree{n, v, b}, 1, acc, cache);
                        ++local;
                        if (!packed_is_zero(acc)) {
                            std::lock_guard<std::mutex> lock(fail_mu);
                            if (failure.empty())
                                failure = "AS relator fails at " + tree_to_text(t);
                            return;
                        }
                    }
                    for (const TreePtr& v : vb) {
                        acc.clear();
                        packed_eta(t, 1, acc, cache);
                        packed_eta(DecoratedTree{n, a, v}, 1, acc, cache);
                        ++local;
                        if (!packed_is_zero(acc)) {
                            std::lock_guard<std::mutex> lock(fail_mu);
                            if (failure.empty())
                                failure = "AS relator fails at " + tree_to_text(t);
                            return;
                        }
                    }
                }
            } else {
                const TreePtr& a = all_subtrees(n, it.m1)[it.first];
                for (const TreePtr& b : all_subtrees(n, it.m2))
                    for (const TreePtr& c : all_subtrees(n, it.m3))
                        for (const TreePtr& d : all_subtrees(n, it.m4)) {
                            acc.clear();
                            packed_eta(DecoratedTree{n, tree_node(a, b), tree_node(c, d)}, 1,
                                       acc, cache);
                            packed_eta(DecoratedTree{n, tree_node(a, c), tree_node(b, d)}, -1,
                                       acc, cache);
                            packed_eta(DecoratedTree{n, tree_node(a, d), tree_node(b, c)}, 1,
                                       acc, cache);
                            ++local;
                            if (!packed_is_zero(acc)) {
                                std::lock_guard<std::mutex> lock(fail_mu);
                                if (failure.empty())
                                    failure = "IHX relator fails at " +
                                              tree_to_text(DecoratedTree{
                                                  n, tree_node(a, b), tree_node(c, d)});
                                return;
                            }
                        }
            }
        }
        checked.fetch_add(local);
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!failure.empty()) throw std::logic_error(failure);
    return checked.load();
}

namespace {

bool all_lagrangian(const TreePtr& t) {
    if (t->is_leaf()) return !sym_is_x(t->sym);
    return all_lagrangian(t->left) && all_lagrangian(t->right);
}

const TreeNode* find_cherry(const TreePtr& t) {
    if (t->is_leaf()) return nullptr;
    if (t->left->is_leaf() && t->right->is_leaf()) return t.get();
    if (const TreeNode* c = find_cherry(t->left)) return c;
    return find_cherry(t->right);
}

TreePtr replace_node(const TreePtr& t, const TreeNode* target, const TreePtr& repl) {
    if (t.get() == target) return repl;
    if (t->is_leaf()) return t;
    return tree_node(replace_node(t->left, target, repl),
                     replace_node(t->right, target, repl));
}

void count_decorations(const TreePtr& t, std::vector<int>& counts) {
    if (t->is_leaf()) {
        ++counts[t->sym];
        return;
    }
    count_decorations(t->left, counts);
    count_decorations(t->right, counts);
}

}  // namespace

DecomposeStep decompose(const DecoratedTree& t) {
    if (!all_lagrangian(t.a) || !all_lagrangian(t.b))
        throw std::invalid_argument("decoration not Lagrangian");
    if (t.degree() < 2) throw std::invalid_argument("degree too small");
    int g = t.n / 2;

    const TreeNode* cherry = find_cherry(t.a);
    bool in_a = cherry != nullptr;
    if (!cherry) cherry = find_cherry(t.b);

    int r = cherry->left->sym, s = cherry->right->sym;
    std::vector<int> counts(t.n, 0);
    count_decorations(t.a, counts);
    count_decorations(t.b, counts);
    --counts[r];
    --counts[s];
    int fresh = -1;
    for (int h = 0; h < g; ++h)
        if (counts[2 * h + 1] == 0) {
            fresh = h;
            break;
        }
    if (fresh < 0) throw std::invalid_argument("no fresh index");

    TreePtr repl = tree_leaf(2 * fresh + 1);
    DecoratedTree rest{t.n, in_a ? replace_node(t.a, cherry, repl) : t.a,
                       in_a ? t.b : replace_node(t.b, cherry, repl)};
    DecoratedTree trip = tripod(t.n, r, s, 2 * fresh);

    DerivationElement target = eta(t);
    DerivationElement got = derivation_bracket(eta(trip), eta(rest));
    int sign = 1;
    if (!(got == target)) {
        got *= Int(-1);
        if (!(got == target)) throw std::logic_error("decomposition identity failed");
        sign = -1;
    }
    return {trip, rest, sign};
}

TripodExpression full_decompose(const DecoratedTree& t) {
    TripodExpression out;
    DecoratedTree cur = t;
    while (cur.degree() >= 2) {
        DecomposeStep step = decompose(cur);
        out.sign *= step.sign;
        out.tripods.push_back(step.tripod_part);
        cur = step.rest;
    }
    if (!all_lagrangian(cur.a) || !all_lagrangian(cur.b))
        throw std::invalid_argument("decoration not Lagrangian");
    out.tripods.push_back(cur);
    return out;
}

DerivationElement eval_tripods(const TripodExpression& e) {
    if (e.tripods.empty()) throw std::invalid_argument("empty expression");
    DerivationElement d = eta(e.tripods.back());
    for (size_t i = e.tripods.size() - 1; i-- > 0;)
        d = derivation_bracket(eta(e.tripods[i]), d);
    if (e.sign < 0) d *= Int(-1);
    return d;
}

}  // namespace mcg
