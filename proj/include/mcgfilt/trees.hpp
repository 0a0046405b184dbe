#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcgfilt/bigint.hpp"
#include "mcgfilt/deriv.hpp"

namespace mcg {

struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

// Rooted planar binary subtree: a decorated leaf or an ordered pair.
struct TreeNode {
    int sym = -1;
    TreePtr left, right;
    bool is_leaf() const { return !left; }
};

TreePtr tree_leaf(int sym);
TreePtr tree_node(TreePtr l, TreePtr r);
int leaf_count(const TreePtr& t);
bool tree_equal(const TreePtr& a, const TreePtr& b);

// Planar trivalent tree with decorated leaves, planted along one edge with
// subtrees a and b on its two sides. Degree = leaves - 2 >= 1. The planting
// is a storage choice: eta and the bracket only see the underlying tree.
struct DecoratedTree {
    int n = 0;
    TreePtr a, b;

    int degree() const;
};

bool operator==(const DecoratedTree& s, const DecoratedTree& t);

DecoratedTree tripod(int n, int s1, int s2, int s3);

// Nested parentheses of decorations, e.g. `((y1,y2),(y1,y2))`.
DecoratedTree tree_from_text(int g, const std::string& text);
std::string tree_to_text(const DecoratedTree& t);

struct TreeTerm {
    Int coeff;
    DecoratedTree tree;
};
using TreeSum = std::vector<TreeTerm>;

// Sum over leaves i of a_i (x) lambda_i, where lambda_i brackets the tree
// re-rooted at leaf i in planar order; lands in the kernel of beta.
DerivationElement eta(const DecoratedTree& t);
DerivationElement eta(const TreeSum& s);

// Sum over leaf pairs of <a_i, b_j> times the welding of the two trees at
// the stripped leaves.
TreeSum tree_bracket(const DecoratedTree& t1, const DecoratedTree& t2);

// T + (T with the two subtrees at one internal vertex swapped), over every
// tree of degree k and every vertex.
std::vector<TreeSum> as_relators(int g, int k);

// I - H + X over every internal edge, enumerated as four hanging subtrees.
std::vector<TreeSum> ihx_relators(int g, int k);

// Elementary divisors of D_k(H_g) / (image of eta), 0 for free factors.
std::vector<Int> image_lattice(int g, int k);

// Streams every AS and IHX relator of degree <= max_k through a packed
// tensor-form eta evaluation; returns the number of relators checked.
// Throws std::logic_error naming the first nonvanishing relator.
long long relator_sweep(int g, int max_k, int threads);

struct DecomposeStep {
    DecoratedTree tripod_part;  // tripod(y_r, y_s, x_t), t fresh
    DecoratedTree rest;         // degree k-1, cherry replaced by y_t
    int sign = 1;               // [eta(tripod_part), eta(rest)] = sign * eta(T)
};

// One step of the cherry reduction for a y-decorated tree; exact, the
// returned identity is re-verified internally.
DecomposeStep decompose(const DecoratedTree& t);

// Right-nested bracket of tripods: sign * [t_0, [t_1, [..., t_last]]].
struct TripodExpression {
    int sign = 1;
    std::vector<DecoratedTree> tripods;
};

TripodExpression full_decompose(const DecoratedTree& t);

// Evaluates the expression through eta and derivation_bracket; equals
// eta of the decomposed tree.
DerivationElement eval_tripods(const TripodExpression& e);

}  // namespace mcg
