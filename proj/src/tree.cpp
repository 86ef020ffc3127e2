#include "treecycles/tree.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "treecycles/error.hpp"

namespace treecycles {

Tree Tree::from_sets(int leaf_count, std::vector<LeafSet> sets) {
  if (leaf_count < 2) throw DomainError("a tree needs at least 2 leaves (g >= 3)");
  if (leaf_count > LeafSet::kMaxLabel) {
    throw DomainError("at most " + std::to_string(LeafSet::kMaxLabel) + " leaves supported");
  }
  if (static_cast<int>(sets.size()) != leaf_count - 1) {
    throw DomainError("expected " + std::to_string(leaf_count - 1) + " internal nodes, got " +
                      std::to_string(sets.size()));
  }
  const LeafSet all = LeafSet::interval(1, leaf_count);
  std::sort(sets.begin(), sets.end(), canonical_less);
  if (sets.front() != all) throw DomainError("family lacks the full leaf set");
  for (std::size_t a = 0; a < sets.size(); ++a) {
    if (!all.includes(sets[a])) throw DomainError("set " + sets[a].to_string() + " has foreign labels");
    if (sets[a].size() < 2) throw DomainError("set " + sets[a].to_string() + " is too small");
    if (a > 0 && sets[a] == sets[a - 1]) throw DomainError("repeated set " + sets[a].to_string());
    for (std::size_t b = 0; b < a; ++b) {
      if (!sets[a].nested_or_disjoint(sets[b])) {
        throw DomainError("sets " + sets[b].to_string() + " and " + sets[a].to_string() +
                          " cross");
      }
    }
  }

  Tree t;
  t.leaf_count_ = leaf_count;
  t.nodes_.resize(sets.size());
  std::vector<std::vector<Subtree>> kids(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    InternalNode& node = t.nodes_[j];
    node.leaves = sets[j];
    // Supersets form a chain and precede j; the last one is the parent.
    for (std::size_t p = j; p-- > 0;) {
      if (sets[p].includes(sets[j])) {
        node.parent = static_cast<int>(p);
        node.depth = t.nodes_[p].depth + 1;
        kids[p].push_back(Subtree{false, static_cast<int>(j), sets[j]});
        break;
      }
    }
  }
  for (std::size_t j = 0; j < sets.size(); ++j) {
    LeafSet covered;
    for (const Subtree& s : kids[j]) covered = covered | s.leaves;
    for (int l : (sets[j] - covered).labels()) kids[j].push_back(Subtree{true, l, LeafSet::single(l)});
    // A laminar family with n-1 distinct sets of size >= 2 is always binary.
    if (kids[j].size() != 2) throw DomainError("node " + sets[j].to_string() + " is not binary");
    std::sort(kids[j].begin(), kids[j].end(),
              [](const Subtree& a, const Subtree& b) { return a.leaves.min() < b.leaves.min(); });
    t.nodes_[j].children = {kids[j][0], kids[j][1]};
  }
  return t;
}

Tree Tree::from_family(const LaminarFamily& family) {
  if (family.sets.empty()) throw DomainError("empty family");
  return from_sets(family.sets.front().max(), family.sets);
}

const InternalNode& Tree::node(NodeRef ref) const {
  if (ref.index < 1 || ref.index > node_count()) {
    throw DomainError("node reference " + std::to_string(ref.index) + " outside 1.." +
                      std::to_string(node_count()));
  }
  return nodes_[static_cast<std::size_t>(ref.index - 1)];
}

std::vector<LeafSet> Tree::sets() const {
  std::vector<LeafSet> out;
  out.reserve(nodes_.size());
  for (const InternalNode& n : nodes_) out.push_back(n.leaves);
  return out;
}

std::optional<NodeRef> Tree::find(LeafSet leaves) const {
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (nodes_[j].leaves == leaves) return NodeRef{static_cast<int>(j) + 1};
  }
  return std::nullopt;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.leaf_count_ != b.leaf_count_) return false;
  return std::equal(a.nodes_.begin(), a.nodes_.end(), b.nodes_.begin(), b.nodes_.end(),
                    [](const InternalNode& x, const InternalNode& y) { return x.leaves == y.leaves; });
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.leaf_count_ <=> b.leaf_count_; c != 0) return c;
  for (std::size_t j = 0; j < a.nodes_.size(); ++j) {
    if (auto c = a.nodes_[j].leaves <=> b.nodes_[j].leaves; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  void run() {
    skip_space();
    parse_subtree(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  LeafSet seen() const { return seen_; }
  int leaves() const { return leaves_; }
  std::vector<LeafSet>& sets() { return sets_; }

 private:
  static constexpr int kMaxDepth = LeafSet::kMaxLabel + 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("tree syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  LeafSet parse_subtree(int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      LeafSet left = parse_subtree(depth + 1);
      expect(',');
      LeafSet right = parse_subtree(depth + 1);
      expect(')');
      sets_.push_back(left | right);
      return left | right;
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected '(' or a leaf label");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > LeafSet::kMaxLabel) fail("leaf label too large");
      ++pos_;
    }
    if (value < 1) fail("leaf labels must be positive");
    const int label = static_cast<int>(value);
    if (seen_.contains(label)) throw DomainError("duplicate leaf label " + std::to_string(label));
    seen_ = seen_ | LeafSet::single(label);
    ++leaves_;
    return LeafSet::single(label);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  LeafSet seen_;
  int leaves_ = 0;
  std::vector<LeafSet> sets_;
};

void render_into(const Tree& t, const Subtree& s, std::string& out) {
  if (s.is_leaf) {
    out += std::to_string(s.id);
    return;
  }
  const InternalNode& n = t.nodes()[static_cast<std::size_t>(s.id)];
  out += '(';
  render_into(t, n.children[0], out);
  out += ',';
  render_into(t, n.children[1], out);
  out += ')';
}

std::vector<Tree> sorted_by_rendering(std::vector<Tree> trees) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keys.emplace_back(render_tree(trees[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tree> out;
  out.reserve(trees.size());
  for (const auto& [key, i] : keys) out.push_back(std::move(trees[i]));
  return out;
}

void require_genus(int g) {
  if (g < 3) throw DomainError("genus must be at least 3, got " + std::to_string(g));
  if (g - 1 > LeafSet::kMaxLabel) throw DomainError("genus too large");
}

}  // namespace

Tree parse_tree(std::string_view text, std::optional<int> genus) {
  TreeParser parser(text);
  parser.run();
  const int n = parser.leaves();
  if (n < 2) throw DomainError("a tree needs at least 2 leaves (g >= 3)");
  if (parser.seen() != LeafSet::interval(1, n)) {
    throw DomainError("leaf labels must be exactly 1.." + std::to_string(n));
  }
  if (genus && *genus != n + 1) {
    throw DomainError("tree has genus " + std::to_string(n + 1) + ", expected " +
                      std::to_string(*genus));
  }
  return Tree::from_sets(n, std::move(parser.sets()));
}

std::string render_tree(const Tree& t) {
  std::string out;
  render_into(t, Subtree{false, 0, t.all_leaves()}, out);
  return out;
}

std::vector<Tree> enumerate_trees(int g) {
  require_genus(g);
  // Insert leaf m on every edge of every tree on m-1 leaves. Edges are named
  // by the set hanging below them: an internal set (the top one being the
  // edge towards the removed root leaf) or a singleton.
  std::vector<std::vector<LeafSet>> families{{LeafSet::interval(1, 2)}};
  for (int m = 3; m <= g - 1; ++m) {
    const LeafSet fresh = LeafSet::single(m);
    std::vector<std::vector<LeafSet>> next;
    next.reserve(families.size() * static_cast<std::size_t>(2 * m - 3));
    for (const auto& family : families) {
      std::vector<LeafSet> edges = family;
      for (int l = 1; l < m; ++l) edges.push_back(LeafSet::single(l));
      for (LeafSet below : edges) {
        std::vector<LeafSet> grown;
        grown.reserve(family.size() + 1);
        for (LeafSet y : family) grown.push_back(y.includes(below) && y != below ? (y | fresh) : y);
        grown.push_back(below | fresh);
        next.push_back(std::move(grown));
      }
    }
    families = std::move(next);
  }
  std::vector<Tree> trees;
  trees.reserve(families.size());
  for (auto& family : families) trees.push_back(Tree::from_sets(g - 1, std::move(family)));
  return sorted_by_rendering(std::move(trees));
}

bool is_balanced_node(const Tree& t, NodeRef v) {
  const InternalNode& n = t.node(v);
  const LeafSet rest = n.leaves - LeafSet::single(n.leaves.min());
  return !n.children[0].leaves.contains(rest.min());
}

std::vector<bool> balance_report(const Tree& t) {
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(t.node_count()));
  for (int j = 1; j <= t.node_count(); ++j) out.push_back(is_balanced_node(t, NodeRef{j}));
  return out;
}

bool is_balanced(const Tree& t) {
  for (int j = 1; j <= t.node_count(); ++j) {
    if (!is_balanced_node(t, NodeRef{j})) return false;
  }
  return true;
}

std::vector<Tree> enumerate_balanced(int g) {
  require_genus(g);
  // A balanced tree on m leaves is a balanced tree on m-1 leaves with m
  // attached as a cherry next to some leaf l < m.
  std::vector<std::vector<LeafSet>> families{{LeafSet::interval(1, 2)}};
  for (int m = 3; m <= g - 1; ++m) {
    const LeafSet fresh = LeafSet::single(m);
    std::vector<std::vector<LeafSet>> next;
    for (const auto& family : families) {
      for (int l = 1; l < m; ++l) {
        std::vector<LeafSet> grown;
        grown.reserve(family.size() + 1);
        for (LeafSet y : family) grown.push_back(y.contains(l) ? (y | fresh) : y);
        grown.push_back(LeafSet::single(l) | fresh);
        next.push_back(std::move(grown));
      }
    }
    families = std::move(next);
  }
  std::vector<Tree> trees;
  trees.reserve(families.size());
  for (auto& family : families) trees.push_back(Tree::from_sets(g - 1, std::move(family)));
  return sorted_by_rendering(std::move(trees));
}

LaminarFamily descendant_sets(const Tree& t) { return LaminarFamily{t.sets()}; }

}  // namespace treecycles
