#include "rbalg/trees.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace rbalg {

namespace {

// One past the end of the subtree whose root sits at `pos`.
std::size_t subtree_end(const std::vector<std::uint8_t>& code, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw InvalidArity("malformed tree code");
    need -= 1;
    if (code[pos]) need += 2;
    ++pos;
  }
  return pos;
}

template <class T>
std::vector<T> slice(const std::vector<T>& v, std::size_t b, std::size_t e) {
  return std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(b), v.begin() + static_cast<std::ptrdiff_t>(e));
}

template <class T>
std::vector<T> concat(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

// ---------------------------------------------------------- PlanarBinaryTree

PlanarBinaryTree PlanarBinaryTree::leaf() {
  PlanarBinaryTree t;
  t.code_ = {0};
  return t;
}

PlanarBinaryTree PlanarBinaryTree::graft(const PlanarBinaryTree& l, const PlanarBinaryTree& r) {
  PlanarBinaryTree t;
  t.code_.reserve(1 + l.code_.size() + r.code_.size());
  t.code_.push_back(1);
  t.code_.insert(t.code_.end(), l.code_.begin(), l.code_.end());
  t.code_.insert(t.code_.end(), r.code_.begin(), r.code_.end());
  return t;
}

PlanarBinaryTree PlanarBinaryTree::from_code(std::vector<std::uint8_t> code) {
  if (code.empty() || subtree_end(code, 0) != code.size()) throw InvalidArity("malformed tree code");
  PlanarBinaryTree t;
  t.code_ = std::move(code);
  return t;
}

std::pair<PlanarBinaryTree, PlanarBinaryTree> PlanarBinaryTree::split() const {
  if (is_leaf()) throw Indecomposable("a single leaf has no children");
  std::size_t e = subtree_end(code_, 1);
  PlanarBinaryTree l, r;
  l.code_ = slice(code_, 1, e);
  r.code_ = slice(code_, e, code_.size());
  return {std::move(l), std::move(r)};
}

std::string PlanarBinaryTree::to_string() const {
  if (is_leaf()) return "L";
  auto [l, r] = split();
  return "(" + l.to_string() + " " + r.to_string() + ")";
}

std::vector<PlanarBinaryTree> enumerate_trees(std::size_t n) {
  if (n == 0) throw InvalidArity("trees need at least one leaf");
  static std::map<std::size_t, std::vector<PlanarBinaryTree>> memo;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  std::vector<std::vector<PlanarBinaryTree>> by_size(n + 1);
  by_size[1] = {PlanarBinaryTree::leaf()};
  for (std::size_t k = 2; k <= n; ++k) {
    if (auto it = memo.find(k); it != memo.end()) {
      by_size[k] = it->second;
      continue;
    }
    for (std::size_t p = 1; p < k; ++p) {
      for (const auto& l : by_size[p]) {
        for (const auto& r : by_size[k - p]) by_size[k].push_back(PlanarBinaryTree::graft(l, r));
      }
    }
    memo[k] = by_size[k];
  }
  return by_size[n];
}

// -------------------------------------------------------- augmented trees

BAugTree::BAugTree(PlanarBinaryTree s, std::vector<LeafPower> l) : shape(std::move(s)), leaves(std::move(l)) {
  if (leaves.size() != shape.leaf_count()) throw InvalidArity("leaf power count does not match the tree");
}

BAugTree BAugTree::leaf(LeafPower p) { return BAugTree(PlanarBinaryTree::leaf(), {p}); }

RBAugTree::RBAugTree(PlanarBinaryTree s, std::vector<LeafPower> l, std::vector<std::uint32_t> v)
    : shape(std::move(s)), leaves(std::move(l)), vertex_powers(std::move(v)) {
  if (leaves.size() != shape.leaf_count()) throw InvalidArity("leaf power count does not match the tree");
  if (vertex_powers.size() != shape.vertex_count()) throw InvalidArity("vertex power count does not match the tree");
}

RBAugTree RBAugTree::leaf(LeafPower p, std::uint32_t r) { return RBAugTree(PlanarBinaryTree::leaf(), {p}, {r}); }

std::vector<std::uint32_t> RBAugTree::leaf_r_powers() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < vertex_powers.size(); ++i) {
    if (shape.code()[i] == 0) out.push_back(vertex_powers[i]);
  }
  return out;
}

BAugTree graft(const BAugTree& t1, const BAugTree& t2) {
  return BAugTree(PlanarBinaryTree::graft(t1.shape, t2.shape), concat(t1.leaves, t2.leaves));
}

RBAugTree graft(const RBAugTree& t1, const RBAugTree& t2) {
  std::vector<std::uint32_t> v{0};
  v.insert(v.end(), t1.vertex_powers.begin(), t1.vertex_powers.end());
  v.insert(v.end(), t2.vertex_powers.begin(), t2.vertex_powers.end());
  return RBAugTree(PlanarBinaryTree::graft(t1.shape, t2.shape), concat(t1.leaves, t2.leaves), std::move(v));
}

AugTree graft(const AugTree& t1, const AugTree& t2) {
  if (t1.index() != t2.index()) throw KindMismatch("cannot graft a B-augmented tree with an RB-augmented tree");
  if (std::holds_alternative<BAugTree>(t1)) return graft(std::get<BAugTree>(t1), std::get<BAugTree>(t2));
  return graft(std::get<RBAugTree>(t1), std::get<RBAugTree>(t2));
}

BDecomposition decompose(const BAugTree& t) {
  auto [l, r] = t.shape.split();
  std::size_t p = l.leaf_count();
  std::size_t q = r.leaf_count();
  return {p, q, BAugTree(l, slice(t.leaves, 0, p)), BAugTree(r, slice(t.leaves, p, p + q))};
}

RBDecomposition decompose(const RBAugTree& t) {
  auto [l, r] = t.shape.split();
  std::size_t p = l.leaf_count();
  std::size_t q = r.leaf_count();
  std::size_t e = 1 + l.vertex_count();
  return {p, q, t.vertex_powers[0],
          RBAugTree(l, slice(t.leaves, 0, p), slice(t.vertex_powers, 1, e)),
          RBAugTree(r, slice(t.leaves, p, p + q), slice(t.vertex_powers, e, t.vertex_powers.size()))};
}

BAugTree tree_alpha(const BAugTree& t) {
  BAugTree r = t;
  for (auto& l : r.leaves) ++l.alpha;
  return r;
}

BAugTree tree_beta(const BAugTree& t) {
  BAugTree r = t;
  for (auto& l : r.leaves) ++l.beta;
  return r;
}

RBAugTree tree_alpha(const RBAugTree& t) {
  RBAugTree r = t;
  for (auto& l : r.leaves) ++l.alpha;
  return r;
}

RBAugTree tree_beta(const RBAugTree& t) {
  RBAugTree r = t;
  for (auto& l : r.leaves) ++l.beta;
  return r;
}

RBAugTree tree_R(const RBAugTree& t) {
  RBAugTree r = t;
  ++r.vertex_powers[0];
  return r;
}

AugTree tree_alpha(const AugTree& t) {
  return std::visit([](const auto& x) -> AugTree { return tree_alpha(x); }, t);
}

AugTree tree_beta(const AugTree& t) {
  return std::visit([](const auto& x) -> AugTree { return tree_beta(x); }, t);
}

AugTree tree_R(const AugTree& t) {
  if (!std::holds_alternative<RBAugTree>(t)) throw WrongAugmentation("R acts only on RB-augmented trees");
  return tree_R(std::get<RBAugTree>(t));
}

// ------------------------------------------------------------ serialization

namespace {

void write_tree(std::string& out, const PlanarBinaryTree& shape, const std::vector<LeafPower>& leaves,
                const std::vector<std::uint32_t>* vp, std::size_t& pos, std::size_t& leaf) {
  const auto& code = shape.code();
  std::size_t here = pos++;
  if (code[here] == 0) {
    const LeafPower& p = leaves[leaf++];
    out += "L[" + std::to_string(p.alpha) + "," + std::to_string(p.beta);
    if (vp) out += ";" + std::to_string((*vp)[here]);
    out += "]";
    return;
  }
  out += "(";
  write_tree(out, shape, leaves, vp, pos, leaf);
  out += " ";
  write_tree(out, shape, leaves, vp, pos, leaf);
  out += ")";
  if (vp) out += "{" + std::to_string((*vp)[here]) + "}";
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  AugTree parse() {
    node();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    auto shape = PlanarBinaryTree::from_code(code_);
    if (rb_) return RBAugTree(shape, leaves_, powers_);
    return BAugTree(shape, leaves_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree '" + std::string(text_) + "': " + what, 1, pos_ + 1);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint32_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a non-negative integer");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  void node() {
    if (accept('L')) {
      code_.push_back(0);
      LeafPower p;
      std::uint32_t f = 0;
      if (accept('[')) {
        p.alpha = number();
        expect(',');
        p.beta = number();
        if (accept(';')) {
          rb_ = true;
          f = number();
        }
        expect(']');
      }
      leaves_.push_back(p);
      powers_.push_back(f);
      return;
    }
    if (!accept('(')) fail("expected 'L' or '('");
    std::size_t here = code_.size();
    code_.push_back(1);
    powers_.push_back(0);
    node();
    node();
    expect(')');
    if (accept('{')) {
      rb_ = true;
      powers_[here] = number();
      expect('}');
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool rb_ = false;
  std::vector<std::uint8_t> code_;
  std::vector<LeafPower> leaves_;
  std::vector<std::uint32_t> powers_;
};

}  // namespace

std::string to_string(const BAugTree& t) {
  std::string out;
  std::size_t pos = 0, leaf = 0;
  write_tree(out, t.shape, t.leaves, nullptr, pos, leaf);
  return out;
}

std::string to_string(const RBAugTree& t) {
  std::string out;
  std::size_t pos = 0, leaf = 0;
  write_tree(out, t.shape, t.leaves, &t.vertex_powers, pos, leaf);
  return out;
}

std::string to_string(const AugTree& t) {
  return std::visit([](const auto& x) { return to_string(x); }, t);
}

AugTree parse_aug_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace rbalg
