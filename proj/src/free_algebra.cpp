#include "rbalg/free_algebra.hpp"

#include <algorithm>
#include <deque>

namespace rbalg {

// ------------------------------------------------------------------ FreeTerm

FreeTerm::FreeTerm(RBAugTree t, std::vector<std::uint32_t> w) : tree(std::move(t)), word(std::move(w)) {
  if (word.size() != tree.leaf_count()) throw InvalidArity("word length does not match the leaf count");
}

std::string FreeTerm::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " x" : "x") + std::to_string(word[i]);
  return s + ")_" + rbalg::to_string(tree);
}

// --------------------------------------------------------------- FreeElement

FreeElement::FreeElement(Field field, std::size_t basis_size) : field_(std::move(field)), basis_size_(basis_size) {}

FreeElement FreeElement::term(const Field& field, std::size_t basis_size, const FreeTerm& t) {
  FreeElement e(field, basis_size);
  e.add(t, field.one());
  return e;
}

FreeElement FreeElement::generator(const Field& field, std::size_t basis_size, std::uint32_t index) {
  if (index >= basis_size) throw BasisMismatch("letter " + std::to_string(index) + " outside the basis");
  return term(field, basis_size, FreeTerm(RBAugTree::leaf(), {index}));
}

void FreeElement::add(const FreeTerm& t, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch("coefficient over another field");
  for (auto letter : t.word) {
    if (letter >= basis_size_) throw BasisMismatch("letter " + std::to_string(letter) + " outside the basis");
  }
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  Scalar s = it->second + c;
  if (s.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = s;
  }
}

void FreeElement::require_compatible(const FreeElement& o) const {
  if (field_ != o.field_) throw FieldMismatch("free elements over different fields");
  if (basis_size_ != o.basis_size_) throw BasisMismatch("free elements over different bases");
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  require_compatible(o);
  FreeElement r = *this;
  for (const auto& [t, c] : o.terms_) r.add(t, c);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  require_compatible(o);
  FreeElement r = *this;
  for (const auto& [t, c] : o.terms_) r.add(t, -c);
  return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  FreeElement r(field_, basis_size_);
  if (c.is_zero()) return r;
  for (const auto& [t, k] : terms_) r.terms_.emplace(t, k * c);
  return r;
}

bool FreeElement::equals(const FreeElement& o) const {
  require_compatible(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [t, c] : terms_) {
    if (!(t == it->first) || !c.equals(it->second)) return false;
    ++it;
  }
  return true;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    s += (first ? "" : " + ") + ("(" + c.to_string() + ")") + t.to_string();
    first = false;
  }
  return s;
}

FreeElement free_multiply(const FreeElement& x, const FreeElement& y) {
  if (x.field() != y.field()) throw FieldMismatch("free elements over different fields");
  if (x.basis_size() != y.basis_size()) throw BasisMismatch("free elements over different bases");
  FreeElement r(x.field(), x.basis_size());
  for (const auto& [t1, c1] : x.terms()) {
    for (const auto& [t2, c2] : y.terms()) {
      std::vector<std::uint32_t> w = t1.word;
      w.insert(w.end(), t2.word.begin(), t2.word.end());
      r.add(FreeTerm(graft(t1.tree, t2.tree), std::move(w)), c1 * c2);
    }
  }
  return r;
}

namespace {

template <class F>
FreeElement map_terms(const FreeElement& x, F f) {
  FreeElement r(x.field(), x.basis_size());
  for (const auto& [t, c] : x.terms()) r.add(FreeTerm(f(t.tree), t.word), c);
  return r;
}

}  // namespace

FreeElement free_alpha(const FreeElement& x) {
  return map_terms(x, [](const RBAugTree& t) { return tree_alpha(t); });
}

FreeElement free_beta(const FreeElement& x) {
  return map_terms(x, [](const RBAugTree& t) { return tree_beta(t); });
}

FreeElement free_R(const FreeElement& x) {
  return map_terms(x, [](const RBAugTree& t) { return tree_R(t); });
}

// --------------------------------------------------------------- tree action

namespace {

Vector power_apply(const LinearMap& f, std::uint32_t k, Vector v) {
  for (std::uint32_t i = 0; i < k; ++i) v = f.apply(v);
  return v;
}

void require_arity(std::size_t leaves, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a) {
  if (xs.size() != leaves) {
    throw InvalidArity("tree has " + std::to_string(leaves) + " leaves but " + std::to_string(xs.size()) +
                       " elements were given");
  }
  for (const auto& x : xs) {
    if (x.size() != a.dim()) throw DimensionMismatch("element does not live in the algebra");
  }
}

Vector eval_rec(const PlanarBinaryTree& shape, const std::vector<LeafPower>& leaves,
                const std::vector<std::uint32_t>* vp, std::size_t& pos, std::size_t& leaf,
                const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a, const LinearMap* r) {
  std::size_t here = pos++;
  std::uint32_t f = vp ? (*vp)[here] : 0;
  Vector v = [&] {
    if (shape.code()[here] == 0) {
      const LeafPower& p = leaves[leaf];
      Vector x = xs[leaf++];
      if (r) x = power_apply(*r, f, std::move(x));
      return power_apply(a.alpha, p.alpha, power_apply(a.beta, p.beta, std::move(x)));
    }
    Vector left = eval_rec(shape, leaves, vp, pos, leaf, xs, a, r);
    Vector right = eval_rec(shape, leaves, vp, pos, leaf, xs, a, r);
    Vector prod = a.mu.apply(left, right);
    return r ? power_apply(*r, f, std::move(prod)) : prod;
  }();
  return v;
}

}  // namespace

Vector action_eval(const BAugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a) {
  require_arity(t.leaf_count(), xs, a);
  std::size_t pos = 0, leaf = 0;
  return eval_rec(t.shape, t.leaves, nullptr, pos, leaf, xs, a, nullptr);
}

Vector action_eval(const RBAugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a,
                   const RBOperator& r) {
  require_arity(t.leaf_count(), xs, a);
  if (!r.map.is_square() || r.map.rows() != a.dim()) throw DimensionMismatch("R does not act on the algebra");
  std::size_t pos = 0, leaf = 0;
  return eval_rec(t.shape, t.leaves, &t.vertex_powers, pos, leaf, xs, a, &r.map);
}

Vector action_eval(const AugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a,
                   const RBOperator* r) {
  if (std::holds_alternative<RBAugTree>(t)) {
    if (!r) throw WrongAugmentation("an RB-augmented tree needs a Rota-Baxter operator");
    return action_eval(std::get<RBAugTree>(t), xs, a, *r);
  }
  if (r) throw WrongAugmentation("a B-augmented tree takes no Rota-Baxter operator");
  return action_eval(std::get<BAugTree>(t), xs, a);
}

Vector free_eval(const FreeElement& x, const std::vector<Vector>& letters, const BiHomAssociativeAlgebra& a,
                 const RBOperator& r) {
  if (letters.size() != x.basis_size()) throw BasisMismatch("one vector per basis letter is required");
  Vector sum(a.field(), a.dim());
  for (const auto& [t, c] : x.terms()) {
    std::vector<Vector> xs;
    for (auto letter : t.word) xs.push_back(letters[letter]);
    sum += action_eval(t.tree, xs, a, r).scaled(c);
  }
  return sum;
}

// ----------------------------------------------------------- truncated ideal

bool fits_bounds(const FreeTerm& t, const IdealBounds& b) {
  if (t.tree.leaf_count() > b.max_leaves) return false;
  for (const auto& p : t.tree.leaves) {
    if (p.alpha > b.max_ab_power || p.beta > b.max_ab_power) return false;
  }
  return std::all_of(t.tree.vertex_powers.begin(), t.tree.vertex_powers.end(),
                     [&](std::uint32_t f) { return f <= b.max_r_power; });
}

namespace {

bool fits_bounds(const FreeElement& x, const IdealBounds& b) {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& kv) { return fits_bounds(kv.first, b); });
}

std::size_t max_leaves(const FreeElement& x) {
  std::size_t m = 0;
  for (const auto& [t, c] : x.terms()) m = std::max(m, t.tree.leaf_count());
  return m;
}

// Advances a mixed-radix counter; false once it wraps around.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::vector<FreeTerm> window_terms(std::size_t basis_size, std::size_t n, const IdealBounds& bounds) {
  std::vector<FreeTerm> out;
  if (n == 0 || n > bounds.max_leaves || basis_size == 0) return out;
  for (const auto& shape : enumerate_trees(n)) {
    std::vector<std::uint32_t> ab(2 * n, 0);
    do {
      std::vector<LeafPower> leaves(n);
      for (std::size_t i = 0; i < n; ++i) leaves[i] = {ab[2 * i], ab[2 * i + 1]};
      std::vector<std::uint32_t> vp(shape.vertex_count(), 0);
      do {
        RBAugTree tree(shape, leaves, vp);
        std::vector<std::uint32_t> word(n, 0);
        do {
          out.emplace_back(tree, word);
        } while (advance(word, static_cast<std::uint32_t>(basis_size)));
      } while (advance(vp, bounds.max_r_power + 1));
    } while (advance(ab, bounds.max_ab_power + 1));
  }
  return out;
}

TruncatedIdeal::TruncatedIdeal(Field field, std::size_t basis_size, IdealBounds bounds)
    : field_(std::move(field)), basis_size_(basis_size), bounds_(bounds) {
  const std::size_t L = bounds_.max_leaves;
  std::vector<std::vector<FreeTerm>> by_leaves(L + 1);
  for (std::size_t k = 1; k <= L; ++k) by_leaves[k] = window_terms(basis_size_, k, bounds_);

  std::deque<FreeElement> work;
  auto push = [&](const FreeElement& g) {
    FreeElement reduced(field_, basis_size_);
    if (insert(g, &reduced)) work.push_back(std::move(reduced));
  };
  auto cat = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  };

  for (std::size_t ku = 1; ku <= L; ++ku) {
    for (std::size_t kv = 1; ku + kv < L; ++kv) {
      for (std::size_t kw = 1; ku + kv + kw <= L; ++kw) {
        for (const auto& u : by_leaves[ku]) {
          for (const auto& v : by_leaves[kv]) {
            for (const auto& w : by_leaves[kw]) {
              FreeTerm lhs(graft(graft(u.tree, v.tree), tree_beta(w.tree)), cat(cat(u.word, v.word), w.word));
              FreeTerm rhs(graft(tree_alpha(u.tree), graft(v.tree, w.tree)), cat(u.word, cat(v.word, w.word)));
              if (!fits_bounds(lhs, bounds_) || !fits_bounds(rhs, bounds_)) continue;
              FreeElement g(field_, basis_size_);
              g.add(lhs, field_.one());
              g.add(rhs, -field_.one());
              push(g);
            }
          }
        }
      }
    }
  }

  while (!work.empty()) {
    FreeElement g = std::move(work.front());
    work.pop_front();
    for (const auto& image : {free_alpha(g), free_beta(g)}) {
      if (fits_bounds(image, bounds_)) push(image);
    }
    std::size_t room = L - max_leaves(g);
    for (std::size_t k = 1; k <= room; ++k) {
      for (const auto& b : by_leaves[k]) {
        FreeElement bt = FreeElement::term(field_, basis_size_, b);
        push(free_multiply(bt, g));
        push(free_multiply(g, bt));
      }
    }
  }
}

FreeElement TruncatedIdeal::reduce_unchecked(FreeElement x) const {
  FreeElement result(field_, basis_size_);
  while (!x.is_zero()) {
    auto last = std::prev(x.terms().end());
    FreeTerm t = last->first;
    Scalar c = last->second;
    auto pivot = pivots_.find(t);
    if (pivot == pivots_.end()) {
      result.add(t, c);
      x.add(t, -c);
    } else {
      x = x - pivot->second.scaled(c);
    }
  }
  return result;
}

bool TruncatedIdeal::insert(FreeElement g, FreeElement* reduced) {
  FreeElement r = reduce_unchecked(std::move(g));
  if (r.is_zero()) return false;
  auto last = std::prev(r.terms().end());
  FreeTerm lead = last->first;
  r = r.scaled(last->second.inverse());
  pivots_.emplace(lead, r);
  *reduced = std::move(r);
  return true;
}

FreeElement TruncatedIdeal::reduce(const FreeElement& x) const {
  if (x.field() != field_) throw FieldMismatch("element over another field");
  if (x.basis_size() != basis_size_) throw BasisMismatch("element over another basis");
  for (const auto& [t, c] : x.terms()) {
    if (!fits_bounds(t, bounds_)) throw BoundsExceeded("term " + t.to_string() + " lies outside the truncation window");
  }
  return reduce_unchecked(x);
}

FreeElement truncated_ideal_reduce(const FreeElement& x, const IdealBounds& bounds) {
  for (const auto& [t, c] : x.terms()) {
    if (!fits_bounds(t, bounds)) throw BoundsExceeded("term " + t.to_string() + " lies outside the truncation window");
  }
  if (x.is_zero()) return x;
  return TruncatedIdeal(x.field(), x.basis_size(), bounds).reduce(x);
}

}  // namespace rbalg
