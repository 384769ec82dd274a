#include "generators.hpp"

#include "rbalg/rota_baxter.hpp"

namespace rbalg::testing {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Matrix diagonal(const Field& f, const std::vector<Scalar>& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

Scalar power(const Scalar& c, int k) {
  Scalar r = c.field().one();
  for (int i = 0; i < k; ++i) r = r * c;
  return r;
}

// x / y, or nullopt when y = 0.
std::optional<Scalar> divide(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) return std::nullopt;
  return x / y;
}

}  // namespace

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.kind() == FieldSpec::Kind::prime) {
    return f.from_int(uniform(rng, 0, static_cast<long>(f.characteristic()) - 1));
  }
  return f.from_int(uniform(rng, -3, 3)) / f.from_int(uniform(rng, 1, 3));
}

Scalar random_nonzero(const Field& f, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
  }
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (m.rank() == n) return m;
  }
}

StructureTable random_table(const Field& f, std::size_t l, std::size_t r, std::size_t out, Rng& rng) {
  StructureTable t(f, l, r, out);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < out; ++k) t.set(i, j, k, random_scalar(f, rng));
    }
  }
  return t;
}

StructureTable transport(const StructureTable& op, const Matrix& g, const Matrix& g_inv) {
  return op.precompose(g, g).postcompose(g_inv);
}

Matrix transport(const Matrix& f, const Matrix& g, const Matrix& g_inv) { return g_inv * f * g; }

GradedSeed random_graded_seed(const Field& f, Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: {
      // u.v = w, v.u = q w.
      StructureTable mu(f, 3);
      mu.set(0, 1, 2, f.one());
      mu.set(1, 0, 2, random_scalar(f, rng));
      return {classical_algebra(mu), [f](const Scalar& c, const Scalar& d) { return diagonal(f, {c, d, c * d}); },
              [f](const Scalar& w, Rng& g) -> std::optional<Matrix> {
                Scalar ru = random_scalar(f, g), rv = random_scalar(f, g);
                std::optional<Scalar> rw = divide(ru * rv, ru + rv + w);
                if (!rw) {
                  if (!(ru * rv).is_zero()) return std::nullopt;
                  rw = random_scalar(f, g);
                }
                return diagonal(f, {ru, rv, *rw});
              }};
    }
    case 1:
    case 2: {
      // x^i x^j = x^(i+j) on x, ..., x^(k-1).
      const std::size_t dim = uniform(rng, 2, 3);
      StructureTable mu(f, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; i + j + 1 < dim; ++j) mu.set(i, j, i + j + 1, f.one());
      }
      return {classical_algebra(mu),
              [f, dim](const Scalar& c, const Scalar&) {
                std::vector<Scalar> d;
                for (std::size_t i = 1; i <= dim; ++i) d.push_back(power(c, static_cast<int>(i)));
                return diagonal(f, d);
              },
              [f, dim](const Scalar& w, Rng& g) -> std::optional<Matrix> {
                // r_i r_j = r_(i+j) (r_i + r_j + w) for i + j <= dim.
                Scalar r1 = random_scalar(f, g);
                std::optional<Scalar> r2 = divide(r1 * r1, r1 + r1 + w);
                if (!r2) return std::nullopt;
                std::vector<Scalar> d{r1, *r2};
                if (dim == 3) {
                  std::optional<Scalar> r3 = divide(r1 * *r2, r1 + *r2 + w);
                  if (!r3) return std::nullopt;
                  d.push_back(*r3);
                }
                return diagonal(f, d);
              }};
    }
    default: {
      const std::size_t dim = uniform(rng, 1, 2);
      return {classical_algebra(StructureTable(f, dim)),
              [f, dim](const Scalar& c, const Scalar& d) {
                return dim == 1 ? diagonal(f, {c}) : diagonal(f, {c, d});
              },
              [f, dim](const Scalar&, Rng& g) -> std::optional<Matrix> {
                std::vector<Scalar> d;
                for (std::size_t i = 0; i < dim; ++i) d.push_back(random_scalar(f, g));
                return diagonal(f, d);
              }};
    }
  }
}

BiHomAssociativeAlgebra random_two_parameter(const Field& f, Rng& rng) {
  return two_parameter_algebra(random_nonzero(f, rng), random_scalar(f, rng));
}

namespace {

Matrix power(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

BiHomDendriform dend_of(const BiHomTridendriform& t) { return {t.prec, t.succ, t.alpha, t.beta}; }

}  // namespace

TwistInstance random_twist_instance(const Field& f, Rng& rng) {
  for (;;) {
    GradedSeed seed = random_graded_seed(f, rng);
    const std::size_t n = seed.algebra.dim();
    Matrix phi1 = seed.endo(random_nonzero(f, rng), random_nonzero(f, rng));
    Matrix phi2 = seed.endo(random_nonzero(f, rng), random_nonzero(f, rng));
    Matrix at = seed.endo(random_scalar(f, rng), random_scalar(f, rng));
    Matrix bt = seed.endo(random_scalar(f, rng), random_scalar(f, rng));
    BiHomAssociativeAlgebra s = yau_twist(seed.algebra, phi1, phi2);
    auto r = seed.rb(f.zero(), rng);
    auto p = seed.rb(f.zero(), rng);
    Scalar w = random_scalar(f, rng);
    auto rw = seed.rb(w, rng);
    if (!r || !p || !rw || !maps_commute(*r, *p)) continue;

    BiHomAssociativeAlgebra assoc = s;
    BiHomTridendriform tridend = rb_derive(s, {*rw, w});
    Matrix assoc_at = at, assoc_bt = bt;
    if (uniform(rng, 0, 2) == 0) {
      // Non-graded alternative: the two-parameter algebra with its commuting maps.
      assoc = random_two_parameter(f, rng);
      const int i = static_cast<int>(uniform(rng, 0, 2)), j = static_cast<int>(uniform(rng, 0, 2));
      const int k = static_cast<int>(uniform(rng, 0, 2)), l = static_cast<int>(uniform(rng, 0, 2));
      assoc_at = power(assoc.alpha, i) * power(assoc.beta, j);
      assoc_bt = power(assoc.alpha, k) * power(assoc.beta, l);
    }
    BiHomDendriform dend = dend_of(rb_derive(s, {*r, f.zero()}));
    BiHomQuadri quadri = commuting_pair_quadri(s, {*r, f.zero()}, {*p, f.zero()});

    Matrix g = random_invertible(f, n, rng);
    Matrix gi = g.inverse();
    auto t = [&](const StructureTable& op) { return transport(op, g, gi); };
    auto m = [&](const Matrix& x) { return transport(x, g, gi); };
    Matrix ga = random_invertible(f, assoc.dim(), rng);
    Matrix gai = ga.inverse();
    return {{transport(assoc.mu, ga, gai), transport(assoc.alpha, ga, gai), transport(assoc.beta, ga, gai)},
            {t(dend.prec), t(dend.succ), m(dend.alpha), m(dend.beta)},
            {t(tridend.prec), t(tridend.succ), t(tridend.dot), m(tridend.alpha), m(tridend.beta)},
            {t(quadri.nw), t(quadri.sw), t(quadri.ne), t(quadri.se), m(quadri.alpha), m(quadri.beta)},
            m(at),
            m(bt),
            transport(assoc_at, ga, gai),
            transport(assoc_bt, ga, gai)};
  }
}

std::vector<BiHomAssociativeAlgebra> associative_tables(const Field& f, std::size_t n) {
  const std::uint64_t p = f.characteristic();
  const std::size_t entries = n * n * n;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) total *= p;
  std::vector<BiHomAssociativeAlgebra> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    StructureTable mu(f, n);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          mu.set(i, j, k, f.from_int(static_cast<long long>(rest % p)));
          rest /= p;
        }
      }
    }
    auto a = classical_algebra(mu);
    if (check_bihom_associative(a, 1).passed) out.push_back(std::move(a));
  }
  return out;
}

BiHomBimodule random_standard_bimodule(const BiHomAssociativeAlgebra& a, Rng& rng) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const StructureTable zero(f, n);
  BiHomBimodule m{a.mu, a.mu, a.alpha, a.beta};
  switch (uniform(rng, 0, 3)) {
    case 0: break;
    case 1: m.right_action = zero; break;
    case 2: m.left_action = zero; break;
    default: {
      m.left_action = zero;
      m.right_action = zero;
      // Any commuting pair works without actions.
      Scalar c = random_scalar(f, rng), d = random_scalar(f, rng);
      Matrix x = random_matrix(f, n, n, rng);
      m.alpha = x.scaled(c) + Matrix::identity(f, n).scaled(d);
      m.beta = x * x;
    }
  }
  Matrix g = random_invertible(f, n, rng);
  Matrix gi = g.inverse();
  Matrix id = Matrix::identity(f, n);
  return {m.left_action.precompose(id, g).postcompose(gi), m.right_action.precompose(g, id).postcompose(gi),
          gi * m.alpha * g, gi * m.beta * g};
}

namespace {

PlanarBinaryTree random_shape(std::size_t leaves, Rng& rng) {
  if (leaves == 1) return PlanarBinaryTree::leaf();
  const std::size_t p = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(leaves) - 1));
  return PlanarBinaryTree::graft(random_shape(p, rng), random_shape(leaves - p, rng));
}

std::vector<LeafPower> random_leaves(std::size_t n, std::uint32_t max_ab, Rng& rng) {
  std::vector<LeafPower> l(n);
  for (auto& x : l) {
    x.alpha = static_cast<std::uint32_t>(uniform(rng, 0, max_ab));
    x.beta = static_cast<std::uint32_t>(uniform(rng, 0, max_ab));
  }
  return l;
}

}  // namespace

RBAugTree random_rb_tree(std::size_t leaves, std::uint32_t max_ab, std::uint32_t max_r, Rng& rng) {
  PlanarBinaryTree shape = random_shape(leaves, rng);
  std::vector<std::uint32_t> v(shape.vertex_count());
  for (auto& x : v) x = static_cast<std::uint32_t>(uniform(rng, 0, max_r));
  return RBAugTree(shape, random_leaves(leaves, max_ab, rng), v);
}

BAugTree random_b_tree(std::size_t leaves, std::uint32_t max_ab, Rng& rng) {
  return BAugTree(random_shape(leaves, rng), random_leaves(leaves, max_ab, rng));
}

}  // namespace rbalg::testing
