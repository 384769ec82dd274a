#include "rbalg/linalg.hpp"

namespace rbalg {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw DimensionMismatch(what); }

void require_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("operands over " + a.to_string() + " and " + b.to_string());
}

}  // namespace

// -------------------------------------------------------------------- Vector

Vector::Vector(Field field, std::size_t n) : field_(std::move(field)), coords_(n, field_.zero()) {}

Vector::Vector(Field field, std::vector<Scalar> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  for (const auto& c : coords_) require_field(field_, c.field());
}

Vector Vector::basis(const Field& field, std::size_t n, std::size_t i) {
  if (i >= n) mismatch("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  Vector v(field, n);
  v.coords_[i] = field.one();
  return v;
}

void Vector::set(std::size_t i, Scalar s) {
  require_field(field_, s.field());
  coords_.at(i) = std::move(s);
}

void Vector::require_conforming(const Vector& o) const {
  require_field(field_, o.field_);
  if (size() != o.size()) mismatch("vector lengths " + std::to_string(size()) + " and " + std::to_string(o.size()));
}

Vector Vector::operator+(const Vector& o) const {
  Vector r = *this;
  r += o;
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  require_conforming(o);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] = coords_[i] + o.coords_[i];
  }
  return *this;
}

Vector Vector::operator-(const Vector& o) const {
  require_conforming(o);
  Vector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

Vector Vector::operator-() const { return Vector(field_, size()) - *this; }

Vector Vector::scaled(const Scalar& c) const {
  require_field(field_, c.field());
  Vector r = *this;
  for (auto& x : r.coords_) x = x * c;
  return r;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Vector::equals(const Vector& o) const {
  require_conforming(o);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!coords_[i].equals(o.coords_[i])) return false;
  }
  return true;
}

std::string Vector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + "]";
}

// -------------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = field.one();
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) mismatch("column " + std::to_string(j) + " has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar s) {
  require_field(field_, s.field());
  if (i >= rows_ || j >= cols_) mismatch("matrix index out of range");
  data_[i * cols_ + j] = std::move(s);
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return Vector(field_, std::move(c));
}

Vector Matrix::apply(const Vector& v) const {
  require_field(field_, v.field());
  if (v.size() != cols_) mismatch("map with " + std::to_string(cols_) + " columns applied to vector of length " +
                                  std::to_string(v.size()));
  Vector r(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!at(i, j).is_zero()) r.set(i, r[i] + at(i, j) * v[j]);
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_field(field_, o.field_);
  if (cols_ != o.rows_) {
    mismatch("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols_) + " after " +
             std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        Scalar& slot = r.data_[i * o.cols_ + j];
        slot = slot + a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) mismatch("matrix sum of different shapes");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) mismatch("matrix difference of different shapes");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  require_field(field_, c.field());
  Matrix r = *this;
  for (auto& x : r.data_) x = x * c;
  return r;
}

namespace {

// Row-reduces `m` in place; returns the pivot columns. `aug` receives the same row operations.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& m, std::vector<std::vector<Scalar>>* aug) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    if (aug) std::swap((*aug)[p], (*aug)[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    if (aug) {
      for (auto& x : (*aug)[r]) x = x * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      if (aug) {
        for (std::size_t j = 0; j < (*aug)[i].size(); ++j) (*aug)[i][j] = (*aug)[i][j] - f * (*aug)[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t Matrix::rank() const {
  auto rows = rows_of(*this);
  return row_reduce(rows, nullptr).size();
}

Matrix Matrix::inverse() const {
  if (!is_square()) mismatch("inverse of a non-square matrix");
  auto rows = rows_of(*this);
  auto aug = rows_of(identity(field_, rows_));
  if (row_reduce(rows, &aug).size() != rows_) throw ZeroDivision("matrix is singular");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.data_[i * cols_ + j] = aug[i][j];
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::equals(const Matrix& o) const {
  require_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].equals(o.data_[i])) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
    s += "]\n";
  }
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a.field(), b.field());
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b.at(k, l).is_zero()) r.set(i * b.rows() + k, j * b.cols() + l, x * b.at(k, l));
        }
      }
    }
  }
  return r;
}

Vector kron(const Vector& u, const Vector& v) {
  require_field(u.field(), v.field());
  std::vector<Scalar> c;
  c.reserve(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) c.push_back(u[i] * v[j]);
  }
  return Vector(u.field(), std::move(c));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_field(a.field(), b.field());
  Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
  }
  return r;
}

TensorSquareMap::TensorSquareMap(std::size_t n, Matrix m) : base_dim(n), matrix(std::move(m)) {
  if (matrix.rows() != n * n || matrix.cols() != n * n) {
    mismatch("tensor-square map over dimension " + std::to_string(n) + " must be " + std::to_string(n * n) +
             "x" + std::to_string(n * n));
  }
}

TensorCubeMap::TensorCubeMap(std::size_t n, Matrix m) : base_dim(n), matrix(std::move(m)) {
  if (matrix.rows() != n * n * n || matrix.cols() != n * n * n) {
    mismatch("tensor-cube map over dimension " + std::to_string(n) + " must be " + std::to_string(n * n * n) +
             "x" + std::to_string(n * n * n));
  }
}

TensorSquareMap tensor2(const LinearMap& f, const LinearMap& g) {
  if (!f.is_square() || !g.is_square() || f.rows() != g.rows()) mismatch("tensor2 needs square maps of equal size");
  return TensorSquareMap(f.rows(), kron(f, g));
}

TensorCubeMap tensor3(const LinearMap& f, const LinearMap& g, const LinearMap& h) {
  if (!f.is_square() || !g.is_square() || !h.is_square() || f.rows() != g.rows() || g.rows() != h.rows()) {
    mismatch("tensor3 needs square maps of equal size");
  }
  return TensorCubeMap(f.rows(), kron(kron(f, g), h));
}

bool maps_commute(const LinearMap& f, const LinearMap& g) {
  if (!f.is_square() || !g.is_square() || f.rows() != g.rows()) mismatch("maps_commute needs square maps of equal size");
  return (f * g).equals(g * f);
}

// ------------------------------------------------------------ StructureTable

StructureTable::StructureTable(Field field, std::size_t n) : StructureTable(std::move(field), n, n, n) {}

StructureTable::StructureTable(Field field, std::size_t l, std::size_t r, std::size_t o)
    : field_(std::move(field)), left_(l), right_(r), out_(o), data_(l * r * o, field_.zero()) {}

StructureTable StructureTable::from_matrix(const Matrix& m, std::size_t l, std::size_t r) {
  if (m.cols() != l * r) mismatch("operation matrix must have " + std::to_string(l * r) + " columns");
  StructureTable t(m.field(), l, r, m.rows());
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < m.rows(); ++k) t.set(i, j, k, m.at(k, i * r + j));
    }
  }
  return t;
}

void StructureTable::set(std::size_t i, std::size_t j, std::size_t k, Scalar s) {
  require_field(field_, s.field());
  if (i >= left_ || j >= right_ || k >= out_) mismatch("structure-table index out of range");
  data_[(i * right_ + j) * out_ + k] = std::move(s);
}

void StructureTable::set_product(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != out_) mismatch("product vector has wrong length");
  for (std::size_t k = 0; k < out_; ++k) set(i, j, k, v[k]);
}

Vector StructureTable::product(std::size_t i, std::size_t j) const {
  std::vector<Scalar> c(data_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j) * out_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j + 1) * out_));
  return Vector(field_, std::move(c));
}

Vector StructureTable::apply(const Vector& u, const Vector& v) const {
  require_field(field_, u.field());
  require_field(field_, v.field());
  if (u.size() != left_ || v.size() != right_) {
    mismatch("operation on " + std::to_string(left_) + "x" + std::to_string(right_) + " applied to vectors of length " +
             std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  Vector r(field_, out_);
  std::vector<Scalar> acc(out_, field_.zero());
  for (std::size_t i = 0; i < left_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (v[j].is_zero()) continue;
      Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < out_; ++k) {
        const Scalar& c = at(i, j, k);
        if (!c.is_zero()) acc[k] = acc[k] + w * c;
      }
    }
  }
  return Vector(field_, std::move(acc));
}

Vector apply_bilinear(const StructureTable& op, const Vector& u, const Vector& v) { return op.apply(u, v); }

Matrix StructureTable::as_matrix() const {
  Matrix m(field_, out_, left_ * right_);
  for (std::size_t i = 0; i < left_; ++i) {
    for (std::size_t j = 0; j < right_; ++j) {
      for (std::size_t k = 0; k < out_; ++k) m.set(k, i * right_ + j, at(i, j, k));
    }
  }
  return m;
}

void StructureTable::require_conforming(const StructureTable& o) const {
  require_field(field_, o.field_);
  if (left_ != o.left_ || right_ != o.right_ || out_ != o.out_) mismatch("structure tables of different shapes");
}

StructureTable StructureTable::operator+(const StructureTable& o) const {
  require_conforming(o);
  StructureTable r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

StructureTable StructureTable::operator-(const StructureTable& o) const {
  require_conforming(o);
  StructureTable r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

StructureTable StructureTable::scaled(const Scalar& c) const {
  require_field(field_, c.field());
  StructureTable r = *this;
  for (auto& x : r.data_) x = x * c;
  return r;
}

StructureTable StructureTable::precompose(const LinearMap& f, const LinearMap& g) const {
  if (f.rows() != left_ || g.rows() != right_) mismatch("precompose: map targets do not match operand dimensions");
  StructureTable r(field_, f.cols(), g.cols(), out_);
  for (std::size_t i = 0; i < f.cols(); ++i) {
    Vector fi = f.column(i);
    for (std::size_t j = 0; j < g.cols(); ++j) r.set_product(i, j, apply(fi, g.column(j)));
  }
  return r;
}

StructureTable StructureTable::postcompose(const LinearMap& f) const {
  if (f.cols() != out_) mismatch("postcompose: map source does not match output dimension");
  StructureTable r(field_, left_, right_, f.rows());
  for (std::size_t i = 0; i < left_; ++i) {
    for (std::size_t j = 0; j < right_; ++j) r.set_product(i, j, f.apply(product(i, j)));
  }
  return r;
}

bool StructureTable::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool StructureTable::equals(const StructureTable& o) const {
  require_field(field_, o.field_);
  if (left_ != o.left_ || right_ != o.right_ || out_ != o.out_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].equals(o.data_[i])) return false;
  }
  return true;
}

StructureTable tensor_tables(const StructureTable& a, const StructureTable& b) {
  require_field(a.field(), b.field());
  const std::size_t al = a.left_dim(), ar = a.right_dim(), ao = a.out_dim();
  const std::size_t bl = b.left_dim(), br = b.right_dim(), bo = b.out_dim();
  StructureTable t(a.field(), al * bl, ar * br, ao * bo);
  for (std::size_t i1 = 0; i1 < al; ++i1) {
    for (std::size_t k1 = 0; k1 < bl; ++k1) {
      for (std::size_t i2 = 0; i2 < ar; ++i2) {
        for (std::size_t k2 = 0; k2 < br; ++k2) {
          Vector prod = kron(a.product(i1, i2), b.product(k1, k2));
          t.set_product(i1 * bl + k1, i2 * br + k2, prod);
        }
      }
    }
  }
  return t;
}

Vector map_scalars(const Vector& v, const Field& target, const std::function<Scalar(const Scalar&)>& f) {
  std::vector<Scalar> c;
  c.reserve(v.size());
  for (const auto& x : v.coords()) c.push_back(f(x));
  return Vector(target, std::move(c));
}

Matrix map_scalars(const Matrix& m, const Field& target, const std::function<Scalar(const Scalar&)>& f) {
  Matrix r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, f(m.at(i, j)));
  }
  return r;
}

StructureTable map_scalars(const StructureTable& t, const Field& target,
                           const std::function<Scalar(const Scalar&)>& f) {
  StructureTable r(target, t.left_dim(), t.right_dim(), t.out_dim());
  for (std::size_t i = 0; i < t.left_dim(); ++i) {
    for (std::size_t j = 0; j < t.right_dim(); ++j) {
      for (std::size_t k = 0; k < t.out_dim(); ++k) r.set(i, j, k, f(t.at(i, j, k)));
    }
  }
  return r;
}

}  // namespace rbalg
