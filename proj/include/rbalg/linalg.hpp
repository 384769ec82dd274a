#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rbalg/scalar.hpp"

namespace rbalg {

class Vector {
 public:
  Vector(Field field, std::size_t n);
  Vector(Field field, std::vector<Scalar> coords);
  static Vector basis(const Field& field, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, Scalar s);
  const std::vector<Scalar>& coords() const { return coords_; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector scaled(const Scalar& c) const;
  Vector& operator+=(const Vector& o);
  bool is_zero() const;
  bool equals(const Vector& o) const;
  bool operator==(const Vector& o) const { return equals(o); }
  bool operator!=(const Vector& o) const { return !equals(o); }
  std::string to_string() const;

 private:
  void require_conforming(const Vector& o) const;
  Field field_;
  std::vector<Scalar> coords_;
};

/// Dense rows x cols matrix; column j is the image of e_j.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar s);

  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;
  /// Composition: (*this)(o(x)).
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix inverse() const;
  std::size_t rank() const;
  bool is_zero() const;
  bool equals(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return equals(o); }
  bool operator!=(const Matrix& o) const { return !equals(o); }
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using LinearMap = Matrix;

/// Kronecker product; basis index of e_i (x) e_j is i * b.cols() + j.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& u, const Vector& v);
/// Block-diagonal map a (+) b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Map on A (x) A, lexicographic basis.
struct TensorSquareMap {
  std::size_t base_dim;
  Matrix matrix;
  TensorSquareMap(std::size_t base_dim, Matrix matrix);
  bool operator==(const TensorSquareMap& o) const { return base_dim == o.base_dim && matrix == o.matrix; }
};

/// Map on A (x) A (x) A, lexicographic basis.
struct TensorCubeMap {
  std::size_t base_dim;
  Matrix matrix;
  TensorCubeMap(std::size_t base_dim, Matrix matrix);
  bool operator==(const TensorCubeMap& o) const { return base_dim == o.base_dim && matrix == o.matrix; }
};

TensorSquareMap tensor2(const LinearMap& f, const LinearMap& g);
TensorCubeMap tensor3(const LinearMap& f, const LinearMap& g, const LinearMap& h);

bool maps_commute(const LinearMap& f, const LinearMap& g);

/// Bilinear operation L (x) R -> O by structure constants c(i, j, k):
/// (e_i, e_j) maps to sum_k c(i, j, k) e_k.
class StructureTable {
 public:
  StructureTable(Field field, std::size_t n);
  StructureTable(Field field, std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
  /// Reads an out x (left * right) matrix, column i * right + j = product of (e_i, e_j).
  static StructureTable from_matrix(const Matrix& m, std::size_t left_dim, std::size_t right_dim);

  const Field& field() const { return field_; }
  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }
  bool is_square() const { return left_ == out_ && right_ == out_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * right_ + j) * out_ + k]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar s);
  void set_product(std::size_t i, std::size_t j, const Vector& v);

  Vector product(std::size_t i, std::size_t j) const;
  Vector apply(const Vector& u, const Vector& v) const;
  Matrix as_matrix() const;

  StructureTable operator+(const StructureTable& o) const;
  StructureTable operator-(const StructureTable& o) const;
  StructureTable scaled(const Scalar& c) const;
  /// (x, y) maps to op(f(x), g(y)).
  StructureTable precompose(const LinearMap& f, const LinearMap& g) const;
  /// (x, y) maps to f(op(x, y)).
  StructureTable postcompose(const LinearMap& f) const;
  bool is_zero() const;
  bool equals(const StructureTable& o) const;
  bool operator==(const StructureTable& o) const { return equals(o); }
  bool operator!=(const StructureTable& o) const { return !equals(o); }

 private:
  void require_conforming(const StructureTable& o) const;
  Field field_;
  std::size_t left_;
  std::size_t right_;
  std::size_t out_;
  std::vector<Scalar> data_;
};

Vector apply_bilinear(const StructureTable& op, const Vector& u, const Vector& v);

/// Operation on A (x) B: (a1 (x) b1, a2 (x) b2) maps to op_a(a1, a2) (x) op_b(b1, b2).
StructureTable tensor_tables(const StructureTable& a, const StructureTable& b);

/// Entrywise field change of a whole object (see convert and evaluate in scalar.hpp).
Vector map_scalars(const Vector& v, const Field& target, const std::function<Scalar(const Scalar&)>& f);
Matrix map_scalars(const Matrix& m, const Field& target, const std::function<Scalar(const Scalar&)>& f);
StructureTable map_scalars(const StructureTable& t, const Field& target, const std::function<Scalar(const Scalar&)>& f);

}  // namespace rbalg
