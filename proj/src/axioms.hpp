#pragma once

#include <string>
#include <vector>

#include "rbalg/check_report.hpp"

namespace rbalg::detail {

inline std::vector<Vector> basis_of(const Field& field, std::size_t n) {
  std::vector<Vector> b;
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(Vector::basis(field, n, i));
  return b;
}

// f∘g = g∘f, compared column by column.
inline void check_commute(CheckReport& r, const std::string& id, const LinearMap& f, const LinearMap& g) {
  LinearMap fg = f * g;
  LinearMap gf = g * f;
  for (std::size_t j = 0; j < fg.cols(); ++j) {
    Vector lhs = fg.column(j);
    Vector rhs = gf.column(j);
    if (!lhs.equals(rhs)) r.add_violation({id, {j}, std::move(lhs), std::move(rhs)});
  }
}

// f_out(op(e_i, e_j)) = op(f_left(e_i), f_right(e_j)).
inline void check_multiplicative(CheckReport& r, const std::string& id, const LinearMap& f_out,
                                 const LinearMap& f_left, const LinearMap& f_right, const StructureTable& op) {
  for (std::size_t i = 0; i < op.left_dim(); ++i) {
    Vector fi = f_left.column(i);
    for (std::size_t j = 0; j < op.right_dim(); ++j) {
      Vector lhs = f_out.apply(op.product(i, j));
      Vector rhs = op.apply(fi, f_right.column(j));
      if (!lhs.equals(rhs)) r.add_violation({id, {i, j}, std::move(lhs), std::move(rhs)});
    }
  }
}

inline void check_multiplicative(CheckReport& r, const std::string& id, const LinearMap& f, const StructureTable& op) {
  check_multiplicative(r, id, f, f, f, op);
}

// (x A y) B beta(z) = alpha(x) C (y D z) on all basis triples.
inline void check_identity(CheckReport& r, const std::string& id, const StructureTable& a, const StructureTable& b,
                           const StructureTable& c, const StructureTable& d, const LinearMap& alpha,
                           const LinearMap& beta) {
  std::vector<Vector> alpha_x, beta_z;
  for (std::size_t i = 0; i < alpha.cols(); ++i) alpha_x.push_back(alpha.column(i));
  for (std::size_t k = 0; k < beta.cols(); ++k) beta_z.push_back(beta.column(k));
  for (std::size_t i = 0; i < a.left_dim(); ++i) {
    for (std::size_t j = 0; j < a.right_dim(); ++j) {
      Vector xy = a.product(i, j);
      for (std::size_t k = 0; k < d.right_dim(); ++k) {
        Vector lhs = b.apply(xy, beta_z[k]);
        Vector rhs = c.apply(alpha_x[i], d.product(j, k));
        if (!lhs.equals(rhs)) r.add_violation({id, {i, j, k}, std::move(lhs), std::move(rhs)});
      }
    }
  }
}

}  // namespace rbalg::detail
