#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbalg/rota_baxter.hpp"

namespace rbalg {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct SearchOptions {
  /// Unset means RBALG_SEARCH_BUDGET from the environment, else kDefaultSearchBudget.
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
};

struct SearchResult {
  /// Sorted by candidate index.
  std::vector<LinearMap> operators;
  Field field;
  std::size_t dim;
  std::optional<Scalar> weight;
  std::uint64_t examined = 0;
  std::uint64_t found = 0;
  /// Hits that passed the independent checker; equals `found` unless the kernel is wrong.
  std::uint64_t reverified = 0;
  double elapsed_ms = 0;
};

std::uint64_t effective_budget(const SearchOptions& opts);

/// The n x n matrix whose entry (i, j) is base-p digit i*n + j of `index`,
/// least significant digit first.
LinearMap candidate_matrix(const Field& field, std::size_t n, std::uint64_t index);

/// Every Rota-Baxter operator of the given weight on an algebra over F_p.
/// Throws InvalidField off prime fields and BudgetExceeded when p^(n^2) > budget.
SearchResult enumerate_rb(const BiHomAssociativeAlgebra& a, const Scalar& weight, const SearchOptions& opts = {});

/// Every one-sided Baxter operator of the given side on an algebra over F_p.
SearchResult enumerate_baxter(const BiHomAssociativeAlgebra& a, BaxterSide side, const SearchOptions& opts = {});

}  // namespace rbalg
