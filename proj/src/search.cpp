#include "rbalg/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

namespace rbalg {

std::uint64_t effective_budget(const SearchOptions& opts) {
  if (opts.budget) return *opts.budget;
  if (const char* env = std::getenv("RBALG_SEARCH_BUDGET")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw BudgetExceeded(std::string("RBALG_SEARCH_BUDGET is not a non-negative integer: ") + env);
  }
  return kDefaultSearchBudget;
}

LinearMap candidate_matrix(const Field& field, std::size_t n, std::uint64_t index) {
  const std::uint64_t p = field.characteristic();
  LinearMap m(field, n, n);
  for (std::size_t e = 0; e < n * n; ++e) {
    m.set(e / n, e % n, field.from_int(static_cast<long long>(index % p)));
    index /= p;
  }
  return m;
}

namespace {

// Structure constants and kernels over F_p with residues in [0, p).
class ModularKernel {
 public:
  ModularKernel(const BiHomAssociativeAlgebra& a) : n_(a.dim()), p_(a.field().characteristic()), c_(n_ * n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) c_[(i * n_ + j) * n_ + k] = a.mu.at(i, j, k).residue();
      }
    }
  }

  // r[k * n + i] is coordinate k of R(e_i).
  void decode(std::uint64_t index, std::vector<std::uint64_t>& r) const {
    for (auto& x : r) {
      x = index % p_;
      index /= p_;
    }
  }

  // u, v coordinate vectors; out = mu(u, v).
  void mul(const std::uint64_t* u, const std::uint64_t* v, std::uint64_t* out) const {
    for (std::size_t k = 0; k < n_; ++k) out[k] = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t uv = u[i] * v[j] % p_;
        if (!uv) continue;
        const std::uint64_t* c = &c_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k) out[k] = (out[k] + uv * c[k]) % p_;
      }
    }
  }

  void apply(const std::vector<std::uint64_t>& r, const std::uint64_t* v, std::uint64_t* out) const {
    for (std::size_t k = 0; k < n_; ++k) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < n_; ++i) s = (s + r[k * n_ + i] * v[i]) % p_;
      out[k] = s;
    }
  }

  void column(const std::vector<std::uint64_t>& r, std::size_t i, std::uint64_t* out) const {
    for (std::size_t k = 0; k < n_; ++k) out[k] = r[k * n_ + i];
  }

  bool is_rb(const std::vector<std::uint64_t>& r, std::uint64_t w, std::vector<std::uint64_t>& s) const {
    std::uint64_t *ri = &s[0], *rj = ri + n_, *ei = rj + n_, *ej = ei + n_, *lhs = ej + n_, *t1 = lhs + n_,
                  *t2 = t1 + n_, *t3 = t2 + n_, *rhs = t3 + n_;
    for (std::size_t i = 0; i < n_; ++i) {
      column(r, i, ri);
      unit(ei, i);
      for (std::size_t j = 0; j < n_; ++j) {
        column(r, j, rj);
        unit(ej, j);
        mul(ri, rj, lhs);
        mul(ri, ej, t1);
        mul(ei, rj, t2);
        mul(ei, ej, t3);
        for (std::size_t k = 0; k < n_; ++k) t1[k] = (t1[k] + t2[k] + w * t3[k]) % p_;
        apply(r, t1, rhs);
        if (!std::equal(lhs, lhs + n_, rhs)) return false;
      }
    }
    return true;
  }

  bool is_baxter(const std::vector<std::uint64_t>& r, BaxterSide side, std::vector<std::uint64_t>& s) const {
    std::uint64_t *ri = &s[0], *rj = ri + n_, *ei = rj + n_, *ej = ei + n_, *lhs = ej + n_, *t1 = lhs + n_,
                  *rhs = t1 + n_;
    for (std::size_t i = 0; i < n_; ++i) {
      column(r, i, ri);
      unit(ei, i);
      for (std::size_t j = 0; j < n_; ++j) {
        column(r, j, rj);
        unit(ej, j);
        mul(ri, rj, lhs);
        if (side == BaxterSide::right) {
          mul(ri, ej, t1);
        } else {
          mul(ei, rj, t1);
        }
        apply(r, t1, rhs);
        if (!std::equal(lhs, lhs + n_, rhs)) return false;
      }
    }
    return true;
  }

  std::size_t scratch_size() const { return 9 * n_; }

 private:
  void unit(std::uint64_t* v, std::size_t i) const {
    for (std::size_t k = 0; k < n_; ++k) v[k] = (k == i);
  }
  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t candidate_count(std::uint64_t p, std::size_t entries, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) {
    if (total > budget / p) {
      throw BudgetExceeded("p^(n^2) = " + std::to_string(p) + "^" + std::to_string(entries) + " exceeds the budget " +
                           std::to_string(budget));
    }
    total *= p;
  }
  if (total > budget) throw BudgetExceeded("candidate count exceeds the budget " + std::to_string(budget));
  return total;
}

template <class Pred, class Verify>
SearchResult run_search(const BiHomAssociativeAlgebra& a, const SearchOptions& opts, Pred pred, Verify verify) {
  auto start = std::chrono::steady_clock::now();
  const Field& f = a.field();
  if (f.kind() != FieldSpec::Kind::prime) throw InvalidField("enumeration needs a prime field, got " + f.to_string());
  const std::size_t n = a.dim();
  const std::uint64_t total = candidate_count(f.characteristic(), n * n, effective_budget(opts));
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
  ModularKernel kernel(a);

  std::vector<std::vector<std::uint64_t>> hits(jobs);
  auto work = [&](unsigned job) {
    const std::uint64_t begin = total * job / jobs, end = total * (job + 1) / jobs;
    std::vector<std::uint64_t> r(n * n), scratch(kernel.scratch_size());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      kernel.decode(idx, r);
      if (pred(kernel, r, scratch)) hits[job].push_back(idx);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  std::vector<std::uint64_t> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());

  SearchResult res{{}, f, n, std::nullopt};
  res.examined = total;
  res.found = all.size();
  for (auto idx : all) {
    LinearMap m = candidate_matrix(f, n, idx);
    if (verify(m)) {
      ++res.reverified;
      res.operators.push_back(std::move(m));
    }
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

SearchResult enumerate_rb(const BiHomAssociativeAlgebra& a, const Scalar& weight, const SearchOptions& opts) {
  if (weight.field() != a.field()) throw FieldMismatch("weight over another field");
  const std::uint64_t w = a.field().kind() == FieldSpec::Kind::prime ? weight.residue() : 0;
  auto res = run_search(
      a, opts,
      [w](const ModularKernel& k, const std::vector<std::uint64_t>& r, std::vector<std::uint64_t>& s) {
        return k.is_rb(r, w, s);
      },
      [&](const LinearMap& m) { return check_rota_baxter(a, {m, weight}, 1).passed; });
  res.weight = weight;
  return res;
}

SearchResult enumerate_baxter(const BiHomAssociativeAlgebra& a, BaxterSide side, const SearchOptions& opts) {
  return run_search(
      a, opts,
      [side](const ModularKernel& k, const std::vector<std::uint64_t>& r, std::vector<std::uint64_t>& s) {
        return k.is_baxter(r, side, s);
      },
      [&](const LinearMap& m) { return check_one_sided_baxter(a, {m, side}, 1).passed; });
}

}  // namespace rbalg
