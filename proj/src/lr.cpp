// Littlewood-Richardson machinery built on one primitive: adding the values
// of a content vector to an inner shape, one value at a time, each as a
// horizontal strip.  Chains of horizontal strips are exactly the
// semistandard fillings; with the lattice bookkeeping below they are exactly
// the LR fillings, because the reverse reading word is a lattice word iff
// for every value v and row r the cells of value v in rows 1..r never
// outnumber the cells of value v-1 in rows 1..r-1.

#include "qct/lr.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qct/errors.hpp"

namespace qct {

namespace {

constexpr long long kNoCap = std::numeric_limits<long long>::max() / 4;

// Depth-first generator over strip chains.  `outer`, when set, confines the
// growing shape cell-wise; `lattice` switches the LR prefix constraint on.
// Emits the final shape (padded with zeros) once per completed filling.
template <typename Emit>
class StripFiller {
 public:
  StripFiller(const Partition& inner, const std::vector<long long>& content,
              long long row_bound, const Partition* outer, bool lattice, Emit& emit)
      : content_(content), outer_(outer), lattice_(lattice), emit_(emit), rows_(row_bound) {
    feasible_ = static_cast<long long>(inner.length()) <= rows_;
    shape_.assign(static_cast<std::size_t>(rows_), 0);
    for (std::size_t i = 0; i < inner.length() && feasible_; ++i) shape_[i] = inner.part(i);
    prevcum_.assign(static_cast<std::size_t>(rows_) + 1, 0);
  }

  void run() {
    if (feasible_) place_value(0);
  }

 private:
  void place_value(std::size_t v) {
    if (v == content_.size()) {
      emit_(shape_);
      return;
    }
    const long long quota = content_[v];
    if (quota == 0) {
      std::vector<long long> none(static_cast<std::size_t>(rows_) + 1, 0);
      std::swap(prevcum_, none);
      place_value(v + 1);
      std::swap(prevcum_, none);
      return;
    }

    // Row capacities for this value: cells in row i need a filled cell above
    // (row 0 is uncapped), and must stay inside `outer` when present.
    std::vector<long long> base = shape_;
    std::vector<long long> cap(static_cast<std::size_t>(rows_), 0);
    std::vector<long long> free_suffix(static_cast<std::size_t>(rows_) + 1, 0);
    for (long long i = rows_ - 1; i >= 0; --i) {
      long long upper = (i == 0) ? kNoCap : base[static_cast<std::size_t>(i - 1)];
      if (outer_) upper = std::min(upper, outer_->part(static_cast<std::size_t>(i)));
      cap[static_cast<std::size_t>(i)] =
          std::max(0LL, upper - base[static_cast<std::size_t>(i)]);
      free_suffix[static_cast<std::size_t>(i)] = std::min(
          kNoCap, free_suffix[static_cast<std::size_t>(i + 1)] + cap[static_cast<std::size_t>(i)]);
    }

    std::vector<long long> newcum(static_cast<std::size_t>(rows_) + 1, 0);
    place_rows(v, 0, quota, lattice_ && v > 0, base, cap, free_suffix, newcum);
  }

  void place_rows(std::size_t v, long long i, long long remaining, bool constrained,
                  const std::vector<long long>& base, const std::vector<long long>& cap,
                  const std::vector<long long>& free_suffix, std::vector<long long>& newcum) {
    if (remaining == 0) {
      for (long long j = i; j < rows_; ++j)
        newcum[static_cast<std::size_t>(j + 1)] = newcum[static_cast<std::size_t>(j)];
      std::swap(prevcum_, newcum);
      place_value(v + 1);
      std::swap(prevcum_, newcum);
      return;
    }
    if (i == rows_ || remaining > free_suffix[static_cast<std::size_t>(i)]) return;

    long long hi = std::min(cap[static_cast<std::size_t>(i)], remaining);
    if (constrained)
      hi = std::min(hi, prevcum_[static_cast<std::size_t>(i)] - newcum[static_cast<std::size_t>(i)]);
    for (long long c = 0; c <= hi; ++c) {
      shape_[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)] + c;
      newcum[static_cast<std::size_t>(i + 1)] = newcum[static_cast<std::size_t>(i)] + c;
      place_rows(v, i + 1, remaining - c, constrained, base, cap, free_suffix, newcum);
    }
    shape_[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
  }

  const std::vector<long long>& content_;
  const Partition* outer_;
  bool lattice_;
  Emit& emit_;
  long long rows_;
  bool feasible_;
  std::vector<long long> shape_;
  std::vector<long long> prevcum_;  // previous value's cells in rows 0..r-1
};

template <typename Emit>
void for_each_strip_chain(const Partition& inner, const std::vector<long long>& content,
                          long long row_bound, const Partition* outer, bool lattice,
                          Emit emit) {
  StripFiller<Emit> filler(inner, content, row_bound, outer, lattice, emit);
  filler.run();
}

}  // namespace

void TermBudget::charge(long long amount) {
  used_ += amount;
  if (used_ > limit_)
    throw BudgetExceeded("term budget exceeded (limit " + std::to_string(limit_) + ")");
}

SchurExpansion::SchurExpansion(int row_bound, TermMap terms)
    : row_bound_(row_bound), terms_(std::move(terms)) {
  if (row_bound_ < 1) throw std::invalid_argument("row bound must be positive");
  long long common_size = -1;
  for (const auto& [key, mult] : terms_) {
    if (static_cast<long long>(key.length()) > row_bound_)
      throw std::invalid_argument("expansion key exceeds the row bound");
    if (mult <= 0) throw std::invalid_argument("expansion multiplicities must be positive");
    if (common_size < 0)
      common_size = key.size();
    else if (key.size() != common_size)
      throw std::invalid_argument("expansion keys must share one size");
  }
}

SchurExpansion SchurExpansion::unit(int row_bound) {
  TermMap terms;
  terms.emplace(Partition{}, 1);
  return SchurExpansion(row_bound, std::move(terms));
}

BigInt SchurExpansion::coefficient(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

long long SchurExpansion::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu)) return 0;
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (nu.empty()) return 1;  // equal sizes force lambda == mu
  BigInt count = 0;
  for_each_strip_chain(mu, nu.parts(), static_cast<long long>(lambda.length()), &lambda,
                       /*lattice=*/true,
                       [&](const std::vector<long long>&) { ++count; });
  return count;
}

BigInt kostka_number(const Partition& lambda, const std::vector<long long>& content) {
  long long total = 0;
  for (long long c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be non-negative");
    total += c;
  }
  if (total != lambda.size()) return 0;
  BigInt count = 0;
  for_each_strip_chain(Partition{}, content, static_cast<long long>(lambda.length()), &lambda,
                       /*lattice=*/false,
                       [&](const std::vector<long long>&) { ++count; });
  return count;
}

SchurExpansion schur_multiply(const SchurExpansion& current, const Partition& factor,
                              TermBudget* budget) {
  if (static_cast<long long>(factor.length()) > current.row_bound())
    throw std::invalid_argument("factor has more rows than the expansion's row bound");
  if (factor.empty()) return current;

  SchurExpansion::TermMap result;
  for (const auto& [mu, mult] : current.terms()) {
    for_each_strip_chain(mu, factor.parts(), current.row_bound(), nullptr, /*lattice=*/true,
                         [&](const std::vector<long long>& shape) {
                           if (budget) budget->charge();
                           result[Partition(shape)] += mult;
                         });
  }
  return SchurExpansion(current.row_bound(), std::move(result));
}

KostkaInstance::KostkaInstance(Partition lambda_shape, std::vector<Partition> rectangle_seq,
                               int gl_rank)
    : lambda(std::move(lambda_shape)), rectangles(std::move(rectangle_seq)), rank(gl_rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<long long>(lambda.length()) > rank)
    throw std::invalid_argument("lambda has more rows than the rank");
  for (const Partition& rect : rectangles) {
    if (!rect.is_rectangular())
      throw std::invalid_argument("sequence entry is not rectangular: " + rect.to_string());
    if (static_cast<long long>(rect.length()) > rank)
      throw std::invalid_argument("rectangle is taller than the rank");
  }
}

bool KostkaInstance::sizes_match() const {
  long long total = 0;
  for (const Partition& rect : rectangles) total += rect.size();
  return total == lambda.size();
}

BigInt parabolic_kostka(const KostkaInstance& inst, long long term_budget) {
  if (!inst.sizes_match()) return 0;
  TermBudget budget(term_budget);
  SchurExpansion acc = SchurExpansion::unit(inst.rank);
  for (const Partition& rect : inst.rectangles) {
    if (rect.empty()) continue;
    acc = schur_multiply(acc, rect, &budget);
    // A term outside the target can never shrink back into it: later factors
    // only add cells.  Dropping such terms is exact.
    SchurExpansion::TermMap inside;
    for (const auto& [key, mult] : acc.terms())
      if (inst.lambda.contains(key)) inside.emplace(key, mult);
    if (inside.empty()) return 0;
    acc = SchurExpansion(inst.rank, std::move(inside));
  }
  return acc.coefficient(inst.lambda);
}

namespace {

using Monomial = std::vector<long long>;
using Polynomial = std::map<Monomial, BigInt>;

// Cell-by-cell semistandard fillings of `shape` with entries in 1..rank,
// reported as content exponent vectors.  Deliberately not the strip
// generator above; this is the independent route.
template <typename Fn>
void for_each_ssyt_content(const Partition& shape, int rank, Fn&& fn) {
  const long long rows = static_cast<long long>(shape.length());
  if (rows > rank) return;
  if (rows == 0) {
    std::vector<long long> zero(static_cast<std::size_t>(rank), 0);
    fn(zero);
    return;
  }
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  for (long long r = 0; r < rows; ++r)
    grid[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(shape.part(static_cast<std::size_t>(r))), 0);
  std::vector<long long> content(static_cast<std::size_t>(rank), 0);

  auto rec = [&](auto&& self, long long r, long long c) -> void {
    if (r == rows) {
      fn(content);
      return;
    }
    long long next_r = r, next_c = c + 1;
    if (next_c == shape.part(static_cast<std::size_t>(r))) {
      next_r = r + 1;
      next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c < shape.part(static_cast<std::size_t>(r - 1)))
      lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= rank; ++v) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, next_r, next_c);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0, 0);
}

Polynomial schur_polynomial(const Partition& shape, int rank, TermBudget& budget) {
  Polynomial poly;
  for_each_ssyt_content(shape, rank, [&](const std::vector<long long>& content) {
    budget.charge();
    poly[content] += 1;
  });
  return poly;
}

Polynomial multiply(const Polynomial& lhs, const Polynomial& rhs, int rank, TermBudget& budget) {
  Polynomial out;
  Monomial expo(static_cast<std::size_t>(rank), 0);
  for (const auto& [e1, c1] : lhs) {
    for (const auto& [e2, c2] : rhs) {
      for (std::size_t k = 0; k < expo.size(); ++k) expo[k] = e1[k] + e2[k];
      budget.charge();
      out[expo] += c1 * c2;
    }
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

BigInt tensor_mult_oracle(const KostkaInstance& inst, long long term_budget) {
  if (!inst.sizes_match()) return 0;
  TermBudget budget(term_budget);
  const int rank = inst.rank;

  Polynomial product;
  product.emplace(Monomial(static_cast<std::size_t>(rank), 0), 1);
  for (const Partition& rect : inst.rectangles) {
    if (rect.empty()) continue;
    product = multiply(product, schur_polynomial(rect, rank, budget), rank, budget);
  }

  // rho = (rank-1, ..., 1, 0); the multiplicity of s_lambda is
  // sum over w in S_rank of sgn(w) * [x^(w(lambda+rho)-rho)] product.
  std::vector<long long> staircase(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k)
    staircase[static_cast<std::size_t>(k)] = inst.lambda.part(static_cast<std::size_t>(k)) + (rank - 1 - k);

  std::vector<int> perm(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) perm[static_cast<std::size_t>(k)] = k;

  BigInt total = 0;
  Monomial expo(static_cast<std::size_t>(rank), 0);
  do {
    bool valid = true;
    for (int k = 0; k < rank && valid; ++k) {
      expo[static_cast<std::size_t>(k)] =
          staircase[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] - (rank - 1 - k);
      if (expo[static_cast<std::size_t>(k)] < 0) valid = false;
    }
    if (!valid) continue;
    auto it = product.find(expo);
    if (it == product.end()) continue;
    total += permutation_sign(perm) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (total < 0) throw std::logic_error("alternating sum produced a negative multiplicity");
  return total;
}

}  // namespace qct
