#pragma once

#include <map>
#include <vector>

#include "qct/bigint.hpp"
#include "qct/partition.hpp"

namespace qct {

inline constexpr long long kDefaultTermBudget = 5'000'000;

// Cumulative work cap shared across one logical computation.  Units are
// produced expansion terms (completed tableaux / monomials); an overrun
// raises BudgetExceeded.
class TermBudget {
 public:
  explicit TermBudget(long long limit) : limit_(limit) {}
  void charge(long long amount = 1);
  long long used() const { return used_; }

 private:
  long long limit_;
  long long used_ = 0;
};

// Homogeneous expansion in the Schur basis for GL(row_bound): every key has
// at most row_bound rows, no key carries multiplicity zero, and all keys
// share one size.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, BigInt>;

  SchurExpansion(int row_bound, TermMap terms);
  // The expansion of the empty product, {(): 1}.
  static SchurExpansion unit(int row_bound);

  int row_bound() const { return row_bound_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(const Partition& key) const;
  // Common size of all keys; zero for the unit expansion.
  long long degree() const;

 private:
  int row_bound_;
  TermMap terms_;
};

// Number of Littlewood-Richardson skew tableaux of shape lambda/mu and
// content nu (semistandard, reverse reading word is a lattice word).
// Zero when mu is not contained in lambda or the sizes do not add up.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Number of semistandard Young tableaux of shape lambda and the given
// content composition; zero on size mismatch.
BigInt kostka_number(const Partition& lambda, const std::vector<long long>& content);

// Expands (sum of terms) * s_factor via the LR rule, discarding partitions
// with more than row_bound rows.  An empty factor is the identity.
SchurExpansion schur_multiply(const SchurExpansion& current, const Partition& factor,
                              TermBudget* budget = nullptr);

// Partition lambda, ordered rectangles R_1..R_s, and the GL rank bounding
// row counts.  Validated at construction.
struct KostkaInstance {
  Partition lambda;
  std::vector<Partition> rectangles;
  int rank;

  KostkaInstance(Partition lambda_shape, std::vector<Partition> rectangle_seq, int gl_rank);
  // Necessary for a non-zero coefficient.
  bool sizes_match() const;
};

// Multiplicity of inst.lambda in the iterated Schur product of
// inst.rectangles at row bound inst.rank.  Zero on size mismatch without
// expanding anything.
BigInt parabolic_kostka(const KostkaInstance& inst,
                        long long term_budget = kDefaultTermBudget);

// Same multiplicity by a disjoint route: expand each rectangle factor as an
// explicit monomial sum over semistandard tableaux in rank variables,
// multiply the polynomials, then extract the coefficient as the alternating
// sum over the symmetric group of the exponents w(lambda+rho)-rho.
BigInt tensor_mult_oracle(const KostkaInstance& inst,
                          long long term_budget = kDefaultTermBudget);

}  // namespace qct
