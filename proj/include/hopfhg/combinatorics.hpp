#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfhg/polynomial.hpp"
#include "hopfhg/rational.hpp"

namespace hopfhg {

/// Bernoulli number B_j with B_1 = -1/2. Thread-safe, cached.
Rational bernoulli(unsigned j);

/// Number of surjections from an m-set onto an n-set.
Integer surjection_count(unsigned n, unsigned m);

/// sum_{k=0}^{n} (-1)^{n-k} C(n,k) p(k); zero for n < 0.
Rational alternating_binomial_sum(long n, const Polynomial& p);

/// Finite sequence of nonnegative exponents p_1..p_t. Zero parts are allowed:
/// the invariant's closed formula produces them.
class IntComposition {
 public:
  IntComposition() = default;
  /// Throws std::invalid_argument on a negative part.
  explicit IntComposition(std::vector<long> parts);
  IntComposition(std::initializer_list<long> parts) : IntComposition(std::vector<long>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// d_k = p_1 + ... + p_k + k, for 0 <= k <= length (d_0 = 0).
  unsigned partial_degree(std::size_t k) const;
  /// d_t.
  unsigned degree() const { return partial_degree(parts_.size()); }

  std::string to_string() const;

  friend auto operator<=>(const IntComposition&, const IntComposition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// sum_{k=0}^{n-1} k^m as a polynomial in n (0^0 = 1).
Polynomial power_sum_polynomial(unsigned m);

/// F_p(n) = sum over 0 <= k_1 < ... < k_t <= n-1 of k_1^{p_1} ... k_t^{p_t},
/// as an exact polynomial in n. Built by the Faulhaber recursion
/// F_{p,q}(n) = sum_{k<n} k^q F_p(k). F of the empty sequence is 1.
Polynomial f_polynomial(const IntComposition& p);

/// Coefficient of n^{d_t - i} in F_p via the nested Bernoulli sum
/// (0 <= i < d_t). Independent of f_polynomial's recursion.
Rational f_coefficient_closed_form(const IntComposition& p, unsigned i);

/// F_p assembled coefficient by coefficient from f_coefficient_closed_form.
Polynomial f_polynomial_closed_form(const IntComposition& p);

/// Direct nested-sum evaluation of F_p(n).
Integer f_eval_bruteforce(const IntComposition& p, unsigned n);

/// Every q that p refines: each part of q sums a contiguous run of p.
/// One entry per grouping of consecutive parts, in ascending order:
/// 2^{t-1} entries for t >= 1, {()} for t = 0. With zero parts two groupings
/// can produce the same sequence; both are kept.
std::vector<IntComposition> coarsenings(const IntComposition& p);

/// F_p(-n) == (-1)^{d_t} sum_{p refines q} F_q(n+1).
bool f_reciprocity_check(const IntComposition& p, unsigned n);

}  // namespace hopfhg
