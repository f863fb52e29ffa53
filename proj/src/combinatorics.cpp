#include "hopfhg/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hopfhg {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

std::mutex f_mutex;
std::map<IntComposition, Polynomial> f_cache;

// sum over k_{depth} in [lower, n-1] of k^{p[depth]} * (sum over the rest).
Integer f_brute_rec(const std::vector<unsigned>& parts, std::size_t depth, unsigned lower, unsigned n) {
  if (depth == parts.size()) return 1;
  Integer total = 0;
  for (unsigned k = lower; k < n; ++k) {
    total += ipow(Integer(k), parts[depth]) * f_brute_rec(parts, depth + 1, k + 1, n);
  }
  return total;
}

}  // namespace

Rational bernoulli(unsigned j) {
  std::lock_guard lock(bernoulli_mutex);
  // Recurrence: sum_{i=0}^{m} C(m+1, i) B_i = 0, which already yields B_1 = -1/2.
  for (unsigned m = static_cast<unsigned>(bernoulli_cache.size()); m <= j; ++m) {
    Rational acc = 0;
    for (unsigned i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * bernoulli_cache[i];
    bernoulli_cache.push_back(-acc / Rational(m + 1));
    bernoulli_cache.back().canonicalize();
  }
  return bernoulli_cache[j];
}

Integer surjection_count(unsigned n, unsigned m) {
  Integer total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    total += sign_power(n - k) * binomial(n, k) * ipow(Integer(k), m);
  }
  return total;
}

Rational alternating_binomial_sum(long n, const Polynomial& p) {
  Rational total = 0;
  for (long k = 0; k <= n; ++k) total += sign_power(n - k) * Rational(binomial(n, k)) * p(k);
  return total;
}

IntComposition::IntComposition(std::vector<long> parts) {
  parts_.reserve(parts.size());
  for (long x : parts) {
    if (x < 0) throw std::invalid_argument("IntComposition: negative part " + std::to_string(x));
    parts_.push_back(static_cast<unsigned>(x));
  }
}

unsigned IntComposition::partial_degree(std::size_t k) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < k; ++i) d += parts_[i] + 1;
  return d;
}

std::string IntComposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Polynomial power_sum_polynomial(unsigned m) {
  std::vector<Rational> coeffs(m + 2);
  for (unsigned i = 0; i <= m; ++i) {
    coeffs[m + 1 - i] = Rational(binomial(m + 1, i)) * bernoulli(i) / Rational(m + 1);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial f_polynomial(const IntComposition& p) {
  {
    std::lock_guard lock(f_mutex);
    if (auto it = f_cache.find(p); it != f_cache.end()) return it->second;
  }
  Polynomial acc = Polynomial::constant(1);
  for (unsigned q : p.parts()) {
    Polynomial next;
    const auto& c = acc.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] != 0) next += power_sum_polynomial(static_cast<unsigned>(e) + q) * c[e];
    }
    acc = std::move(next);
  }
  std::lock_guard lock(f_mutex);
  f_cache.emplace(p, acc);
  return acc;
}

Rational f_coefficient_closed_form(const IntComposition& p, unsigned i) {
  const std::size_t t = p.length();
  if (t == 0) return i == 0 ? Rational(1) : Rational(0);
  if (i >= p.degree()) return 0;
  // level[j] holds the nested sum with j_k = j; level 0 is the j_0 = 0 seed.
  std::vector<Rational> level{Rational(1)};
  for (std::size_t k = 1; k <= t; ++k) {
    const unsigned dk = p.partial_degree(k);
    const unsigned bound = (k == t) ? i : dk - 1;
    std::vector<Rational> next(bound + 1);
    for (unsigned j = 0; j <= bound; ++j) {
      for (unsigned prev = 0; prev < level.size() && prev <= j; ++prev) {
        if (level[prev] == 0) continue;
        next[j] += level[prev] * Rational(binomial(dk - prev, j - prev)) * bernoulli(j - prev) /
                   Rational(dk - prev);
      }
    }
    level = std::move(next);
  }
  return level[i];
}

Polynomial f_polynomial_closed_form(const IntComposition& p) {
  if (p.empty()) return Polynomial::constant(1);
  const unsigned d = p.degree();
  std::vector<Rational> coeffs(d + 1);
  for (unsigned i = 0; i < d; ++i) coeffs[d - i] = f_coefficient_closed_form(p, i);
  return Polynomial(std::move(coeffs));
}

Integer f_eval_bruteforce(const IntComposition& p, unsigned n) {
  return f_brute_rec(p.parts(), 0, 0, n);
}

std::vector<IntComposition> coarsenings(const IntComposition& p) {
  const auto& parts = p.parts();
  if (parts.empty()) return {IntComposition{}};
  const std::size_t gaps = parts.size() - 1;
  std::vector<IntComposition> out;
  out.reserve(std::size_t{1} << gaps);
  // Bit g of `cuts` set means a block boundary after part g.
  for (std::size_t cuts = 0; cuts < (std::size_t{1} << gaps); ++cuts) {
    std::vector<long> merged;
    long run = 0;
    for (std::size_t g = 0; g < parts.size(); ++g) {
      run += parts[g];
      if (g == gaps || (cuts >> g & 1U)) {
        merged.push_back(run);
        run = 0;
      }
    }
    out.emplace_back(std::move(merged));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool f_reciprocity_check(const IntComposition& p, unsigned n) {
  const Rational lhs = f_polynomial(p)(-static_cast<long>(n));
  Rational rhs = 0;
  for (const auto& q : coarsenings(p)) rhs += f_polynomial(q)(static_cast<long>(n) + 1);
  rhs *= sign_power(p.degree());
  return lhs == rhs;
}

}  // namespace hopfhg
