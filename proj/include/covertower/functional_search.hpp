#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "covertower/f2.hpp"
#include "covertower/homology.hpp"

namespace covertower {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct SearchOptions {
  std::size_t enum_cap_dim = 24;
  uint64_t seed = 0;
  std::size_t retry_factor = 64;  // randomized budget = retry_factor * dim
};

/// Ceiling of the half/three-sevenths thresholds in integer form.
inline long half_threshold(long m) { return (m + 1) / 2; }
inline long three_sevenths_threshold(long m) { return (3 * m + 6) / 7; }

/// Linear map hitting 1 on at least half of the (nonzero) vectors:
/// exhaustive in a fixed order when dim fits the cap, else randomized with a
/// bounded retry budget.
F2Vector find_half_functional(const std::vector<F2Vector>& vectors,
                              const SearchOptions& opt = {});

/// Average hit count over all 2^dim functionals, as an exact rational;
/// equals m/2 by linearity of expectation.
Rational expectation_audit_half(const std::vector<F2Vector>& vectors, std::size_t dim,
                                std::size_t cap_dim = 24);

struct SplittingFamily {
  std::size_t dim = 0;  // ambient dimension n >= 3
  struct Pair {
    std::vector<F2Vector> v_basis;
    std::vector<F2Vector> w_basis;
  };
  std::vector<Pair> pairs;
};

/// Validates each V_i (+) W_i = F2^n decomposition.
void check_splitting_family(const SplittingFamily& fam);

bool splitting_hit(const F2Vector& f, const SplittingFamily::Pair& p);

/// Nonzero functional nontrivial on both sides of at least ceil(3m/7) of
/// the splittings.
F2Vector find_splitting_functional(const SplittingFamily& fam, const SearchOptions& opt = {});

/// Best achievable counts, for audits (exhaustive; respects the cap).
long best_half_count(const std::vector<F2Vector>& vectors, std::size_t dim,
                     std::size_t cap_dim = 24);
long best_splitting_count(const SplittingFamily& fam, std::size_t cap_dim = 24);

/// zeta(a, n) = (2^a - 1)(2^{n-a} - 1) / (2^n - 1), the probability that a
/// random nonzero functional is nontrivial on both sides of a splitting with
/// dim V = a. Minimum over n >= 3 is zeta(1,3) = 3/7.
Rational zeta(int a, int n);

}  // namespace covertower
