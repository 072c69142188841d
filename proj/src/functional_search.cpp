#include "covertower/functional_search.hpp"

#include <random>

namespace covertower {

namespace {

long half_count(const F2Vector& f, const std::vector<F2Vector>& vectors) {
  long c = 0;
  for (const auto& v : vectors)
    if (f.dot(v)) ++c;
  return c;
}

F2Vector random_functional(std::size_t dim, std::mt19937_64& rng) {
  F2Vector f(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (rng() & 1) f.set(i, true);
  return f;
}

}  // namespace

F2Vector find_half_functional(const std::vector<F2Vector>& vectors, const SearchOptions& opt) {
  if (vectors.empty()) throw Error("find_half_functional: empty vector list");
  std::size_t dim = vectors.front().dim();
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw Error("find_half_functional: dimension mismatch");
    if (v.is_zero()) throw Error("find_half_functional: zero vector in input");
  }
  long need = half_threshold(long(vectors.size()));
  if (dim <= opt.enum_cap_dim) {
    FunctionalEnumerator en(dim, false, {}, opt.enum_cap_dim);
    while (auto f = en.next())
      if (half_count(*f, vectors) >= need) return *f;
    throw Error("find_half_functional: exhaustive search failed (impossible)");
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t tries = 0; tries < opt.retry_factor * dim; ++tries) {
    F2Vector f = random_functional(dim, rng);
    if (half_count(f, vectors) >= need) return f;
  }
  throw Error("find_half_functional: randomized budget exhausted above the enumeration cap");
}

Rational expectation_audit_half(const std::vector<F2Vector>& vectors, std::size_t dim,
                                std::size_t cap_dim) {
  if (dim > cap_dim) throw Error("expectation_audit_half: cap exceeded");
  for (const auto& v : vectors)
    if (v.is_zero()) throw Error("expectation_audit_half: zero vector in input");
  BigInt total = 0;
  FunctionalEnumerator en(dim, false, {}, cap_dim);
  while (auto f = en.next()) total += half_count(*f, vectors);
  BigInt denom = BigInt(1) << unsigned(dim);
  return Rational(total, denom);
}

void check_splitting_family(const SplittingFamily& fam) {
  if (fam.dim < 3) throw Error("splitting family: ambient dimension must be at least 3");
  for (const auto& p : fam.pairs) {
    if (p.v_basis.empty() || p.w_basis.empty())
      throw Error("splitting family: degenerate splitting (trivial side)");
    F2Matrix m(fam.dim);
    std::size_t rv = 0, rw = 0;
    for (const auto& v : p.v_basis) {
      if (v.dim() != fam.dim) throw Error("splitting family: dimension mismatch");
      if (m.add_row(v)) ++rv;
    }
    if (rv != p.v_basis.size()) throw Error("splitting family: dependent V basis");
    for (const auto& w : p.w_basis) {
      if (w.dim() != fam.dim) throw Error("splitting family: dimension mismatch");
      if (m.add_row(w)) ++rw;
    }
    if (rw != p.w_basis.size()) throw Error("splitting family: dependent W basis");
    if (rv + rw != fam.dim)
      throw Error("splitting family: V + W does not decompose the ambient space");
  }
}

bool splitting_hit(const F2Vector& f, const SplittingFamily::Pair& p) {
  bool on_v = false, on_w = false;
  for (const auto& v : p.v_basis) on_v = on_v || f.dot(v);
  for (const auto& w : p.w_basis) on_w = on_w || f.dot(w);
  return on_v && on_w;
}

namespace {

long splitting_count(const F2Vector& f, const SplittingFamily& fam) {
  long c = 0;
  for (const auto& p : fam.pairs)
    if (splitting_hit(f, p)) ++c;
  return c;
}

}  // namespace

F2Vector find_splitting_functional(const SplittingFamily& fam, const SearchOptions& opt) {
  check_splitting_family(fam);
  long need = three_sevenths_threshold(long(fam.pairs.size()));
  if (fam.dim <= opt.enum_cap_dim) {
    FunctionalEnumerator en(fam.dim, true, {}, opt.enum_cap_dim);
    while (auto f = en.next())
      if (splitting_count(*f, fam) >= need) return *f;
    throw Error("find_splitting_functional: exhaustive search failed (impossible)");
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t tries = 0; tries < opt.retry_factor * fam.dim; ++tries) {
    F2Vector f = random_functional(fam.dim, rng);
    if (f.is_zero()) continue;
    if (splitting_count(f, fam) >= need) return f;
  }
  throw Error("find_splitting_functional: randomized budget exhausted above the enumeration cap");
}

long best_half_count(const std::vector<F2Vector>& vectors, std::size_t dim, std::size_t cap_dim) {
  if (dim > cap_dim) throw Error("best_half_count: cap exceeded");
  long best = 0;
  FunctionalEnumerator en(dim, false, {}, cap_dim);
  while (auto f = en.next()) best = std::max(best, half_count(*f, vectors));
  return best;
}

long best_splitting_count(const SplittingFamily& fam, std::size_t cap_dim) {
  check_splitting_family(fam);
  if (fam.dim > cap_dim) throw Error("best_splitting_count: cap exceeded");
  long best = 0;
  FunctionalEnumerator en(fam.dim, true, {}, cap_dim);
  while (auto f = en.next()) best = std::max(best, splitting_count(*f, fam));
  return best;
}

Rational zeta(int a, int n) {
  if (n < 3 || a < 1 || a > n - 1) throw Error("zeta: (a, n) outside the domain");
  BigInt va = (BigInt(1) << unsigned(a)) - 1;
  BigInt wa = (BigInt(1) << unsigned(n - a)) - 1;
  BigInt den = (BigInt(1) << unsigned(n)) - 1;
  return Rational(va * wa, den);
}

}  // namespace covertower
