#include "covertower/f2.hpp"

#include <bit>
#include <stdexcept>

namespace covertower {

F2Vector F2Vector::unit(std::size_t dim, std::size_t i) {
  F2Vector v(dim);
  v.set(i, true);
  return v;
}

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
  return v;
}

bool F2Vector::is_zero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

int F2Vector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
  return -1;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("F2Vector: dimension mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

F2Vector F2Vector::operator^(const F2Vector& o) const {
  F2Vector r = *this;
  r ^= o;
  return r;
}

bool F2Vector::operator==(const F2Vector& o) const {
  return dim_ == o.dim_ && words_ == o.words_;
}

bool F2Vector::operator<(const F2Vector& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return !a;
  }
  return false;
}

bool F2Vector::dot(const F2Vector& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("F2Vector: dimension mismatch");
  uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
  return std::popcount(acc) & 1;
}

std::size_t F2Vector::popcount() const {
  std::size_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::string F2Vector::to_bitstring() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool F2Matrix::add_row(F2Vector v) {
  v = reduce(std::move(v));
  int p = v.lowest_set();
  if (p < 0) return false;
  // keep rows fully reduced against the new pivot
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].get(std::size_t(p))) rows_[i] ^= v;
  // insert sorted by pivot for determinism
  std::size_t at = 0;
  while (at < rows_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

F2Vector F2Matrix::reduce(F2Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(std::size_t(pivots_[i]))) v ^= rows_[i];
  return v;
}

std::vector<F2Vector> F2Matrix::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[std::size_t(p)] = true;
  std::vector<F2Vector> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    F2Vector v(cols_);
    v.set(j, true);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].get(j)) v.set(std::size_t(pivots_[i]), true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t f2_rank(const std::vector<F2Vector>& vecs, std::size_t dim) {
  F2Matrix m(dim);
  for (const auto& v : vecs) m.add_row(v);
  return m.rank();
}

}  // namespace covertower
