#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covertower {

/// Bit-packed vector over the two-element field.
class F2Vector {
public:
  F2Vector() = default;
  explicit F2Vector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

  static F2Vector unit(std::size_t dim, std::size_t i);
  static F2Vector from_bits(const std::vector<int>& bits);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool b) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (b) words_[i >> 6] |= mask;
    else words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  bool is_zero() const;
  int lowest_set() const;  // -1 when zero

  F2Vector& operator^=(const F2Vector& o);
  F2Vector operator^(const F2Vector& o) const;
  bool operator==(const F2Vector& o) const;
  bool operator!=(const F2Vector& o) const { return !(*this == o); }
  bool operator<(const F2Vector& o) const;  // lexicographic on bit indices 0..dim-1

  /// Standard dot product mod 2.
  bool dot(const F2Vector& o) const;

  std::size_t popcount() const;
  std::string to_bitstring() const;

private:
  std::size_t dim_ = 0;
  std::vector<uint64_t> words_;
};

/// Row-echelon workhorse: a list of rows kept in reduced form, supporting
/// rank, membership, solving and nullspace extraction.
class F2Matrix {
public:
  F2Matrix() = default;
  explicit F2Matrix(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<F2Vector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Adds a row, reducing against the current echelon set.
  /// Returns true when the row was independent (rank grew).
  bool add_row(F2Vector v);

  /// Reduces v against the echelon rows; the remainder is zero iff
  /// v lies in the row span.
  F2Vector reduce(F2Vector v) const;
  bool in_span(const F2Vector& v) const { return reduce(v).is_zero(); }

  /// Basis of { x : Mx = 0 } for the matrix whose rows were added.
  /// Note: rows added here are the *equations*; the nullspace lives in
  /// the column space.
  std::vector<F2Vector> nullspace() const;

private:
  std::size_t cols_ = 0;
  std::vector<F2Vector> rows_;   // reduced echelon rows
  std::vector<int> pivots_;      // pivot column of each row
};

/// Rank of an arbitrary collection of vectors.
std::size_t f2_rank(const std::vector<F2Vector>& vecs, std::size_t dim);

}  // namespace covertower
