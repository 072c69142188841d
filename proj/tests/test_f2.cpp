#include "doctest.h"

#include "covertower/f2.hpp"

using namespace covertower;

TEST_CASE("vector basics") {
  F2Vector v(70);
  v.set(0, true);
  v.set(69, true);
  CHECK(v.popcount() == 2);
  CHECK(v.get(69));
  CHECK(v.lowest_set() == 0);
  F2Vector w = v ^ F2Vector::unit(70, 0);
  CHECK(w.popcount() == 1);
  CHECK(w.lowest_set() == 69);
  CHECK(v.dot(w));       // shares bit 69
  CHECK_FALSE(v.dot(v));  // two shared bits
}

TEST_CASE("row reduction is idempotent and rank+nullity=columns") {
  F2Matrix m(5);
  m.add_row(F2Vector::from_bits({1, 1, 0, 0, 0}));
  m.add_row(F2Vector::from_bits({0, 1, 1, 0, 0}));
  m.add_row(F2Vector::from_bits({1, 0, 1, 0, 0}));  // dependent
  CHECK(m.rank() == 2);
  CHECK(m.in_span(F2Vector::from_bits({1, 0, 1, 0, 0})));
  CHECK_FALSE(m.in_span(F2Vector::from_bits({0, 0, 0, 1, 0})));
  auto r = m.reduce(F2Vector::from_bits({1, 1, 0, 0, 0}));
  CHECK(m.reduce(r) == r);
  CHECK(m.nullspace().size() + m.rank() == 5);
  for (const auto& n : m.nullspace())
    for (const auto& row : m.rows()) CHECK_FALSE(row.dot(n));
}

TEST_CASE("lexicographic order") {
  CHECK(F2Vector::from_bits({0, 1}) < F2Vector::from_bits({1, 0}));
  CHECK(F2Vector::from_bits({1, 0}) < F2Vector::from_bits({1, 1}));
}
