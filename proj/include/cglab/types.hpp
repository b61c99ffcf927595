// Dense Eigen aliases over the exact rational scalar.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "cglab/rational.hpp"

namespace cglab {

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Exact dot product. Eigen's own dot() works for this scalar too; the manual
// loop keeps the hot paths free of expression-template temporaries.
inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational acc;
  for (Index i = 0; i < a.size(); ++i) acc.addmul(a[i], b[i]);
  return acc;
}

inline Rational l1_norm(const RatVec& v) {
  Rational acc;
  for (Index i = 0; i < v.size(); ++i) acc += abs(v[i]);
  return acc;
}

inline RatVec rat_vec(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

}  // namespace cglab
