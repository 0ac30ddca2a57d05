#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace adaregret {

using Vec = std::vector<double>;

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec scale(const Vec& a, double c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// r += c * a
inline void axpy(Vec& r, double c, const Vec& a) {
  require_same_dim(r, a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += c * a[i];
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

}  // namespace adaregret
