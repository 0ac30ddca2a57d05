#pragma once

#include <cstdint>
#include <random>

#include "adaregret/vecmath.hpp"

namespace adaregret {

enum class DomainKind { Ball, Box };

/// Feasible set: a Euclidean ball or an axis-aligned box.
/// Immutable after construction; the diameter bounds the distance between
/// any two feasible points.
class Domain {
 public:
  static Domain ball(Vec center, double radius);
  static Domain box(Vec center, Vec halfwidths);

  DomainKind kind() const { return kind_; }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  const Vec& halfwidths() const { return halfwidths_; }
  int dimension() const { return static_cast<int>(center_.size()); }

  /// 2*radius for a ball, the box diagonal length for a box.
  double diameter() const { return diameter_; }

  /// Euclidean-nearest feasible point.
  Vec project(const Vec& p) const;

  bool contains(const Vec& p, double tol = 1e-12) const;

  /// Uniform sample from the interior (ball: radial rescaling of a
  /// Gaussian direction; box: per-coordinate uniform).
  Vec sample(std::mt19937_64& rng) const;

 private:
  Domain() = default;
  DomainKind kind_ = DomainKind::Ball;
  Vec center_;
  double radius_ = 0.0;
  Vec halfwidths_;
  double diameter_ = 0.0;
};

inline Vec project(const Vec& p, const Domain& d) { return d.project(p); }

}  // namespace adaregret
