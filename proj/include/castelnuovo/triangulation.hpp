#pragma once

#include <castelnuovo/ehrhart.hpp>
#include <castelnuovo/integer.hpp>
#include <castelnuovo/polytope.hpp>

#include <cstddef>
#include <vector>

namespace castelnuovo {

/// Lattice triangulation: maximal simplices as sorted index lists into `points`.
struct Triangulation {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  std::vector<std::vector<std::size_t>> simplices;

  std::vector<LatticePoint> simplex_points(std::size_t i) const;
  /// Sum of |det| over maximal simplices.
  Integer normalized_volume() const;
};

/// f_{-1}..f_n and h_0..h_{n+1} of a triangulated n-ball.
struct HVector {
  std::vector<Integer> f;
  std::vector<Integer> h;
};

/// Pulling triangulation using every lattice point of P. Vertices are pulled face by
/// face in lexicographic order, then the remaining lattice points are pulled (stellar
/// subdivision) in lexicographic order.
Triangulation pulling_triangulation(const Polytope& p, const CountOptions& options = {});

/// Face counts of the closure, then sum_i f_{i-1}(t-1)^{n+1-i} = sum_i h_i t^{n+1-i}.
HVector h_vector(const Triangulation& t);

/// h-vector from an explicit f-vector f_{-1}..f_d.
std::vector<Integer> h_from_f(const std::vector<Integer>& f);

/// Every maximal simplex has |det(v1-v0, ..., vn-v0)| = 1.
bool is_unimodular(const Triangulation& t);

struct BetkeMcMullenReport {
  bool unimodular = false;
  std::vector<Integer> h;  // h_0..h_n of the triangulation (h_{n+1} dropped)
  Integer h_top;           // h_{n+1}, zero for a ball
  HStarVector hstar;
  bool h_matches_hstar = false;
  std::size_t simplex_count = 0;

  /// The criterion: unimodular iff h(T) = h*(P).
  bool consistent() const { return unimodular == h_matches_hstar; }
};

BetkeMcMullenReport betke_mcmullen_check(const Polytope& p, const CountOptions& options = {});

}  // namespace castelnuovo
