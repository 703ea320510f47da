#pragma once

#include <castelnuovo/integer.hpp>
#include <castelnuovo/point.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace castelnuovo {

inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultFacetSubsetBudget = 1'000'000;

/// Inequality normal . x <= offset, normal primitive.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.offset == b.offset && a.normal == b.normal;
  }
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

enum class Membership { kClosed, kInterior };

struct BuildOptions {
  /// Cap on the number of n-subsets examined during facet enumeration.
  std::uint64_t max_facet_subsets = kDefaultFacetSubsetBudget;
};

struct CountOptions {
  /// Cap on the integer bounding-box cell count of a dilate kP.
  std::uint64_t max_box_cells = kDefaultCellBudget;
};

namespace detail {
struct DilateCache;
}

/// Immutable full-dimensional lattice polytope in R^n.
///
/// Vertices are stored in lexicographic order; facets are sorted by (normal, offset).
/// Copies share a memo of dilate lattice-point counts, guarded internally.
class Polytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Indices into vertices() lying on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  /// Indices into facets() containing each vertex.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }
  /// Number of distinct input points dropped because they were not vertices.
  std::size_t discarded_points() const { return discarded_; }

  detail::DilateCache& cache() const { return *cache_; }

 private:
  friend Polytope build_polytope(std::vector<LatticePoint>, const BuildOptions&);

  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::size_t discarded_ = 0;
  std::shared_ptr<detail::DilateCache> cache_;
};

/// Convex hull of `points`. Duplicates and non-vertices are dropped.
/// Throws EmptyInput, DimensionMismatch, NotFullDimensional or BudgetExceeded.
Polytope build_polytope(std::vector<LatticePoint> points, const BuildOptions& options = {});

/// Affine dimension of a point set; -1 for the empty set.
long affine_dimension(const std::vector<LatticePoint>& points);

bool contains(const Polytope& p, const RationalVector& x, Membership mode = Membership::kClosed);
bool contains(const Polytope& p, const LatticePoint& x, Membership mode = Membership::kClosed);

/// Number of cells in the integer bounding box of kP.
Integer bounding_box_cells(const Polytope& p, unsigned k);

/// |kP ∩ Z^n| (or |int(kP) ∩ Z^n|). Memoized on the polytope. Requires k >= 1.
Integer count_lattice_points(const Polytope& p, unsigned k, Membership mode = Membership::kClosed,
                             const CountOptions& options = {});

/// Lattice points of kP in lexicographic order. Requires k >= 1.
std::vector<LatticePoint> lattice_points(const Polytope& p, unsigned k,
                                         const CountOptions& options = {});
std::vector<LatticePoint> interior_lattice_points(const Polytope& p, unsigned k,
                                                  const CountOptions& options = {});

/// Vertex index pairs (i < j) spanning an edge.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);

/// Simple, with primitive edge directions at every vertex forming a basis of Z^n.
bool is_smooth(const Polytope& p);

/// |det(v1 - v0, ..., vn - v0)|: n! times the Euclidean volume of the simplex.
Integer simplex_normalized_volume(const std::vector<LatticePoint>& simplex);

/// Pulling triangulation on the vertices alone: the lexicographically first vertex
/// of each face is coned over the facets of that face missing it. Simplices are
/// returned as sorted vertex-index lists.
std::vector<std::vector<std::size_t>> vertex_pulling_simplices(const Polytope& p);

/// n! times the Euclidean volume, computed from vertex_pulling_simplices.
Integer geometric_normalized_volume(const Polytope& p);

}  // namespace castelnuovo
