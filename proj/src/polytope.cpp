#include <castelnuovo/errors.hpp>
#include <castelnuovo/linalg.hpp>
#include <castelnuovo/polytope.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace castelnuovo {

namespace detail {

struct DilateCache {
  std::mutex mutex;
  std::map<std::pair<unsigned, Membership>, Integer> counts;
};

}  // namespace detail

namespace {

IntMatrix difference_matrix(const std::vector<LatticePoint>& pts, const LatticePoint& base) {
  IntMatrix m(pts.size(), base.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) m(i, j) = pts[i][j] - base[j];
  return m;
}

// Normal to the hyperplane through n points of Z^n via signed maximal minors.
// Returns the zero vector when the points are affinely dependent.
std::vector<Integer> hyperplane_normal(const std::vector<const LatticePoint*>& pts) {
  const std::size_t n = pts.front()->size();
  IntMatrix diffs(n - 1, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = (*pts[i])[j] - (*pts[0])[j];

  std::vector<Integer> normal(n);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t skip = 0; skip < n; ++skip) {
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == skip) continue;
        minor(r, cc++) = diffs(r, c);
      }
    Integer d = determinant(minor);
    normal[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

bool rank_is(const std::vector<std::vector<Integer>>& rows, std::size_t n, std::size_t expected) {
  if (rows.empty()) return expected == 0;
  return rank(IntMatrix(rows, n)) == expected;
}

// Integer bounding box of kP, coordinatewise.
void dilate_box(const Polytope& p, unsigned k, std::vector<Integer>& lo, std::vector<Integer>& hi) {
  const std::size_t n = p.dim();
  lo.assign(n, Integer(0));
  hi.assign(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = p.vertices().front()[i];
    for (const auto& v : p.vertices()) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
    lo[i] *= k;
    hi[i] *= k;
  }
}

template <class T>
struct ScanProblem {
  std::size_t n = 0;
  std::size_t facets = 0;
  std::vector<T> normals;  // facets x n, row-major
  std::vector<T> rhs;
  std::vector<T> lo, hi;
};

// Walks the box over the first n-1 coordinates and solves the facet system for
// the admissible interval of the last coordinate. emit(prefix, first, last) is
// called once per nonempty interval, in lexicographic order.
template <class T, class Emit>
void scan_box(const ScanProblem<T>& sp, Emit&& emit) {
  const std::size_t n = sp.n;
  const std::size_t nf = sp.facets;
  std::vector<T> prefix(n > 0 ? n - 1 : 0);
  // partial[level * nf + f] = sum_{i < level} normal[f][i] * x_i
  std::vector<T> partial((n + 1) * nf, T(0));

  auto last_interval = [&](const T* part) {
    T first = sp.lo[n - 1];
    T last = sp.hi[n - 1];
    for (std::size_t f = 0; f < nf; ++f) {
      const T& a = sp.normals[f * n + n - 1];
      T r = sp.rhs[f] - part[f];
      if (a > 0) {
        T b = floor_div(r, a);
        if (b < last) last = b;
      } else if (a < 0) {
        T b = ceil_div(r, a);
        if (b > first) first = b;
      } else if (r < 0) {
        return;
      }
      if (first > last) return;
    }
    emit(prefix, first, last);
  };

  auto recurse = [&](auto& self, std::size_t level) -> void {
    const T* part = &partial[level * nf];
    if (level + 1 == n) {
      last_interval(part);
      return;
    }
    T* next = &partial[(level + 1) * nf];
    for (T x = sp.lo[level]; x <= sp.hi[level]; ++x) {
      prefix[level] = x;
      for (std::size_t f = 0; f < nf; ++f) next[f] = part[f] + sp.normals[f * n + level] * x;
      self(self, level + 1);
    }
  };
  recurse(recurse, 0);
}

template <class T>
T convert(const Integer& v);
template <>
[[maybe_unused]] std::int64_t convert<std::int64_t>(const Integer& v) { return v.get_si(); }
template <>
[[maybe_unused]] Integer convert<Integer>(const Integer& v) { return v; }

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline const Integer& to_integer(const Integer& v) { return v; }

template <class T>
ScanProblem<T> make_problem(const Polytope& p, unsigned k, Membership mode,
                            const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  ScanProblem<T> sp;
  sp.n = p.dim();
  sp.facets = p.facets().size();
  for (const auto& f : p.facets()) {
    for (const auto& a : f.normal) sp.normals.push_back(convert<T>(a));
    Integer r = f.offset * k;
    if (mode == Membership::kInterior) r -= 1;
    sp.rhs.push_back(convert<T>(r));
  }
  for (std::size_t i = 0; i < sp.n; ++i) {
    sp.lo.push_back(convert<T>(lo[i]));
    sp.hi.push_back(convert<T>(hi[i]));
  }
  return sp;
}

// True when every intermediate value of the scan stays well inside int64 range.
bool scan_fits_int64(const Polytope& p, unsigned k, const std::vector<Integer>& lo,
                     const std::vector<Integer>& hi) {
  Integer reach(0);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    reach = std::max(reach, Integer(abs(lo[i])));
    reach = std::max(reach, Integer(abs(hi[i])));
  }
  const Integer limit = Integer(1) << 60;
  for (const auto& f : p.facets()) {
    Integer s = abs(f.offset) * k + 1;
    for (const auto& a : f.normal) s += abs(a) * (reach + 1);
    if (s >= limit) return false;
  }
  return true;
}

void check_budget(const Polytope& p, unsigned k, const CountOptions& options) {
  const Integer cells = bounding_box_cells(p, k);
  if (cells > Integer(std::to_string(options.max_box_cells))) {
    std::ostringstream os;
    os << "bounding box of " << k << "P has " << cells << " cells, exceeding the budget of "
       << options.max_box_cells;
    throw BudgetExceeded(os.str());
  }
}

template <class T>
Integer count_with(const Polytope& p, unsigned k, Membership mode, const std::vector<Integer>& lo,
                   const std::vector<Integer>& hi) {
  const auto sp = make_problem<T>(p, k, mode, lo, hi);
  T total(0);
  scan_box(sp, [&](const std::vector<T>&, const T& first, const T& last) {
    total += last - first + 1;
  });
  return to_integer(total);
}

template <class T>
std::vector<LatticePoint> list_with(const Polytope& p, unsigned k, Membership mode,
                                    const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  const auto sp = make_problem<T>(p, k, mode, lo, hi);
  std::vector<LatticePoint> out;
  const std::size_t n = p.dim();
  scan_box(sp, [&](const std::vector<T>& prefix, const T& first, const T& last) {
    for (T x = first; x <= last; ++x) {
      LatticePoint pt(n);
      for (std::size_t i = 0; i + 1 < n; ++i) pt[i] = to_integer(prefix[i]);
      pt[n - 1] = to_integer(x);
      out.push_back(std::move(pt));
    }
  });
  return out;
}

std::vector<LatticePoint> enumerate(const Polytope& p, unsigned k, Membership mode,
                                    const CountOptions& options) {
  if (k == 0) throw std::invalid_argument("lattice_points: dilation factor must be >= 1");
  check_budget(p, k, options);
  std::vector<Integer> lo, hi;
  dilate_box(p, k, lo, hi);
  return scan_fits_int64(p, k, lo, hi) ? list_with<std::int64_t>(p, k, mode, lo, hi)
                                       : list_with<Integer>(p, k, mode, lo, hi);
}

}  // namespace

long affine_dimension(const std::vector<LatticePoint>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  std::vector<LatticePoint> rest(points.begin() + 1, points.end());
  return static_cast<long>(rank(difference_matrix(rest, points.front())));
}

Polytope build_polytope(std::vector<LatticePoint> points, const BuildOptions& options) {
  if (points.empty()) throw EmptyInput("no points given");
  const std::size_t n = points.front().size();
  if (n == 0) throw DimensionMismatch("ambient dimension must be at least 1");
  for (const auto& pt : points)
    if (pt.size() != n) {
      std::ostringstream os;
      os << "point " << pt << " has " << pt.size() << " coordinates, expected " << n;
      throw DimensionMismatch(os.str());
    }

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const long adim = affine_dimension(points);
  if (adim < static_cast<long>(n)) {
    std::ostringstream os;
    os << "affine hull of the input has dimension " << adim << " < " << n;
    throw NotFullDimensional(os.str());
  }

  Integer subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), points.size(), n);
  if (subsets > Integer(std::to_string(options.max_facet_subsets))) {
    std::ostringstream os;
    os << "facet enumeration would examine " << subsets << " subsets, exceeding the budget of "
       << options.max_facet_subsets;
    throw BudgetExceeded(os.str());
  }

  // Every facet hyperplane is spanned by n of the input points.
  std::set<Facet> found;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<const LatticePoint*> chosen(n);
  const std::size_t m = points.size();
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) chosen[i] = &points[idx[i]];
    auto normal = hyperplane_normal(chosen);
    if (std::any_of(normal.begin(), normal.end(), [](const Integer& x) { return x != 0; })) {
      make_primitive(normal);
      Integer offset = dot(normal, *chosen[0]);
      bool above = false, below = false;
      for (const auto& pt : points) {
        const int s = sgn(Integer(dot(normal, pt) - offset));
        if (s > 0) above = true;
        if (s < 0) below = true;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {
          for (auto& a : normal) a = -a;
          offset = -offset;
        }
        found.insert(Facet{std::move(normal), std::move(offset)});
      }
    }
    // Next combination in lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == m - n + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }

  Polytope p;
  p.dim_ = n;
  p.facets_.assign(found.begin(), found.end());

  // A point is a vertex iff the normals of the facets through it have full rank.
  for (const auto& pt : points) {
    std::vector<std::vector<Integer>> active;
    for (const auto& f : p.facets_)
      if (dot(f.normal, pt) == f.offset) active.push_back(f.normal);
    if (rank_is(active, n, n))
      p.vertices_.push_back(pt);
    else
      ++p.discarded_;
  }

  p.facet_vertices_.resize(p.facets_.size());
  p.vertex_facets_.resize(p.vertices_.size());
  for (std::size_t f = 0; f < p.facets_.size(); ++f)
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
      if (dot(p.facets_[f].normal, p.vertices_[v]) == p.facets_[f].offset) {
        p.facet_vertices_[f].push_back(v);
        p.vertex_facets_[v].push_back(f);
      }

  p.cache_ = std::make_shared<detail::DilateCache>();
  return p;
}

bool contains(const Polytope& p, const RationalVector& x, Membership mode) {
  if (x.size() != p.dim()) {
    std::ostringstream os;
    os << "point has " << x.size() << " coordinates, polytope dimension is " << p.dim();
    throw DimensionMismatch(os.str());
  }
  for (const auto& f : p.facets()) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += Rational(f.normal[i]) * x[i];
    const Rational b(f.offset);
    if (mode == Membership::kClosed ? s > b : s >= b) return false;
  }
  return true;
}

bool contains(const Polytope& p, const LatticePoint& x, Membership mode) {
  RationalVector q;
  q.reserve(x.size());
  for (const auto& c : x) q.emplace_back(c);
  return contains(p, q, mode);
}

Integer bounding_box_cells(const Polytope& p, unsigned k) {
  std::vector<Integer> lo, hi;
  dilate_box(p, k, lo, hi);
  Integer cells(1);
  for (std::size_t i = 0; i < lo.size(); ++i) cells *= hi[i] - lo[i] + 1;
  return cells;
}

Integer count_lattice_points(const Polytope& p, unsigned k, Membership mode,
                             const CountOptions& options) {
  if (k == 0) throw std::invalid_argument("count_lattice_points: dilation factor must be >= 1");
  auto& cache = p.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.counts.find({k, mode}); it != cache.counts.end()) return it->second;
  }
  check_budget(p, k, options);
  std::vector<Integer> lo, hi;
  dilate_box(p, k, lo, hi);
  Integer c = scan_fits_int64(p, k, lo, hi) ? count_with<std::int64_t>(p, k, mode, lo, hi)
                                            : count_with<Integer>(p, k, mode, lo, hi);
  std::lock_guard lock(cache.mutex);
  cache.counts.emplace(std::make_pair(k, mode), c);
  return c;
}

std::vector<LatticePoint> lattice_points(const Polytope& p, unsigned k, const CountOptions& options) {
  return enumerate(p, k, Membership::kClosed, options);
}

std::vector<LatticePoint> interior_lattice_points(const Polytope& p, unsigned k,
                                                  const CountOptions& options) {
  return enumerate(p, k, Membership::kInterior, options);
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& vf = p.vertex_facets();
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices().size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(vf[i].begin(), vf[i].end(), vf[j].begin(), vf[j].end(),
                            std::back_inserter(common));
      std::vector<std::vector<Integer>> normals;
      for (auto f : common) normals.push_back(p.facets()[f].normal);
      if (rank_is(normals, n, n - 1)) out.emplace_back(i, j);
    }
  return out;
}

bool is_smooth(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<std::vector<std::size_t>> neighbours(p.vertices().size());
  for (auto [i, j] : edges(p)) {
    neighbours[i].push_back(j);
    neighbours[j].push_back(i);
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (neighbours[v].size() != n) return false;
    IntMatrix dirs(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Integer> d = (p.vertices()[neighbours[v][r]] - p.vertices()[v]).coords();
      make_primitive(d);
      for (std::size_t c = 0; c < n; ++c) dirs(r, c) = d[c];
    }
    if (abs(determinant(dirs)) != 1) return false;
  }
  return true;
}

Integer simplex_normalized_volume(const std::vector<LatticePoint>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("simplex_normalized_volume: empty simplex");
  const std::size_t n = simplex.front().size();
  if (simplex.size() != n + 1)
    throw std::invalid_argument("simplex_normalized_volume: expected n+1 vertices");
  std::vector<LatticePoint> rest(simplex.begin() + 1, simplex.end());
  return abs(determinant(difference_matrix(rest, simplex.front())));
}

std::vector<std::vector<std::size_t>> vertex_pulling_simplices(const Polytope& p) {
  const auto& verts = p.vertices();
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo;

  auto face_dim = [&](const std::vector<std::size_t>& face) {
    std::vector<LatticePoint> pts;
    for (auto i : face) pts.push_back(verts[i]);
    return affine_dimension(pts);
  };

  auto triangulate = [&](auto& self, const std::vector<std::size_t>& face,
                         long d) -> std::vector<std::vector<std::size_t>> {
    if (auto it = memo.find(face); it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> result;
    if (static_cast<long>(face.size()) == d + 1) {
      result.push_back(face);
    } else {
      // Facets of this face are its intersections with facets of P of dimension d-1.
      std::set<std::vector<std::size_t>> subfaces;
      for (const auto& fv : p.facet_vertices()) {
        std::vector<std::size_t> meet;
        std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(),
                              std::back_inserter(meet));
        if (meet.size() < face.size() && face_dim(meet) == d - 1) subfaces.insert(std::move(meet));
      }
      const std::size_t apex = face.front();
      for (const auto& sub : subfaces) {
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        for (auto simplex : self(self, sub, d - 1)) {
          simplex.insert(simplex.begin(), apex);
          result.push_back(std::move(simplex));
        }
      }
    }
    memo.emplace(face, result);
    return result;
  };

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto simplices = triangulate(triangulate, all, static_cast<long>(p.dim()));
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

Integer geometric_normalized_volume(const Polytope& p) {
  Integer total(0);
  for (const auto& s : vertex_pulling_simplices(p)) {
    std::vector<LatticePoint> pts;
    for (auto i : s) pts.push_back(p.vertices()[i]);
    total += simplex_normalized_volume(pts);
  }
  return total;
}

}  // namespace castelnuovo
