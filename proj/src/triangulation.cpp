#include <castelnuovo/errors.hpp>
#include <castelnuovo/linalg.hpp>
#include <castelnuovo/triangulation.hpp>

#include <algorithm>
#include <optional>
#include <set>

namespace castelnuovo {

std::vector<LatticePoint> Triangulation::simplex_points(std::size_t i) const {
  std::vector<LatticePoint> out;
  for (auto idx : simplices.at(i)) out.push_back(points[idx]);
  return out;
}

Integer Triangulation::normalized_volume() const {
  Integer total(0);
  for (std::size_t i = 0; i < simplices.size(); ++i) total += simplex_normalized_volume(simplex_points(i));
  return total;
}

namespace {

// Barycentric coordinates of q in the simplex, or nothing if q lies outside it.
std::optional<RationalVector> barycentric(const Triangulation& t, const std::vector<std::size_t>& simplex,
                                          const LatticePoint& q) {
  const std::size_t n = t.dim;
  IntMatrix a(n + 1, n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    const auto& v = t.points[simplex[c]];
    for (std::size_t r = 0; r < n; ++r) a(r, c) = v[r];
    a(n, c) = 1;
  }
  RationalVector rhs;
  for (const auto& x : q) rhs.emplace_back(x);
  rhs.emplace_back(1);
  auto lambda = solve(a, rhs);
  if (!lambda) throw InvariantViolation("degenerate simplex in triangulation");
  for (const auto& l : *lambda)
    if (l < 0) return std::nullopt;
  return lambda;
}

// Replace every simplex containing point q by cones from q over the faces opposite
// the vertices of q's carrier face.
void pull_point(Triangulation& t, std::size_t q) {
  std::vector<std::vector<std::size_t>> next;
  next.reserve(t.simplices.size() + t.dim + 1);
  for (const auto& simplex : t.simplices) {
    const auto lambda = barycentric(t, simplex, t.points[q]);
    if (!lambda) {
      next.push_back(simplex);
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if ((*lambda)[i] == 0) continue;
      auto cone = simplex;
      cone[i] = q;
      std::sort(cone.begin(), cone.end());
      next.push_back(std::move(cone));
    }
  }
  t.simplices = std::move(next);
}

}  // namespace

Triangulation pulling_triangulation(const Polytope& p, const CountOptions& options) {
  Triangulation t;
  t.dim = p.dim();
  t.points = lattice_points(p, 1, options);

  auto index_of = [&](const LatticePoint& x) {
    return static_cast<std::size_t>(std::lower_bound(t.points.begin(), t.points.end(), x) -
                                    t.points.begin());
  };

  std::vector<bool> used(t.points.size(), false);
  for (const auto& s : vertex_pulling_simplices(p)) {
    std::vector<std::size_t> simplex;
    for (auto v : s) {
      const std::size_t idx = index_of(p.vertices()[v]);
      used[idx] = true;
      simplex.push_back(idx);
    }
    std::sort(simplex.begin(), simplex.end());
    t.simplices.push_back(std::move(simplex));
  }
  for (std::size_t q = 0; q < t.points.size(); ++q)
    if (!used[q]) pull_point(t, q);
  std::sort(t.simplices.begin(), t.simplices.end());
  return t;
}

std::vector<Integer> h_from_f(const std::vector<Integer>& f) {
  if (f.empty()) throw std::invalid_argument("h_from_f: empty f-vector");
  const std::size_t top = f.size() - 1;  // f holds f_{-1}..f_{top-1}
  std::vector<Integer> h(top + 1, Integer(0));
  for (std::size_t j = 0; j <= top; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      const Integer term = binomial(static_cast<long>(top - i), j - i) * f[i];
      if ((j - i) % 2 == 0)
        h[j] += term;
      else
        h[j] -= term;
    }
  return h;
}

HVector h_vector(const Triangulation& t) {
  const std::size_t n = t.dim;
  std::vector<std::set<std::vector<std::size_t>>> faces(n + 2);
  for (const auto& s : t.simplices) {
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
      faces[face.size()].insert(std::move(face));
    }
  }
  HVector hv;
  hv.f.push_back(Integer(1));
  for (std::size_t size = 1; size <= n + 1; ++size)
    hv.f.push_back(Integer(static_cast<unsigned long>(faces[size].size())));
  hv.h = h_from_f(hv.f);
  return hv;
}

bool is_unimodular(const Triangulation& t) {
  for (std::size_t i = 0; i < t.simplices.size(); ++i)
    if (simplex_normalized_volume(t.simplex_points(i)) != 1) return false;
  return true;
}

BetkeMcMullenReport betke_mcmullen_check(const Polytope& p, const CountOptions& options) {
  BetkeMcMullenReport r;
  const Triangulation t = pulling_triangulation(p, options);
  const HVector hv = h_vector(t);
  r.unimodular = is_unimodular(t);
  r.h.assign(hv.h.begin(), hv.h.begin() + static_cast<std::ptrdiff_t>(p.dim() + 1));
  r.h_top = hv.h.back();
  r.hstar = hstar(p, options);
  r.h_matches_hstar = r.h_top == 0 && r.h == r.hstar.coeffs;
  r.simplex_count = t.simplices.size();
  return r;
}

}  // namespace castelnuovo
