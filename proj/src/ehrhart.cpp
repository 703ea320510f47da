#include <castelnuovo/ehrhart.hpp>
#include <castelnuovo/errors.hpp>

#include <sstream>

namespace castelnuovo {

std::size_t HStarVector::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return i;
  return 0;
}

Integer HStarVector::volume() const {
  Integer s(0);
  for (const auto& c : coeffs) s += c;
  return s;
}

EhrhartProfile ehrhart_profile(const Polytope& p, unsigned max_k, const CountOptions& options) {
  EhrhartProfile profile;
  profile.counts.push_back(Integer(1));
  for (unsigned k = 1; k <= max_k; ++k)
    profile.counts.push_back(count_lattice_points(p, k, Membership::kClosed, options));
  return profile;
}

HStarVector hstar_from_profile(std::size_t dim, const EhrhartProfile& profile) {
  if (profile.counts.size() < dim + 1)
    throw std::invalid_argument("hstar_from_profile: need the counts L(0..n)");
  HStarVector h;
  h.dim = dim;
  h.coeffs.assign(dim + 1, Integer(0));
  for (std::size_t i = 0; i <= dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Integer term = binomial(static_cast<long>(dim + 1), j) * profile.counts[i - j];
      if (j % 2 == 0)
        h.coeffs[i] += term;
      else
        h.coeffs[i] -= term;
    }
  return h;
}

HStarVector hstar(const Polytope& p, const CountOptions& options) {
  const std::size_t n = p.dim();
  const auto profile = ehrhart_profile(p, static_cast<unsigned>(n), options);
  HStarVector h = hstar_from_profile(n, profile);

  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "h*-vector invariant violated: " << what;
    throw InvariantViolation(os.str());
  };
  if (h.coeffs[0] != 1) fail("h*_0 != 1");
  for (std::size_t i = 0; i <= n; ++i)
    if (h.coeffs[i] < 0) fail("negative coefficient h*_" + std::to_string(i));
  if (h.coeffs[1] != profile.counts[1] - Integer(static_cast<long>(n + 1)))
    fail("h*_1 != |P ∩ Z^n| - (n+1)");
  if (h.coeffs[n] != count_lattice_points(p, 1, Membership::kInterior, options))
    fail("h*_n != |int(P) ∩ Z^n|");
  if (h.volume() != geometric_normalized_volume(p)) fail("coefficient sum != normalized volume");
  return h;
}

std::size_t degree_from_interior_dilates(const Polytope& p, const CountOptions& options) {
  const std::size_t n = p.dim();
  for (unsigned k = 1; k <= n + 1; ++k)
    if (count_lattice_points(p, k, Membership::kInterior, options) > 0) return n + 1 - k;
  throw CrossCheckMismatch("no interior lattice point in (n+1)P");
}

std::size_t degree(const Polytope& p, const CountOptions& options) {
  const std::size_t by_support = hstar(p, options).degree();
  const std::size_t by_interior = degree_from_interior_dilates(p, options);
  if (by_support != by_interior) {
    std::ostringstream os;
    os << "degree mismatch: h*-support gives " << by_support << ", interior dilates give "
       << by_interior;
    throw CrossCheckMismatch(os.str());
  }
  return by_support;
}

Integer normalized_volume(const Polytope& p, const CountOptions& options) {
  return hstar(p, options).volume();
}

Integer ehrhart_eval(const HStarVector& h, unsigned k) {
  const long n = static_cast<long>(h.dim);
  Integer total(0);
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    total += h.coeffs[i] * binomial(n + static_cast<long>(k) - static_cast<long>(i),
                                    static_cast<unsigned long>(n));
  return total;
}

}  // namespace castelnuovo
