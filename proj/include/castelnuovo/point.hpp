#pragma once

#include <castelnuovo/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace castelnuovo {

/// A point of Z^n.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t n) : coords_(n, Integer(0)) {}
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
  }

  /// The i-th unit vector e_{i+1} of Z^n.
  static LatticePoint unit(std::size_t n, std::size_t i) {
    LatticePoint p(n);
    p.coords_.at(i) = 1;
    return p;
  }

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  LatticePoint& operator+=(const LatticePoint& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticePoint& operator*=(const Integer& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(const Integer& s, LatticePoint a) { return a *= s; }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  /// Lexicographic order.
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].get_str();
    }
    return s + ")";
  }

 private:
  void check_size(const LatticePoint& o) const {
    if (o.size() != size()) throw std::invalid_argument("LatticePoint: dimension mismatch");
  }

  std::vector<Integer> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << p.to_string(); }

inline Integer dot(const std::vector<Integer>& a, const LatticePoint& x) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const {
    std::size_t h = p.size();
    for (const auto& c : p) h = h * 1000003u ^ hash_integer(c);
    return h;
  }
};

}  // namespace castelnuovo
