#include <castelnuovo/linalg.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace castelnuovo {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? cols : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

namespace {

// Bareiss forward elimination restricted to the first `pivot_cols` columns.
// Returns the pivot column of each pivot row; `sign` tracks row swaps.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a, std::size_t pivot_cols, int& sign) {
  std::vector<std::size_t> pivots;
  Integer prev(1);
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = m;
  int sign = 1;
  return bareiss_echelon(a, a.cols(), sign).size();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return Integer(1);
  IntMatrix a = m;
  int sign = 1;
  auto pivots = bareiss_echelon(a, a.cols(), sign);
  if (pivots.size() < a.rows()) return Integer(0);
  Integer d = a(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? Integer(-d) : d;
}

std::optional<RationalVector> solve(const IntMatrix& a, const RationalVector& b) {
  if (a.empty()) throw std::invalid_argument("solve: empty matrix");
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");

  Integer scale(1);
  for (const auto& q : b) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());

  const std::size_t n = a.cols();
  IntMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    Rational scaled = b[i] * Rational(scale);
    aug(i, n) = scaled.get_num();
  }

  int sign = 1;
  const auto pivots = bareiss_echelon(aug, n, sign);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug(i, n) != 0) return std::nullopt;

  RationalVector x(n, Rational(0));
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Rational acc(aug(k, n));
    for (std::size_t j = c + 1; j < n; ++j)
      if (x[j] != 0) acc -= Rational(aug(k, j)) * x[j];
    x[c] = acc / Rational(aug(k, c));
  }
  for (auto& v : x) {
    v /= Rational(scale);
    v.canonicalize();
  }
  return x;
}

SnfResult snf(const IntMatrix& m) {
  if (m.empty()) throw std::invalid_argument("snf: empty matrix");

  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    a.swap_rows(t, i);
    u.swap_rows(t, i);
    a.swap_cols(t, j);
    v.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    move_to(t, best->first, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = truncated_quotient(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = truncated_quotient(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote the smallest one.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        move_to(t, bi, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, Integer(1));
      u.add_row_multiple(t, *offending, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult result;
  result.d.reserve(diag);
  for (std::size_t i = 0; i < diag; ++i) result.d.push_back(a(i, i));
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

}  // namespace castelnuovo
