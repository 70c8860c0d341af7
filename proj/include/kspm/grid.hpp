#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kspm {

using Index = Eigen::Index;

struct Params {
  int p = 2;
  explicit Params(int p_ = 2) : p(p_) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
  }
};

struct NegativeHeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column heights x_1..x_n; x_0 plateau equals x_1, x_{n+1..} are 0.
template <typename Scalar = int>
struct Config1D {
  using Vector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  int p = 2;
  Vector x;  // x(0) holds x_1

  Config1D() = default;
  Config1D(int p_, Vector x_) : p(Params(p_).p), x(std::move(x_)) {}
  Config1D(int p_, const std::vector<Scalar>& v) : p(Params(p_).p), x(Vector::Map(v.data(), Index(v.size()))) {}

  Index n() const { return x.size(); }
  // 1-based, with the boundary convention
  Scalar operator[](Index i) const {
    if (x.size() == 0) return 0;
    if (i < 1) return x(0);
    if (i > x.size()) return 0;
    return x(i - 1);
  }
  void trim() {
    Index n = x.size();
    while (n > 1 && x(n - 1) == 0) --n;
    x.conservativeResize(std::max<Index>(n, 1));
  }
  bool operator==(const Config1D& o) const { return p == o.p && x.size() == o.x.size() && (x == o.x).all(); }
};

// h(0) is the plateau difference h_0, h(i) = x_i - x_{i+1}.
template <typename Scalar = int>
struct HeightDiff1D {
  using Vector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  int p = 2;
  Vector h;

  HeightDiff1D() = default;
  HeightDiff1D(int p_, Vector h_) : p(Params(p_).p), h(std::move(h_)) {}
  HeightDiff1D(int p_, const std::vector<Scalar>& v) : p(Params(p_).p), h(Vector::Map(v.data(), Index(v.size()))) {}

  Index m() const { return h.size() - 1; }
  Scalar operator[](Index i) const { return (i < 0 || i >= h.size()) ? Scalar(0) : h(i); }
  void reserve_to(Index i) {
    if (i >= h.size()) {
      Index old = h.size();
      h.conservativeResize(i + 1);
      h.tail(i + 1 - old).setZero();
    }
  }
  bool operator==(const HeightDiff1D& o) const { return p == o.p && h.size() == o.h.size() && (h == o.h).all(); }
};

// Grid with i increasing east, j increasing north; storage a(j, i).
template <typename Scalar = int>
class Config2D {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Config2D() : p_(2), a_(Array::Zero(1, 1)) {}
  Config2D(int p, Index rows, Index cols) : p_(Params(p).p), a_(Array::Zero(rows, cols)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("extents must be at least 1");
  }
  Config2D(int p, Array a) : p_(Params(p).p), a_(std::move(a)) {
    if (a_.rows() < 1 || a_.cols() < 1) throw std::invalid_argument("extents must be at least 1");
  }

  // rows listed north-first, as printed
  static Config2D from_rows(int p, const std::vector<std::vector<Scalar>>& rows_north_first) {
    Index r = Index(rows_north_first.size());
    Index c = r ? Index(rows_north_first[0].size()) : 0;
    Config2D g(p, r, c);
    for (Index k = 0; k < r; ++k) {
      if (Index(rows_north_first[k].size()) != c) throw std::invalid_argument("ragged rows");
      for (Index i = 0; i < c; ++i) g.a_(r - 1 - k, i) = rows_north_first[k][i];
    }
    return g;
  }

  int p() const { return p_; }
  Index rows() const { return a_.rows(); }
  Index cols() const { return a_.cols(); }
  bool inside(Index i, Index j) const { return i >= 0 && j >= 0 && i < cols() && j < rows(); }

  Scalar at(Index i, Index j) const { return inside(i, j) ? a_(j, i) : Scalar(0); }
  Scalar& ref(Index i, Index j) {
    ensure(i + 1, j + 1);
    return a_(j, i);
  }

  // grow to at least cols x rows, new cells 0
  void ensure(Index cols_needed, Index rows_needed) {
    Index r = std::max(rows(), rows_needed), c = std::max(cols(), cols_needed);
    if (r == rows() && c == cols()) return;
    Array b = Array::Zero(r, c);
    b.topLeftCorner(rows(), cols()) = a_;
    a_.swap(b);
  }

  const Array& cells() const { return a_; }
  Array& cells() { return a_; }

  std::vector<std::vector<Scalar>> rows_north_first() const {
    std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(rows()), std::vector<Scalar>(static_cast<std::size_t>(cols())));
    for (Index j = 0; j < rows(); ++j)
      for (Index i = 0; i < cols(); ++i) out[std::size_t(rows() - 1 - j)][std::size_t(i)] = a_(j, i);
    return out;
  }

  Scalar total() const { return a_.sum(); }

  // smallest extents that still hold every nonzero cell (never below 1x1)
  std::pair<Index, Index> support_extent() const {
    Index r = 0, c = 0;
    for (Index j = 0; j < rows(); ++j)
      for (Index i = 0; i < cols(); ++i)
        if (a_(j, i) != 0) {
          r = std::max(r, j + 1);
          c = std::max(c, i + 1);
        }
    return {std::max<Index>(r, 1), std::max<Index>(c, 1)};
  }

  // content equality with implicit zero padding
  bool same_content(const Config2D& o) const {
    Index r = std::max(rows(), o.rows()), c = std::max(cols(), o.cols());
    for (Index j = 0; j < r; ++j)
      for (Index i = 0; i < c; ++i)
        if (at(i, j) != o.at(i, j)) return false;
    return true;
  }
  bool operator==(const Config2D& o) const {
    return p_ == o.p_ && rows() == o.rows() && cols() == o.cols() && (a_ == o.a_).all();
  }

 private:
  int p_;
  Array a_;
};

using Grid = Config2D<int>;

template <typename Scalar>
HeightDiff1D<Scalar> to_height_diffs(const Config1D<Scalar>& c) {
  typename HeightDiff1D<Scalar>::Vector h(c.n() + 1);
  h(0) = 0;
  for (Index i = 1; i <= c.n(); ++i) h(i) = c[i] - c[i + 1];
  return {c.p, h};
}

template <typename Scalar>
Config1D<Scalar> from_height_diffs(const HeightDiff1D<Scalar>& d) {
  Index m = std::max<Index>(d.m(), 1);
  typename Config1D<Scalar>::Vector x(m);
  Scalar acc = 0;
  for (Index i = m; i >= 1; --i) {
    acc += d[i];
    if (acc < 0) throw NegativeHeight("reconstructed height at column " + std::to_string(i) + " is negative");
    x(i - 1) = acc;
  }
  return {d.p, x};
}

template <typename Scalar>
bool is_monotone_1d(const Config1D<Scalar>& c) {
  for (Index i = 1; i <= c.n(); ++i)
    if (c[i] < 0 || c[i] < c[i + 1]) return false;
  return true;
}

template <typename Scalar>
bool is_stable_1d(const HeightDiff1D<Scalar>& d) {
  return d.h.size() == 0 || (d.h < Scalar(d.p)).all();
}

template <typename Scalar>
bool is_stable_1d(const Config1D<Scalar>& c) {
  return is_stable_1d(to_height_diffs(c));
}

template <typename Scalar>
Scalar h_horizontal(const Config2D<Scalar>& c, Index i, Index j) {
  return c.at(i, j) - c.at(i + 1, j);
}

template <typename Scalar>
Scalar h_vertical(const Config2D<Scalar>& c, Index i, Index j) {
  return c.at(i, j) - c.at(i, j + 1);
}

template <typename Scalar>
bool is_monotone_2d(const Config2D<Scalar>& c) {
  for (Index j = 0; j < c.rows(); ++j)
    for (Index i = 0; i < c.cols(); ++i)
      if (c.at(i, j) < 0 || h_horizontal(c, i, j) < 0 || h_vertical(c, i, j) < 0) return false;
  return true;
}

template <typename Scalar>
bool is_stable_2d(const Config2D<Scalar>& c) {
  for (Index j = 0; j < c.rows(); ++j)
    for (Index i = 0; i < c.cols(); ++i)
      if (h_horizontal(c, i, j) >= c.p() || h_vertical(c, i, j) >= c.p()) return false;
  return true;
}

template <typename Scalar>
Scalar sum_height_diffs(const Config2D<Scalar>& c) {
  Scalar q = 0;
  for (Index j = 0; j < c.rows(); ++j)
    for (Index i = 0; i < c.cols(); ++i) q += h_horizontal(c, i, j) + h_vertical(c, i, j);
  return q;
}

// grain at column 1: only h_1 moves
template <typename Scalar>
HeightDiff1D<Scalar> add_grain(HeightDiff1D<Scalar> d) {
  d.reserve_to(1);
  d.h(1) += 1;
  return d;
}

template <typename Scalar>
Config1D<Scalar> add_grain(Config1D<Scalar> c) {
  if (c.n() == 0) c.x = Config1D<Scalar>::Vector::Zero(1);
  c.x(0) += 1;
  return c;
}

}  // namespace kspm
