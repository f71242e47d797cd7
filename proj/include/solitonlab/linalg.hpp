#pragma once

// Small exact vectors/matrices and an exact affine solver with canonical
// (RREF-derived) solution-set descriptions.

#include "solitonlab/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace solitonlab {

using VecQ = std::vector<Rat>;

/// Component vector on the frame {e1, e2, e3}; index 0 is e1.
struct Vec3 {
  std::array<Rat, 3> c{};

  Rat& operator[](std::size_t i) { return c[i]; }
  const Rat& operator[](std::size_t i) const { return c[i]; }

  static Vec3 basis(std::size_t i) {
    Vec3 v;
    v.c[i] = 1;
    return v;
  }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return Vec3{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
  }
  friend Vec3 operator*(const Rat& s, const Vec3& v) {
    return Vec3{{s * v[0], s * v[1], s * v[2]}};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Dense row-major rational matrix.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rat> values) {
    if (rows_ == 0 && entries_.empty()) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  VecQ operator*(std::span<const Rat> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    VecQ out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rat acc;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
      }
      out[r] = acc;
    }
    return out;
  }

  friend bool operator==(const MatQ&, const MatQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Reduced row echelon form, pivots chosen left to right. Returns pivot columns.
inline std::vector<std::size_t> rref_in_place(MatQ& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < pivot_cols && lead_row < m.rows(); ++col) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(lead_row, c));
    }
    const Rat inv = Rat(1) / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(lead_row, c).is_zero()) m(lead_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

inline std::size_t rank(MatQ m) { return rref_in_place(m, m.cols()).size(); }

enum class SolutionStatus { Empty, NonEmpty };

/// Solution set of A x = b: empty, or point + span(basis).
///
/// Canonical form: the point has every free variable set to zero, and basis
/// vector k has a 1 at the k-th free variable, 0 at the other free variables.
/// Free variables are the non-pivot columns of RREF(A) with pivots chosen by
/// ascending index, so equal sets compare equal structurally.
struct AffineSolutionSet {
  SolutionStatus status = SolutionStatus::Empty;
  std::optional<VecQ> point;
  std::vector<VecQ> basis;
  bool canonical = true;

  bool empty() const { return status == SolutionStatus::Empty; }
  std::size_t dimension() const { return basis.size(); }

  static AffineSolutionSet make_empty() { return {}; }

  friend bool operator==(const AffineSolutionSet& a, const AffineSolutionSet& b) {
    return a.status == b.status && a.point == b.point && a.basis == b.basis;
  }

  /// Canonical set for point + span(generators). Generators may be dependent.
  static AffineSolutionSet from_generators(const VecQ& point, const std::vector<VecQ>& generators);

  /// True iff x lies in the set.
  bool contains(std::span<const Rat> x) const;
};

inline AffineSolutionSet solve_affine(const MatQ& a, std::span<const Rat> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: dimension mismatch");
  const std::size_t n = a.cols();
  MatQ aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return AffineSolutionSet::make_empty();
  }
  AffineSolutionSet out;
  out.status = SolutionStatus::NonEmpty;
  VecQ point(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) point[pivots[r]] = aug(r, n);
  out.point = std::move(point);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VecQ v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

/// Basis of {x : M x = 0}, canonical free-variable form.
inline std::vector<VecQ> nullspace(const MatQ& m) {
  const VecQ zero(m.rows());
  return solve_affine(m, zero).basis;
}

inline AffineSolutionSet AffineSolutionSet::from_generators(const VecQ& point,
                                                            const std::vector<VecQ>& generators) {
  const std::size_t n = point.size();
  MatQ gen(0, n);
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("from_generators: dimension mismatch");
    gen.append_row(g);
  }
  // The set is cut out by the annihilator of span(generators).
  MatQ constraints(0, n);
  if (generators.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      VecQ e(n);
      e[i] = 1;
      constraints.append_row(e);
    }
  } else {
    for (const auto& row : nullspace(gen)) constraints.append_row(row);
  }
  return solve_affine(constraints, constraints * point);
}

inline bool AffineSolutionSet::contains(std::span<const Rat> x) const {
  if (empty()) return false;
  const std::size_t n = point->size();
  if (x.size() != n) return false;
  // x - point must be in span(basis); with canonical basis the free
  // coordinates of the difference determine the combination.
  VecQ diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - (*point)[i];
  MatQ cols(n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) cols(i, k) = basis[k][i];
  }
  if (basis.empty()) {
    for (const auto& d : diff) {
      if (!d.is_zero()) return false;
    }
    return true;
  }
  return !solve_affine(cols, diff).empty();
}

/// For an inconsistent A x = b, a row weight vector y with yᵀA = 0 and yᵀb = 1.
/// Returns nullopt when the system is consistent.
inline std::optional<VecQ> inconsistency_certificate(const MatQ& a, std::span<const Rat> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("certificate: dimension mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // [A | b | I] tracks the row combinations applied during elimination.
  MatQ aug(m, n + 1 + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
    aug(r, n + 1 + r) = 1;
  }
  const auto pivots = rref_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < m; ++r) {
    if (aug(r, n).is_zero()) continue;
    const Rat scale = Rat(1) / aug(r, n);
    VecQ y(m);
    for (std::size_t k = 0; k < m; ++k) y[k] = aug(r, n + 1 + k) * scale;
    return y;
  }
  return std::nullopt;
}

/// Checks yᵀA = 0 and yᵀb = 1 exactly.
inline bool check_certificate(const MatQ& a, std::span<const Rat> b, std::span<const Rat> y) {
  if (y.size() != a.rows() || b.size() != a.rows()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rat acc;
    for (std::size_t r = 0; r < a.rows(); ++r) acc += y[r] * a(r, c);
    if (!acc.is_zero()) return false;
  }
  Rat rhs;
  for (std::size_t r = 0; r < a.rows(); ++r) rhs += y[r] * b[r];
  return rhs == Rat(1);
}

inline std::string render(const VecQ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string render(const AffineSolutionSet& s) {
  if (s.empty()) return "empty";
  std::string out = render(*s.point);
  for (const auto& b : s.basis) out += " + t*" + render(b);
  return out;
}

}  // namespace solitonlab
