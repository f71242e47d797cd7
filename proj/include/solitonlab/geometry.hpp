#pragma once

// Left-invariant Lorentzian geometry on a 3-dimensional Lie group: Levi-Civita
// connection (Koszul formula), (0,4) curvature, Lie derivative of the metric,
// and the Kulkarni-Nomizu product.
//
// Conventions:
//   R(X,Y)Z      = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_[X,Y] Z
//   R(X,Y,Z,W)   = −g(R(X,Y)Z, W)

#include "solitonlab/lie_structure.hpp"
#include "solitonlab/linalg.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace solitonlab {

/// Symmetric bilinear form on the algebra, six stored components.
class SymBilinear {
 public:
  SymBilinear() = default;

  static SymBilinear diagonal(const Rat& t11, const Rat& t22, const Rat& t33) {
    SymBilinear s;
    s.at(0, 0) = t11;
    s.at(1, 1) = t22;
    s.at(2, 2) = t33;
    return s;
  }
  /// Components in the order t11, t12, t13, t22, t23, t33.
  static SymBilinear from_upper(const std::array<Rat, 6>& upper) {
    SymBilinear s;
    s.t_ = upper;
    return s;
  }

  Rat& at(std::size_t i, std::size_t j) { return t_[slot(i, j)]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return t_[slot(i, j)]; }

  Rat apply(const Vec3& x, const Vec3& y) const {
    Rat acc;
    for (std::size_t i = 0; i < 3; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (!y[j].is_zero() && !(*this)(i, j).is_zero()) acc += x[i] * y[j] * (*this)(i, j);
      }
    }
    return acc;
  }

  bool is_zero() const {
    for (const auto& v : t_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  const std::array<Rat, 6>& upper() const { return t_; }

  friend SymBilinear operator+(SymBilinear a, const SymBilinear& b) {
    for (std::size_t k = 0; k < 6; ++k) a.t_[k] += b.t_[k];
    return a;
  }
  friend SymBilinear operator*(const Rat& s, SymBilinear a) {
    for (auto& v : a.t_) v *= s;
    return a;
  }
  friend bool operator==(const SymBilinear&, const SymBilinear&) = default;

 private:
  static constexpr std::size_t slot(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    constexpr std::size_t row_start[3] = {0, 3, 5};
    return row_start[i] + (j - i);
  }
  std::array<Rat, 6> t_{};
};

/// The left-invariant metric g = diag(1, 1, −1) on the frame {e1, e2, e3}.
class Metric {
 public:
  static Metric lorentzian() { return Metric(SymBilinear::diagonal(1, 1, -1)); }

  const SymBilinear& form() const { return g_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
  /// Diagonal entry of g⁻¹ (the frame is pseudo-orthonormal).
  Rat inverse_diag(std::size_t k) const { return Rat(1) / g_(k, k); }
  Rat inner(const Vec3& x, const Vec3& y) const { return g_.apply(x, y); }

 private:
  explicit Metric(SymBilinear g) : g_(std::move(g)) {}
  SymBilinear g_;
};

/// Dense (0,4) tensor, 81 components.
class Tensor4 {
 public:
  Rat& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return t_[idx(i, j, k, l)]; }
  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return t_[idx(i, j, k, l)];
  }
  bool is_zero() const {
    for (const auto& v : t_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) {
    for (std::size_t n = 0; n < 81; ++n) a.t_[n] += b.t_[n];
    return a;
  }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) {
    for (std::size_t n = 0; n < 81; ++n) a.t_[n] -= b.t_[n];
    return a;
  }
  friend Tensor4 operator*(const Rat& s, Tensor4 a) {
    for (auto& v : a.t_) v *= s;
    return a;
  }
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  static constexpr std::size_t idx(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * 3 + j) * 3 + k) * 3 + l;
  }
  std::array<Rat, 81> t_{};
};

/// ∇_{e_i} e_j = Σ_k gamma(i, j, k) e_k.
class Connection {
 public:
  Rat& at(std::size_t i, std::size_t j, std::size_t k) { return g_[(i * 3 + j) * 3 + k]; }
  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const { return g_[(i * 3 + j) * 3 + k]; }

  Vec3 nabla_basis(std::size_t i, std::size_t j) const {
    return Vec3{{(*this)(i, j, 0), (*this)(i, j, 1), (*this)(i, j, 2)}};
  }

  /// ∇_X Y for left-invariant X, Y (constant components).
  Vec3 nabla(const Vec3& x, const Vec3& y) const {
    Vec3 out;
    for (std::size_t i = 0; i < 3; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (y[j].is_zero()) continue;
        const Rat w = x[i] * y[j];
        for (std::size_t k = 0; k < 3; ++k) {
          if (!(*this)(i, j, k).is_zero()) out[k] += w * (*this)(i, j, k);
        }
      }
    }
    return out;
  }

 private:
  std::array<Rat, 27> g_{};
};

/// Koszul formula for left-invariant fields:
/// 2 g(∇_X Y, Z) = g([X,Y],Z) − g([Y,Z],X) + g([Z,X],Y).
inline Connection levi_civita(const StructureConstants& sc, const Metric& g) {
  Connection conn;
  const Rat half(BigInt(1), BigInt(2));
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3 ei = Vec3::basis(i);
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3 ej = Vec3::basis(j);
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec3 ek = Vec3::basis(k);
        const Rat lowered = half * (g.inner(bracket(sc, ei, ej), ek) - g.inner(bracket(sc, ej, ek), ei) +
                                    g.inner(bracket(sc, ek, ei), ej));
        conn.at(i, j, k) = lowered * g.inverse_diag(k);
      }
    }
  }
  return conn;
}

/// Fully covariant curvature with the sign convention stated at the top of
/// this file. The tensor satisfies the algebraic curvature identities.
class Curvature4 {
 public:
  explicit Curvature4(Tensor4 r) : r_(std::move(r)) {}

  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r_(i, j, k, l);
  }
  const Tensor4& tensor() const { return r_; }

  /// R1212, R1313, R2323, R1213, R1223, R1323.
  std::array<Rat, 6> independent() const {
    return {r_(0, 1, 0, 1), r_(0, 2, 0, 2), r_(1, 2, 1, 2), r_(0, 1, 0, 2), r_(0, 1, 1, 2), r_(0, 2, 1, 2)};
  }

 private:
  Tensor4 r_;
};

inline constexpr std::array<const char*, 6> kIndependentCurvatureNames{"R1212", "R1313", "R2323",
                                                                       "R1213", "R1223", "R1323"};

inline Curvature4 curvature(const Connection& conn, const StructureConstants& sc, const Metric& g) {
  Tensor4 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;  // R(X,X) = 0
      const Vec3 bij = sc.bracket_of_basis(i, j);
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec3 ek = Vec3::basis(k);
        const Vec3 rxyz = conn.nabla(Vec3::basis(i), conn.nabla_basis(j, k)) -
                          conn.nabla(Vec3::basis(j), conn.nabla_basis(i, k)) - conn.nabla(bij, ek);
        for (std::size_t l = 0; l < 3; ++l) r.at(i, j, k, l) = -g.inner(rxyz, Vec3::basis(l));
      }
    }
  }
  return Curvature4(std::move(r));
}

inline Curvature4 curvature(const StructureConstants& sc, const Metric& g) {
  return curvature(levi_civita(sc, g), sc, g);
}

/// (L_V g)(e_i, e_j) = −g([V,e_i], e_j) − g(e_i, [V,e_j]).
inline SymBilinear lie_derivative_metric(const StructureConstants& sc, const Metric& g, const Vec3& v) {
  SymBilinear out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const Vec3 ei = Vec3::basis(i), ej = Vec3::basis(j);
      out.at(i, j) = -g.inner(bracket(sc, v, ei), ej) - g.inner(ei, bracket(sc, v, ej));
    }
  }
  return out;
}

/// Same quantity through the connection: g(∇_{e_i}V, e_j) + g(e_i, ∇_{e_j}V).
inline SymBilinear lie_derivative_metric_via_connection(const Connection& conn, const Metric& g,
                                                        const Vec3& v) {
  SymBilinear out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const Vec3 ei = Vec3::basis(i), ej = Vec3::basis(j);
      out.at(i, j) = g.inner(conn.nabla(ei, v), ej) + g.inner(ei, conn.nabla(ej, v));
    }
  }
  return out;
}

/// (T1∧T2)(X,Y,Z,W) = T1(X,W)T2(Y,Z) + T1(Y,Z)T2(X,W) − T1(X,Z)T2(Y,W) − T1(Y,W)T2(X,Z).
inline Tensor4 kulkarni_nomizu(const SymBilinear& t1, const SymBilinear& t2) {
  Tensor4 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) {
          out.at(i, j, k, l) =
              t1(i, l) * t2(j, k) + t1(j, k) * t2(i, l) - t1(i, k) * t2(j, l) - t1(j, l) * t2(i, k);
        }
      }
    }
  }
  return out;
}

}  // namespace solitonlab
