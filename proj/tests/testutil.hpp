#pragma once

#include <random>
#include <vector>

#include "laguerre3/bridge.hpp"
#include "laguerre3/cubics.hpp"
#include "laguerre3/projline.hpp"
#include "laguerre3/ternion.hpp"

namespace lagtest {

using namespace laguerre3;

// Deterministic generator for exact test data; all values are small
// rationals so products stay readable.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  Rational rat(long span = 9, long maxden = 4) {
    return Rational(integer(-span, span), integer(1, maxden));
  }

  Rational nonzero_rat(long span = 9, long maxden = 4) {
    Rational r;
    do {
      r = rat(span, maxden);
    } while (r.is_zero());
    return r;
  }

  Ternion ternion() { return Ternion(rat(), rat(), rat()); }
  Ternion unit_ternion() { return Ternion(nonzero_rat(), rat(), rat()); }
  Ternion nilpotent() { return Ternion(Rational(0), rat(), rat()); }

  ProjPoint proper_point() { return ProjPoint::proper(ternion()); }
  ProjPoint improper_point() { return ProjPoint::improper(nilpotent()); }

  // Three mutually distant points: pairwise-distinct real parts, with an
  // improper member half of the time (two improper points are parallel).
  std::array<ProjPoint, 3> distant_triple() {
    long x1 = integer(-20, 20), x2, x3;
    do {
      x2 = integer(-20, 20);
    } while (x2 == x1);
    do {
      x3 = integer(-20, 20);
    } while (x3 == x1 || x3 == x2);
    ProjPoint p = ProjPoint::proper(Ternion(Rational(x1), rat(), rat()));
    ProjPoint q = ProjPoint::proper(Ternion(Rational(x2), rat(), rat()));
    if (integer(0, 1) == 0) return {p, q, ProjPoint::proper(Ternion(Rational(x3), rat(), rat()))};
    return {p, q, improper_point()};
  }

  NormalForm normal_form(ChainKind kind) {
    switch (kind) {
      case ChainKind::Line:
        return NormalForm::line(rat(), rat(), rat(), rat());
      case ChainKind::Parabola:
        return NormalForm::parabola(rat(), rat(), rat(), rat(), nonzero_rat());
      case ChainKind::CubicParabola: {
        Rational a22 = nonzero_rat();
        return NormalForm::cubic_parabola(rat(), rat(), a22, rat(), rat(), rat(), a22 * a22);
      }
    }
    return NormalForm::line();
  }

  NormalForm any_normal_form() {
    switch (integer(0, 2)) {
      case 0: return normal_form(ChainKind::Line);
      case 1: return normal_form(ChainKind::Parabola);
      default: return normal_form(ChainKind::CubicParabola);
    }
  }

  Chain chain(ChainKind kind) { return chain_from_normal_form(normal_form(kind)); }

  // Random matrix of the requested Eq-pattern, leading entry 1, regular.
  Mat4 type_matrix(TypeBase base) {
    Mat4 m = Mat4::Identity();
    m(0, 1) = rat();
    m(0, 2) = rat();
    m(0, 3) = rat();
    m(1, 3) = rat();
    switch (base) {
      case TypeBase::I:
        m(1, 1) = nonzero_rat();
        m(2, 2) = m(1, 1);
        m(2, 3) = rat();
        m(3, 3) = nonzero_rat();
        break;
      case TypeBase::II:
        m(1, 1) = nonzero_rat();
        m(1, 2) = rat();
        m(2, 2) = nonzero_rat();
        m(3, 3) = m(2, 2);
        break;
      case TypeBase::III:
        m(0, 1) = Rational(0);
        m(1, 2) = rat();
        m(2, 2) = nonzero_rat();
        m(2, 3) = rat();
        m(3, 3) = nonzero_rat();
        break;
      case TypeBase::None:
        break;
    }
    return m;
  }

  // Type-I matrices at the exact refinement levels of the factorizations.
  Mat4 type_I_level(int level) {
    Mat4 m = type_matrix(TypeBase::I);
    if (level >= 1) m(3, 3) = m(1, 1);
    if (level >= 2) {
      m(1, 1) = Rational(1);
      m(2, 2) = Rational(1);
      m(3, 3) = Rational(1);
      m(2, 3) = -m(0, 1);
    }
    if (level >= 3) {
      m(0, 1) = Rational(0);
      m(2, 3) = Rational(0);
      m(1, 3) = Rational(2) * m(0, 2);
    }
    return m;
  }

  // Pattern matrix satisfying at least the first `level` table rows.
  Mat4 type_level(TypeBase base, int level) {
    if (base == TypeBase::I) return type_I_level(level);
    Mat4 m = type_matrix(base);
    if (base == TypeBase::II) {
      if (level >= 1) {
        m(2, 2) = m(1, 1);
        m(3, 3) = m(1, 1);
      }
      if (level >= 2) {
        m(1, 1) = m(2, 2) = m(3, 3) = Rational(1);
        m(0, 1) = Rational(2) * m(1, 2);
      }
      if (level >= 3) {
        m(1, 2) = Rational(0);
        m(0, 1) = Rational(0);
        m(1, 3) = Rational(2) * m(0, 2);
      }
    } else {
      if (level >= 1) m(3, 3) = m(2, 2) * m(2, 2);
      if (level >= 2) {
        m(2, 2) = Rational(1);
        m(3, 3) = Rational(1);
        m(2, 3) = Rational(2) * m(1, 2);
      }
      if (level >= 3) {
        m(1, 2) = Rational(0);
        m(2, 3) = Rational(0);
        m(1, 3) = Rational(2) * m(0, 2);
      }
    }
    return m;
  }

  // Reparametrization fixing the parameter (0,1) of f, i.e. upper triangular.
  Mat2 flag_reparam() {
    Mat2 m;
    m << nonzero_rat(), rat(), Rational(0), nonzero_rat();
    return m;
  }
};

// Full polynomial convolution, truncated afterwards; an oracle for the
// algebra product that does not share its code path.
inline Ternion convolve_truncate(const Ternion& a, const Ternion& b) {
  std::vector<Rational> full(5, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) full[i + j] += a.coeff(i) * b.coeff(j);
  return Ternion(full[0], full[1], full[2]);
}

inline Ternion eps() { return Ternion::eps(); }
inline Ternion eps2() { return Ternion::eps2(); }

inline Rational g1_form(const RowVec4& x) { return x(0) * x(3) - x(1) * x(2); }
inline Rational g2_form(const RowVec4& x) { return x(1) * x(3) - x(2) * x(2); }

}  // namespace lagtest
