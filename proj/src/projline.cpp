#include "laguerre3/projline.hpp"

#include <Eigen/Dense>

#include <array>
#include <sstream>
#include <vector>

namespace laguerre3 {

ProjPoint::ProjPoint(const Ternion& u, const Ternion& v) {
  if (v.is_unit()) {
    u_ = u * invert(v);
    v_ = Ternion(1);
    proper_ = true;
  } else if (u.is_unit()) {
    u_ = Ternion(1);
    v_ = v * invert(u);
    proper_ = false;
  } else {
    throw DomainError(Err::NotAPoint, "pair is not admissible: neither entry is a unit");
  }
}

ProjPoint ProjPoint::improper(const Ternion& n) {
  if (n.is_unit())
    throw DomainError(Err::InvalidCoefficients, "improper parameter must lie in N");
  return ProjPoint(Ternion(1), n);
}

const Ternion& ProjPoint::proper_value() const {
  if (!proper_) throw DomainError(Err::AtInfinity, "improper point has no proper value");
  return u_;
}

const Ternion& ProjPoint::improper_param() const {
  if (proper_) throw DomainError(Err::AtInfinity, "proper point has no improper parameter");
  return v_;
}

std::string to_string(const ProjPoint& p) {
  return "L(" + to_string(p.u()) + "; " + to_string(p.v()) + ")";
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << to_string(p);
}

bool is_parallel(const ProjPoint& p, const ProjPoint& q) {
  Ternion det = p.u() * q.v() - p.v() * q.u();
  return !det.is_unit();
}

ProjPoint apply(const TMat2& m, const ProjPoint& p) {
  if (!is_invertible(m)) throw DomainError(Err::SingularMatrix, "action matrix is singular");
  return ProjPoint(p.u() * m(0, 0) + p.v() * m(1, 0), p.u() * m(0, 1) + p.v() * m(1, 1));
}

const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::Line: return "line";
    case ChainKind::Parabola: return "parabola";
    case ChainKind::CubicParabola: return "cubic-parabola";
  }
  return "?";
}

NormalForm NormalForm::line(Rational a02, Rational a12, Rational a03, Rational a13) {
  NormalForm nf;
  nf.kind = ChainKind::Line;
  nf.a02 = std::move(a02);
  nf.a12 = std::move(a12);
  nf.a03 = std::move(a03);
  nf.a13 = std::move(a13);
  return nf;
}

NormalForm NormalForm::parabola(Rational a02, Rational a12, Rational a03, Rational a13,
                                Rational a33) {
  NormalForm nf = line(std::move(a02), std::move(a12), std::move(a03), std::move(a13));
  nf.kind = ChainKind::Parabola;
  nf.a33 = std::move(a33);
  return nf;
}

NormalForm NormalForm::cubic_parabola(Rational a02, Rational a12, Rational a22,
                                      Rational a03, Rational a13, Rational a23,
                                      Rational a33) {
  NormalForm nf = line(std::move(a02), std::move(a12), std::move(a03), std::move(a13));
  nf.kind = ChainKind::CubicParabola;
  nf.a22 = std::move(a22);
  nf.a23 = std::move(a23);
  nf.a33 = std::move(a33);
  return nf;
}

bool NormalForm::valid() const {
  switch (kind) {
    case ChainKind::Line:
      return a22.is_zero() && a23.is_zero() && a33.is_zero();
    case ChainKind::Parabola:
      return a22.is_zero() && a23.is_zero() && !a33.is_zero();
    case ChainKind::CubicParabola:
      return !a22.is_zero() && a33 == a22 * a22;
  }
  return false;
}

Ternion eval(const NormalForm& nf, const Rational& t) {
  // In the parabola form a33 names the t^2 coefficient of x3; in the cubic
  // form the t^2 coefficient is a23 and a33 sits at t^3.
  Rational x2 = nf.a02 + nf.a12 * t + nf.a22 * t * t;
  Rational x3 = nf.a03 + nf.a13 * t;
  if (nf.kind == ChainKind::Parabola)
    x3 += nf.a33 * t * t;
  else
    x3 += nf.a23 * t * t + nf.a33 * t * t * t;
  return Ternion(t, x2, x3);
}

ProjPoint improper_point_of(const NormalForm& nf) {
  switch (nf.kind) {
    case ChainKind::Line:
      return ProjPoint::infinity();
    case ChainKind::Parabola:
      return ProjPoint::improper(Ternion(Rational(0), Rational(0), -nf.a33));
    case ChainKind::CubicParabola:
      return ProjPoint::improper(
          Ternion(Rational(0), -nf.a22, -nf.a23 + Rational(2) * nf.a12 * nf.a22));
  }
  throw DomainError(Err::InternalInconsistency, "unknown chain kind");
}

Chain::Chain(const TMat2& m) : m_(m) {
  if (!is_invertible(m_))
    throw DomainError(Err::SingularMatrix, "chain matrix must be invertible over the algebra");
}

Chain::Chain(const Chain& o) : m_(o.m_) {
  const NormalForm* nf = o.cache_.load(std::memory_order_acquire);
  if (nf) cache_.store(new NormalForm(*nf), std::memory_order_release);
}

Chain& Chain::operator=(const Chain& o) {
  if (this == &o) return *this;
  m_ = o.m_;
  delete cache_.exchange(nullptr);
  const NormalForm* nf = o.cache_.load(std::memory_order_acquire);
  if (nf) cache_.store(new NormalForm(*nf), std::memory_order_release);
  return *this;
}

Chain::~Chain() { delete cache_.load(); }

Chain Chain::embedded_real() {
  TMat2 id;
  id << Ternion(1), Ternion(0), Ternion(0), Ternion(1);
  return Chain(id);
}

ProjPoint Chain::point_at(const Rational& s, const Rational& t) const {
  if (s.is_zero() && t.is_zero())
    throw DomainError(Err::BothZero, "(0,0) does not define a point");
  Ternion rs(s), rt(t);
  return ProjPoint(rs * m_(0, 0) + rt * m_(1, 0), rs * m_(0, 1) + rt * m_(1, 1));
}

ProjPoint Chain::improper_point() const {
  // The second coordinate of (s,t)*M is s*b + t*d; it is a non-unit exactly
  // when s*Re(b) + t*Re(d) = 0, a rank-1 condition since Re(det) != 0.
  const Rational& rb = real_part(m_(0, 1));
  const Rational& rd = real_part(m_(1, 1));
  if (rb.is_zero() && rd.is_zero())
    throw DomainError(Err::InternalInconsistency, "invertible chain matrix with no improper direction");
  ProjPoint p = point_at(rd, -rb);
  if (!p.is_improper())
    throw DomainError(Err::InternalInconsistency, "improper direction produced a proper point");
  return p;
}

bool Chain::contains(const ProjPoint& p) const {
  ProjPoint q = apply(invert2(m_), p);
  if (q.is_proper()) return q.proper_value().is_real();
  return q.improper_param().is_zero();
}

namespace {

struct Sample {
  Rational x1, x2, x3;
};

// Proper points of the chain at parameters tau from a fixed ladder, skipping
// the single improper direction. x1 values are pairwise distinct because
// Re((a + tau c)(b + tau d)^-1) is an injective real Moebius function of tau.
std::vector<Sample> proper_samples(const Chain& c, std::size_t count) {
  static const long ladder[] = {0, 1, -1, 2, -2, 3, -3, 5, 7, 11, 13, 17, -5, -7, -11, -13};
  std::vector<Sample> out;
  for (long tau : ladder) {
    if (out.size() == count) break;
    ProjPoint p = c.point_at(Rational(1), Rational(tau));
    if (!p.is_proper()) continue;
    const Ternion& z = p.proper_value();
    out.push_back({z.c0(), z.c1(), z.c2()});
  }
  if (out.size() != count)
    throw DomainError(Err::InternalInconsistency, "could not sample enough proper points");
  return out;
}

const NormalForm* compute_normal_form(const Chain& c) {
  std::vector<Sample> pts = proper_samples(c, 8);

  Mat3 vp;
  ColVec3 rp;
  for (int i = 0; i < 3; ++i) {
    vp(i, 0) = Rational(1);
    vp(i, 1) = pts[i].x1;
    vp(i, 2) = pts[i].x1 * pts[i].x1;
    rp(i) = pts[i].x2;
  }
  ColVec3 p = vp.inverse() * rp;

  Mat4 vq;
  ColVec4 rq;
  for (int i = 0; i < 4; ++i) {
    vq(i, 0) = Rational(1);
    vq(i, 1) = pts[i].x1;
    vq(i, 2) = pts[i].x1 * pts[i].x1;
    vq(i, 3) = pts[i].x1 * pts[i].x1 * pts[i].x1;
    rq(i) = pts[i].x3;
  }
  ColVec4 q = vq.inverse() * rq;

  for (const Sample& s : pts) {
    Rational fit2 = p(0) + p(1) * s.x1 + p(2) * s.x1 * s.x1;
    Rational fit3 = q(0) + q(1) * s.x1 + q(2) * s.x1 * s.x1 + q(3) * s.x1 * s.x1 * s.x1;
    if (fit2 != s.x2 || fit3 != s.x3)
      throw DomainError(Err::InternalInconsistency,
                        "chain samples do not satisfy a degree-(2,3) polynomial relation");
  }

  NormalForm nf;
  if (p(2).is_zero() && q(2).is_zero() && q(3).is_zero()) {
    nf = NormalForm::line(p(0), p(1), q(0), q(1));
  } else if (p(2).is_zero() && q(3).is_zero()) {
    nf = NormalForm::parabola(p(0), p(1), q(0), q(1), q(2));
  } else if (!p(2).is_zero() && q(3) == p(2) * p(2)) {
    nf = NormalForm::cubic_parabola(p(0), p(1), p(2), q(0), q(1), q(2), q(3));
  } else {
    throw DomainError(Err::InternalInconsistency, "fitted chain relation matches no normal form");
  }
  if (!nf.valid())
    throw DomainError(Err::InternalInconsistency, "derived normal form violates its invariant");
  return new NormalForm(nf);
}

}  // namespace

const NormalForm& Chain::normal_form() const {
  const NormalForm* nf = cache_.load(std::memory_order_acquire);
  if (nf) return *nf;
  const NormalForm* fresh = compute_normal_form(*this);
  const NormalForm* expected = nullptr;
  if (!cache_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
    delete fresh;
    return *expected;
  }
  return *fresh;
}

NormalForm classify(const Chain& c) { return c.normal_form(); }

Chain chain_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (is_parallel(p, q) || is_parallel(q, r) || is_parallel(p, r))
    throw DomainError(Err::NotMutuallyDistant, "chain_through requires mutually distant points");
  // lambda * p + mu * q = r over the algebra, by Cramer's rule; the divisor
  // is a unit by distance of p and q, and lambda, mu are units by distance
  // of r from q and p.
  Ternion d = p.u() * q.v() - p.v() * q.u();
  Ternion di = invert(d);
  Ternion lambda = (r.u() * q.v() - r.v() * q.u()) * di;
  Ternion mu = (p.u() * r.v() - p.v() * r.u()) * di;
  if (!lambda.is_unit() || !mu.is_unit())
    throw DomainError(Err::InternalInconsistency, "distant points produced non-unit coordinates");
  TMat2 m;
  m << lambda * p.u(), lambda * p.v(), mu * q.u(), mu * q.v();
  return Chain(m);
}

Chain chain_from_normal_form(const NormalForm& nf) {
  if (!nf.valid())
    throw DomainError(Err::InvalidCoefficients, "normal form violates its kind invariant");
  ProjPoint at_inf = improper_point_of(nf);
  ProjPoint z0 = ProjPoint::proper(eval(nf, Rational(0)));
  ProjPoint z1 = ProjPoint::proper(eval(nf, Rational(1)));
  return chain_through(at_inf, z0, z1);
}

Chain apply_chain(const TMat2& m, const Chain& c) {
  if (!is_invertible(m)) throw DomainError(Err::SingularMatrix, "action matrix is singular");
  return Chain(TMat2(c.matrix() * m));
}

bool same_chain(const Chain& a, const Chain& b) {
  TMat2 k = b.matrix() * invert2(a.matrix());
  Ternion unit_entry;
  bool found = false;
  for (int i = 0; i < 2 && !found; ++i)
    for (int j = 0; j < 2 && !found; ++j)
      if (k(i, j).is_unit()) {
        unit_entry = k(i, j);
        found = true;
      }
  if (!found) return false;  // cannot happen for invertible k, kept as a guard
  Ternion s = invert(unit_entry);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(s * k(i, j)).is_real()) return false;
  return true;
}

}  // namespace laguerre3
