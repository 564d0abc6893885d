#pragma once

#include <gmpxx.h>

#include <string>

#include "spinlocal/matrix.hpp"
#include "spinlocal/padic.hpp"

namespace spinlocal {

/// L_p = Q_p(sqrt D) for p not dividing 2D; split iff D is a square mod p.
class EtaleQuadratic {
 public:
  EtaleQuadratic(unsigned p, long D, int precision);

  unsigned prime() const { return p_; }
  long disc() const { return D_; }
  bool split() const { return split_; }
  int epsilon() const { return split_ ? 1 : -1; }
  int precision() const { return precision_; }
  /// Square root of D in Z_p (split only).
  const TruncatedPadic& h() const;

  LocalScalar scalar(const mpq_class& x) const { return LocalScalar(x, p_); }

 private:
  unsigned p_;
  long D_;
  bool split_;
  int precision_;
  TruncatedPadic h_;
};

/// x + y sqrt(D).
struct QuadElement {
  LocalScalar x, y;

  QuadElement conj() const { return {x, -y}; }
};

QuadElement quad(const EtaleQuadratic& L, const mpq_class& x, const mpq_class& y = 0);
QuadElement mul(const EtaleQuadratic& L, const QuadElement& a, const QuadElement& b);
QuadElement scale(const QuadElement& a, const LocalScalar& s);
LocalScalar norm(const EtaleQuadratic& L, const QuadElement& a);
/// v_p(N(l)); |l| = p^{-norm_valuation}.
int norm_valuation(const EtaleQuadratic& L, const QuadElement& a);

/// Inert: p^k. Split: pi_1^{e1} pi_2^{e2} with pi_1 -> (p, 1), pi_2 -> (1, p) under
/// the two embeddings sqrt(D) -> h and sqrt(D) -> -h.
QuadElement inert_power(const EtaleQuadratic& L, int k);
QuadElement split_power(const EtaleQuadratic& L, int e1, int e2);

/// m_l = [[x, D y], [y, x]].
LMat m_ell(const EtaleQuadratic& L, const QuadElement& l);

/// An integral ideal class of O_L up to units: p^k (inert) or pi_1^{e1} pi_2^{e2} (split).
struct EllClass {
  int e1 = 0;  // inert: the exponent k of p
  int e2 = 0;  // split only

  bool operator<(const EllClass& o) const { return e1 != o.e1 ? e1 < o.e1 : e2 < o.e2; }
  bool operator==(const EllClass& o) const { return e1 == o.e1 && e2 == o.e2; }
};

QuadElement ell_element(const EtaleQuadratic& L, const EllClass& c);
/// v_p(N(l)) of the class.
int ell_norm_valuation(const EtaleQuadratic& L, const EllClass& c);
std::string ell_label(const EtaleQuadratic& L, const EllClass& c);

}  // namespace spinlocal
