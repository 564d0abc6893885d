#pragma once

#include <string>

#include "spinlocal/matrix.hpp"
#include "spinlocal/quadratic.hpp"

namespace spinlocal {

enum class GroupTag { GSp6, GSp4, GL3, GL2, GL2LStar };

std::string to_string(GroupTag t);

LMat zero_matrix(unsigned p, std::size_t r, std::size_t c);
LMat identity_matrix(unsigned p, std::size_t n);
LMat diagonal(unsigned p, const std::vector<mpq_class>& d);
LMat block_diag(const LMat& a, const LMat& b);

/// S with (S^T X S)_{ij} = X_{s(i)s(j)}, s = (2,3,1).
LMat siegel_S(unsigned p);
/// Antidiagonal blocks (1, 1_2, -1_2, -1).
LMat J6(unsigned p);
/// [[0, 1_2], [-1_2, 0]].
LMat J4(unsigned p);

/// g J g^T == nu J for the form of matching size.
bool is_symplectic(const LMat& g, const LocalScalar& nu);
/// Similitude read off g J g^T; throws std::domain_error if g is not a similitude.
LocalScalar similitude(const LMat& g);

/// Square matrix with group tag and similitude (for symplectic tags).
struct GroupElement {
  LMat g;
  LocalScalar nu;
  GroupTag tag = GroupTag::GSp6;

  /// Checks the tag's defining identity exactly; throws std::domain_error.
  void validate(const EtaleQuadratic* L = nullptr) const;
};

/// diag(A, B) in the Siegel Levi of GSp6; A = nu S B^{-T} S^T.
struct SiegelLevi {
  LMat B;
  LocalScalar nu;

  LMat A() const;
  LMat full() const;
  unsigned prime() const { return nu.prime(); }
  SiegelLevi operator*(const SiegelLevi& o) const { return {B * o.B, nu * o.nu}; }
};

SiegelLevi siegel_from_A(const LMat& A, const LocalScalar& nu);
/// Reads a block-diagonal 6x6 similitude.
SiegelLevi siegel_from_full(const LMat& g);

/// iota(t, l) = diag(t, t m_l^{-T}, m_l, 1), similitude t.
SiegelLevi build_iota(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l);
SiegelLevi iota_class(const EtaleQuadratic& L, int r, const EllClass& c);
/// diag(1, 1, p, p, 1, p).
SiegelLevi tau(unsigned p);
/// p^k 1_6.
SiegelLevi central(unsigned p, int k);
/// diag(1_3, p 1_3) and diag(p 1_3, 1_3).
SiegelLevi lower_p(unsigned p);
SiegelLevi upper_p(unsigned p);
/// diag(p, 1, 1, p, p, 1) and diag(1, p, p, 1, 1, p).
SiegelLevi iota_shift_up(unsigned p);
SiegelLevi iota_shift_down(unsigned p);
/// T(u) = diag(1, u, p u^{-T}, p) and T'(u) = diag(p, u, p u^{-T}, 1).
SiegelLevi hecke_T(const LMat& u);
SiegelLevi hecke_Tprime(const LMat& u);

/// Embedding GL2 x GSp4 -> GSp6 of shape [[a,,,b],[,a',b',],[,c',d',],[c,,,d]].
LMat embed_gl2_gsp4(const LMat& g1, const LMat& g2);

/// The sqrt(D)-multiplication matrix on W4 whose centralizer is GL2(L)*.
LMat sqrtD_matrix(const EtaleQuadratic& L);
bool in_gl2l_star(const EtaleQuadratic& L, const LMat& g4);

/// Unipotents of the Siegel parabolic: [[1, Z S], [0, 1]], Z symmetric 3x3.
LMat siegel_unipotent(const LMat& Z);
/// n_v: A-block entries (1,2), (1,3) equal to v.
LMat n_v(unsigned p, const LocalScalar& v1, const LocalScalar& v2);
/// n_u: u (symmetric 2x2) at rows 2-3, columns 4-5.
LMat n_u(const LMat& u);

/// True iff n lies in U_R (blocks 1,2,2,1; unipotent block upper triangular, nu = 1).
bool in_unipotent_R(const LMat& n);
/// v_1 - D u_11 + u_22, the argument of psi in chi(n). Throws on non-U_R input.
LocalScalar chi_exponent(const LMat& n, long D);

}  // namespace spinlocal
