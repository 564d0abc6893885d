#pragma once

#include <gmpxx.h>

#include <vector>

#include "spinlocal/groups.hpp"
#include "spinlocal/quadratic.hpp"

namespace spinlocal {

/// delta_R = |nu|^6 |z|^{-6} |det y|^{-3} for a Levi element of R, given as a
/// Siegel-Levi element whose lower block is diag(y, z).
mpq_class modulus_R(const SiegelLevi& g);
/// delta_{P4} = |nu|^3 |det y|^{-3} for diag(nu y^{-T}, y) in GSp4.
mpq_class modulus_P4(const LocalScalar& nu, const LMat& y);
/// |t|^3 |l|^{-2} (|l| = |N l|) for iota(t, l).
mpq_class modulus_BL(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l);

/// coordinate = scale * X(i, j)
struct LieCoordinate {
  int i = 0, j = 0;
  mpq_class scale = 1;
};

/// |det Ad(m)| on the Z_p-lattice spanned by the basis, by counting
/// {X mod p^N : Ad(m)^{-1} X integral} and {X mod p^N : Ad(m) X integral}
/// on each Ad(m)-stable block of coordinates (their ratio is the index ratio).
mpq_class modulus_bruteforce(const LMat& m, const std::vector<LMat>& basis,
                             const std::vector<LieCoordinate>& coords, unsigned p);

/// Lie algebra basis of the unipotent radical of R in GSp6 with its coordinates
/// v1, v2, r1, r2, u11, u12, u22, and the corner entry.
void unipotent_R_basis(unsigned p, std::vector<LMat>& basis, std::vector<LieCoordinate>& coords);
/// Siegel unipotent of GSp4: u11, u12, u22.
void unipotent_P4_basis(unsigned p, std::vector<LMat>& basis, std::vector<LieCoordinate>& coords);
/// Unipotent radical of the Borel of GL2,L* inside GSp6 (coordinates x, y of l = x + y sqrt D),
/// optionally with the unipotent of the GL2 factor.
void unipotent_BL_basis(const EtaleQuadratic& L, bool with_gl2, std::vector<LMat>& basis,
                        std::vector<LieCoordinate>& coords);

mpq_class modulus_R_bruteforce(const SiegelLevi& g);
mpq_class modulus_P4_bruteforce(const LocalScalar& nu, const LMat& y);
/// with_gl2 = true is the Borel of GL2 x GL2,L* at iota(t, l); false is GL2,L* alone.
mpq_class modulus_BL_bruteforce(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l,
                                bool with_gl2 = true);

}  // namespace spinlocal
