#pragma once

#include <gmpxx.h>

#include "spinlocal/groups.hpp"
#include "spinlocal/quadratic.hpp"

namespace spinlocal {

/// diag(t m_l^{-T}, m_l) in GSp4.
LMat gl2l_torus(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l);

/// |t| |l|^{-1} when |t| <= |l|, else 0.
mpq_class alpha_chi_closed(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l);

/// Integral over N_L \ U_{P,4} = Q_p (coordinate c = u22 - D u11) of psi(c) charf(v_D u(c) m in V5(Z_p)),
/// V5 = ker(wedge^2 W4 -> nu) twisted by nu^{-1}, v_D = D e1^f2 + e2^f1, as a finite character sum.
mpq_class alpha_chi_bruteforce(const EtaleQuadratic& L, const LMat& m);

}  // namespace spinlocal
