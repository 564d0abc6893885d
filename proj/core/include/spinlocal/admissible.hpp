#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "spinlocal/matrix.hpp"

namespace spinlocal {

/// m = [[p^a, beta, gamma1], [0, p^b, gamma2], [0, 0, p^c]] with beta, gamma1 in
/// [0, p^a) and gamma2 in [0, p^b).
struct RepresentativeM {
  int a = 0, b = 0, c = 0;
  int64_t beta = 0, gamma1 = 0, gamma2 = 0;

  /// a >= c and p^c | beta.
  bool in_M(unsigned p) const;
  bool reduced(unsigned p) const;
  LMat matrix(unsigned p) const;
  std::string str() const;
  friend bool operator<(const RepresentativeM& x, const RepresentativeM& y);
  friend bool operator==(const RepresentativeM& x, const RepresentativeM& y);
};

enum class Provenance { ClosedForm, BruteForce, Lattice };
std::string to_string(Provenance p);

struct AdmissibleRecord {
  RepresentativeM m;
  bool admissible = false;
  mpq_class B = 0;
  Provenance provenance = Provenance::ClosedForm;
  /// Number of classes of U_m modulo p^c Sym_2(Z_p) (brute force only).
  uint64_t classes = 0;
};

/// u symmetric with uy integral and (gamma1, gamma2) u y in p^c Z_p + p^min(b,c) Z_p.
bool um_contains(const RepresentativeM& m, unsigned p, const mpq_class& u11, const mpq_class& u12,
                 const mpq_class& u22);

/// Enumerates U_m modulo p^c Sym_2(Z_p) on the grid u11, u12 in p^-a Z_p,
/// u22 in p^-(a+b) Z_p; admissible iff every member has -D u11 + u22 integral.
AdmissibleRecord admissible_bruteforce(const RepresentativeM& m, unsigned p, long D);

/// U_m as the lattice R^{-1} Z_p^3 with R an echelon form of the defining
/// linear conditions; admissible iff chi is integral on a basis.
AdmissibleRecord admissible_lattice(const RepresentativeM& m, unsigned p, long D);

/// The classification theorems (inert pattern and the four split bullets).
AdmissibleRecord admissible_classify(const RepresentativeM& m, unsigned p, long D, bool split);

/// All m in M (reduced form) with a <= amax, b <= bmax, c <= min(a, cmax).
std::vector<RepresentativeM> enumerate_M(unsigned p, int amax, int bmax, int cmax);

/// U_m depends on gamma1 only modulo p^c; the representative with gamma1 reduced.
RepresentativeM um_class(const RepresentativeM& m, unsigned p);

/// Integral over (r, u3') of the indicator that [[r, u3'], [u, r^T]] m is integral,
/// by enumeration of classes modulo Z_p^3.
mpq_class uprime_integral_bruteforce(const RepresentativeM& m, unsigned p, const mpq_class& u11,
                                     const mpq_class& u12, const mpq_class& u22);

}  // namespace spinlocal
