#pragma once

#include <gmpxx.h>

#include <vector>

#include "spinlocal/matrix.hpp"

namespace spinlocal {

/// H = A * gamma with gamma in GL_n(Z_p), H upper triangular with diagonal p^{e_i}
/// and entry (i, j), j > i, reduced to a residue in [0, p^{e_i}).
struct ColumnHNF {
  LMat H;
  LMat gamma;
  std::vector<int> exponents;
};

ColumnHNF hermite_normal_form_local(const LMat& A);

/// Upper triangular R (cols x cols) whose rows span the Z_(p)-row module of F
/// (F must have full column rank). {x : F x integral} = R^{-1} Z_p^cols.
QMat local_row_echelon(const QMat& F, unsigned p);

/// Valuations of the elementary divisors of a square p-adic matrix, ascending
/// (kValInfinity for a zero divisor).
std::vector<int> elementary_divisors(const QMat& m, unsigned p);

/// Rank over F_p of a p-integral matrix.
int rank_mod_p(const QMat& m, unsigned p);

/// Order of the subgroup of (Z/p^N)^d generated by the given integer vectors.
mpz_class subgroup_order_mod(const std::vector<std::vector<mpz_class>>& gens, unsigned p, int N);

}  // namespace spinlocal
