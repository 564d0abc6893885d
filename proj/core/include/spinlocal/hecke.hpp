#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/quadratic.hpp"
#include "spinlocal/series.hpp"

namespace spinlocal {

/// Upper triangular right-coset representatives of GL_n(Z_p) diag(p^e) GL_n(Z_p),
/// entry (i, j) reduced modulo p^{d_i}. Throws std::logic_error if the list is
/// not closed under left multiplication by generators of GL_n(Z_p).
std::vector<LMat> gl_coset_reps(unsigned p, const std::vector<int>& exps);

/// Column HNF key of an integral matrix, used to identify right cosets.
std::string coset_key(const LMat& m);

/// Left-multiplication closure check of a coset list by GL_n(Z_p) generators.
bool gl_cosets_closed(unsigned p, const std::vector<LMat>& reps);

/// The p + 1 matrices diag(1, p) and [[p, a], [0, 1]].
std::vector<LMat> tp_matrices(unsigned p);

/// sum_u lambda(g T(u)) (or T'(u)) over the p + 1 matrices u.
FormalSeries apply_Tp(long D, const SiegelLevi& g, bool primed = false);

/// sum over GL3 cosets v of lambda(g v~), v~ the Siegel-Levi element with A = v, nu = p.
FormalSeries lift_sum(long D, const SiegelLevi& g, const std::vector<int>& exps);

/// sum over symmetric Z mod p of rank one of chi(g n(Z/p) g^{-1}).
CyclotomicValue unit_sum(long D, const SiegelLevi& g);

/// Four-term GL3 reduction of T_{0,3}.
FormalSeries gl3_T03(long D, const SiegelLevi& g);
/// GL3 reduction of T_{2,3}, the unit constant evaluated by unit_sum.
FormalSeries gl3_T23(long D, const SiegelLevi& g);

/// GL2 reductions in terms of T_p, for g = iota(p^r, l) (r and l may leave the support).
FormalSeries gl2_T03(const EtaleQuadratic& L, int r, const EllClass& l);
FormalSeries gl2_T23(const EtaleQuadratic& L, int r, const EllClass& l);

enum class HeckeOp { T03, T23, T33 };
std::string to_string(HeckeOp op);

/// Right cosets x = diag(A, B) n(Z) of a GSp6 double coset, grouped by the Levi part.
struct GspCosetGroup {
  SiegelLevi levi;
  int denom_exp = 0;                             // Z numerators are over p^denom_exp
  std::vector<std::array<int64_t, 6>> Z;         // (z11, z12, z13, z22, z23, z33)
};

struct GspCosetList {
  HeckeOp op;
  unsigned p;
  std::vector<GspCosetGroup> groups;
  uint64_t size() const;
};

/// Enumerates every integral x with the operator's similitude (and, for T23, rank one
/// modulo p) in Iwasawa normal form. T33 is the single central coset.
GspCosetList gsp6_coset_reps(unsigned p, HeckeOp op);

/// The 6x6 matrix of one coset representative.
LMat coset_matrix(const GspCosetGroup& g, const std::array<int64_t, 6>& z, unsigned p);

/// sum over cosets x of lambda(g x), with lambda(g L n(Z)) = chi(h n(Z) h^{-1}) lambda(h), h = g L.
FormalSeries apply_raw(long D, const SiegelLevi& g, const GspCosetList& cosets);

/// |{Z symmetric : v Z integral} / Sym_3(Z_p)| by enumeration.
uint64_t um_size(const LMat& v, unsigned p);
/// For every class Z of U(v~), searches Y in Sym_3(Z_p) mod p with v (Z + Y) v^T = 0 mod p.
bool integral_conjugate_reps_exist(const LMat& v, unsigned p);

}  // namespace spinlocal
