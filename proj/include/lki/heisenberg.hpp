#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "lki/groebner.hpp"
#include "lki/knotgroup.hpp"
#include "lki/poly.hpp"

namespace lki::heis {

/// Element of the extended Heisenberg group over the working ring: an
/// upper-triangular matrix with corner units a = t^k and entries b, c, d.
struct SymGroupElem {
  int k = 0;
  MultiPoly b, c, d;
};

/// Symbolic workspace: ring Q[arc vars..., T, t, s] with the block
/// elimination order (arc variables >> T >> {t, s}), plus the variable ids.
struct HeisCtx {
  std::unique_ptr<PolyRing> ring;
  int var_T = -1, var_t = -1, var_s = -1;

  MultiPoly tpow(int e) const;  // t^e, negatives via T
  MultiPoly zero() const { return MultiPoly(ring.get()); }
  MultiPoly one() const { return MultiPoly::constant(ring.get(), Rational(1)); }
};

SymGroupElem group_identity(const HeisCtx& ctx);
SymGroupElem group_mul(const HeisCtx& ctx, const SymGroupElem& x, const SymGroupElem& y);

/// g mu^{sign} g^{-1} by symbolic 3x3 matrix algebra; the result has k = sign.
SymGroupElem conjugate_mu(const HeisCtx& ctx, const SymGroupElem& g, int sign);

/// The representation-variety system of a corrected diagram: forward
/// propagation of e_i = (e_{kappa_i} mu^{eps_i} e_{kappa_i}^{-1}) e_{i-1},
/// fresh (b,c,d) unknowns for arcs referenced before they are reached,
/// matching equations when they are, and the terminal equations e_n = lambda,
/// plus the Laurent relation tT - 1.
struct RepSystem {
  HeisCtx ctx;
  std::vector<MultiPoly> gens;
  std::vector<int> free_arcs;  // arcs that received fresh unknowns
};
RepSystem rep_variety_ideal(const knotgroup::WirtingerData& w);

// ---------------------------------------------------------------------------

/// The fixed two-variable ring Q[t, s] (grevlex t > s) canonical ideals live in.
const PolyRing* ts_ring();
MultiPoly ts_poly(const std::vector<long long>& t_coeffs, int s_pow);
MultiPoly ts_from_laurent(const knotgroup::LaurentPoly& p, int s_pow);

/// Ideal of Q[t, t^-1, s] in canonical form: the reduced monic Groebner basis
/// of its t-saturated contraction to Q[t, s].
struct LaurentIdeal {
  std::vector<MultiPoly> basis;

  bool is_principal() const { return basis.size() == 1; }
  std::vector<std::string> generator_strings() const;  // primitive integer form
};

/// Canonicalizes arbitrary generators in Q[t, s]: saturates at t and reduces.
LaurentIdeal laurent_ideal(const std::vector<MultiPoly>& gens_ts,
                           const GroebnerOptions& opts = {});

bool ideal_equal(const LaurentIdeal& a, const LaurentIdeal& b);
bool ideal_contains(const LaurentIdeal& a, const MultiPoly& f_ts);  // f in a?

/// The full pipeline: representation variety, elimination, saturation.
LaurentIdeal ideal_invariant(const knotgroup::WirtingerData& w,
                             const GroebnerOptions& opts = {});

// ---------------------------------------------------------------------------

/// One row of the published example table: the Alexander polynomial and the
/// ideal, both as products of the three base polynomials
/// D1 = 1 - t + t^2, D2 = 1 - 3t + t^2, D3 = 1 - 3t + 3t^2 - 3t^3 + t^4.
struct Table1Row {
  std::string knot;
  std::array<int, 3> delta_pows;  // exponents of (D1, D2, D3)
  std::vector<std::pair<std::array<int, 3>, int>> ideal;  // (factor pows, s power)
};

const std::vector<Table1Row>& table1_rows();
knotgroup::LaurentPoly table1_delta(const Table1Row& row);        // expanded, min exp 0
LaurentIdeal table1_ideal(const Table1Row& row, const GroebnerOptions& opts = {});

}  // namespace lki::heis
