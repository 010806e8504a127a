#pragma once

#include <optional>
#include <string>

#include "lki/knotgroup.hpp"
#include "lki/linalg.hpp"
#include "lki/rt.hpp"
#include "lki/trunc.hpp"

namespace lki::hopf {

using QMatrix = Matrix<Rational>;

/// Linear forms of the restricted dual evaluated on the monomial basis
/// b^m a^n.
enum class PairingForm { Psi, Phi, UPsi, EvPhi };

/// <psi, b^m a^n> = delta_{m,0} n, <phi, .> = delta_{m,1},
/// <u^psi, .> = delta_{m,0} u^n, <e^{v phi}, .> = v^m.
Rational pairing(PairingForm form, const Rational& param, int m, long long n);

/// Finite-dimensional module over the quantum double, exact over Q.
///
/// The carrier is the staircase sum of cyclic pieces (R/eps^{a_k}) v_k over
/// R = Q[e]/(e^N) with a_k = min(N, d - k): the central grouplike acts as
/// 1 + ehat where ehat is multiplication by e, and the annihilator profile is
/// what lets [phi, b] = 1 - a hold exactly on a finite-dimensional space (on
/// a free module the commutator trace obstructs it).  Q-basis e^j v_k.
struct DModule {
  int order = 0;    // truncation order N
  int rank = 0;     // number of generators d
  Rational offset;  // the psi-eigenvalue shift c
  int qdim = 0;     // sum of min(N, d-k)
  std::vector<int> ann;   // a_k
  std::vector<int> base;  // flat index of (k, 0)
  QMatrix A, Bop, Psi, Phi, EpsHat;

  int precision() const { return ann.empty() ? 0 : ann[0]; }  // min(N, d)
  int index(int k, int j) const { return base[k] + j; }
};

/// B v_k = v_{k+1}, Psi v_k = (k+c) v_k, Phi v_k = k (1-t) v_{k-1} on the
/// staircase carrier; verifies the commutation relations exactly.
DModule standard_module(int trunc_order, int rank, const Rational& offset = Rational(0));

/// [Psi,B] = B, [Phi,B] = 1-A, A central, B/Phi/(A-1) nilpotent; throws on
/// failure.
void verify_module_relations(const DModule& v);

/// Truncation of the universal R-matrix on V tensor V, composed with the swap:
/// r(u tensor v) = sum (R'' v) tensor (R' u).  Exactly invertible.
QMatrix r_matrix(const DModule& v);

/// Full rigid datum in the matrix backend: G = V, F = V*, evaluation and
/// coevaluation for eps/eta, tildes derived and inverted exactly.
rt::RMatrixDatum<rt::MatCat<Rational>> vect_datum(const DModule& v);

struct ConjectureReport {
  int trunc_order = 0, rank = 0;
  Rational offset;
  int precision = 0;       // scalars are determined mod e^precision
  bool computed_is_scalar = false;  // J = P(ehat) for a series P
  Trunc computed_scalar;   // P, valid when computed_is_scalar
  Trunc predicted_scalar;  // (Delta_K(1+e))^-1 mod e^precision
  bool equal = false;
  std::string computed_str, predicted_str;
};

/// Evaluates the invariant of K in the module backend and compares with the
/// inverse Alexander series.  Reports; never asserts.
ConjectureReport conjecture_check(const morse::MorseWord& k, int trunc_order, int rank,
                                  const Rational& offset = Rational(0));

/// (Delta(1+e))^-1 in Q[e]/(e^order).
Trunc predicted_scalar(const knotgroup::LaurentPoly& delta_normalized, int trunc_order);

}  // namespace lki::hopf
