#include "lki/hopf.hpp"

namespace lki::hopf {

Rational pairing(PairingForm form, const Rational& param, int m, long long n) {
  if (m < 0) throw Error("pairing: m must be nonnegative");
  switch (form) {
    case PairingForm::Psi: return m == 0 ? Rational(n) : Rational(0);
    case PairingForm::Phi: return m == 1 ? Rational(1) : Rational(0);
    case PairingForm::UPsi:
      if (param.is_zero()) throw Error("pairing: u must be invertible");
      return m == 0 ? Rational::pow(param, n) : Rational(0);
    case PairingForm::EvPhi: return Rational::pow(param, m);
  }
  throw Error("pairing: unknown form");
}

static bool commutes(const QMatrix& a, const QMatrix& b) { return a * b == b * a; }

void verify_module_relations(const DModule& v) {
  int q = v.qdim;
  QMatrix id = QMatrix::identity(q);
  if (!(v.A == id + v.EpsHat)) throw Error("module: a != 1 + ehat");
  if (!commutes(v.A, v.Bop) || !commutes(v.A, v.Phi) || !commutes(v.A, v.Psi))
    throw Error("module: a is not central");
  if (!(v.Psi * v.Bop - v.Bop * v.Psi == v.Bop)) throw Error("module: [psi, b] = b fails");
  if (!(v.Phi * v.Bop - v.Bop * v.Phi == id - v.A))
    throw Error("module: [phi, b] = 1 - a fails");
  if (!(v.Psi * v.Phi - v.Phi * v.Psi == QMatrix(q, q) - v.Phi))
    throw Error("module: [psi, phi] = -phi fails");
  auto nilpotent = [&](const QMatrix& m) {
    QMatrix p = m;
    for (int k = 1; k < q; ++k) p = p * m;
    return p == QMatrix(q, q);
  };
  if (!nilpotent(v.Bop) || !nilpotent(v.Phi) || !nilpotent(v.EpsHat))
    throw Error("module: b, phi, a-1 must be nilpotent");
}

DModule standard_module(int trunc_order, int rank, const Rational& offset) {
  if (trunc_order < 1 || rank < 1) throw Error("standard_module: bad parameters");
  DModule v;
  v.order = trunc_order;
  v.rank = rank;
  v.offset = offset;
  v.ann.resize(rank);
  v.base.resize(rank);
  for (int k = 0; k < rank; ++k) {
    v.ann[k] = std::min(trunc_order, rank - k);
    v.base[k] = v.qdim;
    v.qdim += v.ann[k];
  }
  int q = v.qdim;
  v.Bop = QMatrix(q, q);
  v.Psi = QMatrix(q, q);
  v.Phi = QMatrix(q, q);
  v.EpsHat = QMatrix(q, q);
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < v.ann[k]; ++j) {
      int src = v.index(k, j);
      if (j + 1 < v.ann[k]) v.EpsHat.at(v.index(k, j + 1), src) = Rational(1);
      if (k + 1 < rank && j < v.ann[k + 1]) v.Bop.at(v.index(k + 1, j), src) = Rational(1);
      v.Psi.at(src, src) = Rational(k) + offset;
      // phi v_k = k (1 - t) v_{k-1} = -k e v_{k-1}
      if (k >= 1 && j + 1 < v.ann[k - 1]) v.Phi.at(v.index(k - 1, j + 1), src) = Rational(-k);
    }
  v.A = QMatrix::identity(q) + v.EpsHat;
  verify_module_relations(v);
  return v;
}

QMatrix r_matrix(const DModule& v) {
  int q = v.qdim;
  QMatrix id = QMatrix::identity(q);

  // binom(Psi, m) = Psi (Psi-1) ... (Psi-m+1) / m!
  auto binom_psi = [&](int m) {
    QMatrix acc = id;
    Rational fact(1);
    for (int j = 0; j < m; ++j) {
      acc = acc * (v.Psi - id.scaled(Rational(j)));
      fact *= Rational(j + 1);
    }
    return acc.scaled(fact.inverse());
  };

  QMatrix sum(q * q, q * q);
  QMatrix phi_n = id, b_n = id;
  Rational fact_n(1);
  int nmax = std::min(v.order, v.rank);
  for (int n = 0; n < nmax; ++n) {  // phi^n and b^n vanish beyond
    if (n > 0) {
      phi_n = phi_n * v.Phi;
      b_n = b_n * v.Bop;
      fact_n *= Rational(n);
    }
    if (phi_n == QMatrix(q, q)) break;
    QMatrix left_base = phi_n.scaled(fact_n.inverse());
    QMatrix eps_m = id;
    for (int m = 0; m < v.order; ++m) {  // (a-1)^m = ehat^m
      if (m > 0) eps_m = eps_m * v.EpsHat;
      if (eps_m == QMatrix(q, q)) break;
      sum = sum + (binom_psi(m) * left_base).kron(eps_m * b_n);
    }
  }
  QMatrix swap(q * q, q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) swap.at(j * q + i, i * q + j) = Rational(1);
  QMatrix r = swap * sum;
  if (!r.inverse()) throw Error("r_matrix: singular (bad module/truncation combination)");
  return r;
}

rt::RMatrixDatum<rt::MatCat<Rational>> vect_datum(const DModule& v) {
  int q = v.qdim;
  rt::MatCat<Rational> cat(q);
  QMatrix r = r_matrix(v);
  auto rinv = r.inverse();
  if (!rinv) throw Error("vect_datum: r is singular");
  QMatrix eps(1, q * q), eta(q * q, 1);
  for (int i = 0; i < q; ++i) {
    eps.at(0, i * q + i) = Rational(1);
    eta.at(i * q + i, 0) = Rational(1);
  }
  return rt::derive_tildes(cat, q, q, eps, eta, r, *rinv);
}

Trunc predicted_scalar(const knotgroup::LaurentPoly& delta_normalized, int trunc_order) {
  Trunc t = Trunc::t_value(trunc_order);
  Trunc acc(Rational(0), trunc_order);
  for (const auto& [e, c] : delta_normalized.coeffs()) acc += t.pow(e) * Trunc(c);
  return acc.inverse();
}

ConjectureReport conjecture_check(const morse::MorseWord& k, int trunc_order, int rank,
                                  const Rational& offset) {
  ConjectureReport rep;
  rep.trunc_order = trunc_order;
  rep.rank = rank;
  rep.offset = offset;

  DModule v = standard_module(trunc_order, rank, offset);
  rep.precision = v.precision();
  rt::MatCat<Rational> cat(v.qdim);
  auto datum = vect_datum(v);
  QMatrix j = rt::invariant(cat, datum, k);

  auto corrected = morse::corrected(k);
  auto delta = knotgroup::alexander_normalized(knotgroup::wirtinger_from_diagram(corrected));
  rep.predicted_scalar = predicted_scalar(delta, rep.precision);
  rep.predicted_str = rep.predicted_scalar.to_string();

  // "scalar" means J = P(ehat) for a truncated series P: read P off the
  // column of v_0 and verify globally.
  std::vector<Rational> p(rep.precision, Rational(0));
  bool shape_ok = true;
  for (int row = 0; row < v.qdim && shape_ok; ++row) {
    const Rational& c = j.at(row, v.index(0, 0));
    if (c.is_zero()) continue;
    bool hit = false;
    for (int jj = 0; jj < v.ann[0]; ++jj)
      if (row == v.index(0, jj)) {
        p[jj] = c;
        hit = true;
      }
    shape_ok = hit;
  }
  if (shape_ok) {
    QMatrix expect(v.qdim, v.qdim);
    QMatrix ep = QMatrix::identity(v.qdim);
    for (int jj = 0; jj < rep.precision; ++jj) {
      if (jj > 0) ep = ep * v.EpsHat;
      expect = expect + ep.scaled(p[jj]);
    }
    shape_ok = j == expect;
  }
  rep.computed_is_scalar = shape_ok;
  if (shape_ok) {
    Trunc exact(p[0], rep.precision);
    if (rep.precision >= 2) {
      Trunc e = Trunc::eps(rep.precision);
      for (int jj = 1; jj < rep.precision; ++jj) exact += e.pow(jj) * Trunc(p[jj]);
    }
    rep.computed_scalar = exact;
    rep.computed_str = exact.to_string();
    rep.equal = exact == rep.predicted_scalar;
  } else {
    rep.computed_str = "<non-scalar operator>";
    rep.equal = false;
  }
  return rep;
}

}  // namespace lki::hopf
