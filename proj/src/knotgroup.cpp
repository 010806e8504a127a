#include "lki/knotgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lki::knotgroup {

using setcat::FiniteGroup;

WirtingerData wirtinger_from_diagram(const morse::MorseWord& d) {
  morse::require_long_knot(d);
  if (!morse::is_normal(d))
    throw Error("wirtinger_from_diagram: expected a corrected (normal) word");
  auto passages = morse::trace_crossings(d);
  // pair the two passages of each crossing event
  std::map<std::pair<int, int>, std::vector<int>> by_event;
  for (size_t k = 0; k < passages.size(); ++k)
    by_event[{passages[k].slice, passages[k].event_index}].push_back((int)k);

  WirtingerData w;
  // first pass: number the under-passages along the path
  std::vector<int> under_index(passages.size(), -1);
  for (size_t k = 0; k < passages.size(); ++k)
    if (passages[k].under) under_index[k] = ++w.n;
  w.kappa.assign(w.n, 0);
  w.signs.assign(w.n, 0);
  // the arc index current at path step k is the number of under-passages
  // strictly before k
  std::vector<int> arc_at(passages.size() + 1, 0);
  for (size_t k = 0; k < passages.size(); ++k)
    arc_at[k + 1] = arc_at[k] + (passages[k].under ? 1 : 0);
  for (const auto& [ev, ks] : by_event) {
    (void)ev;
    if (ks.size() != 2) throw Error("wirtinger: crossing not visited twice");
    int under_k = passages[ks[0]].under ? ks[0] : ks[1];
    int over_k = passages[ks[0]].under ? ks[1] : ks[0];
    if (!passages[under_k].under || passages[over_k].under)
      throw Error("wirtinger: inconsistent passage pair");
    int i = under_index[under_k];
    w.kappa[i - 1] = arc_at[over_k];  // arc in force while passing over
    w.signs[i - 1] = passages[under_k].sign;
  }
  int sum = 0;
  for (int s : w.signs) sum += s;
  if (sum != 0) throw Error("wirtinger: corrected diagram must have zero total sign");
  return w;
}

namespace {

struct HomSearch {
  const WirtingerData& w;
  const FiniteGroup& g;
  int mu;
  std::optional<int> lambda;
  size_t witness_cap;
  HomCount out;

  // conj_val[j] = branched value of g_j mu g_j^-1 for early-referenced arc j
  std::vector<int> conj_val;
  std::vector<int> gval;  // g_0..g_n, -1 if not yet computed
  std::vector<int> mu_class;

  HomSearch(const WirtingerData& w_, const FiniteGroup& g_, int mu_, std::optional<int> l,
            size_t cap)
      : w(w_), g(g_), mu(mu_), lambda(l), witness_cap(cap) {
    conj_val.assign(w.n + 1, -1);
    gval.assign(w.n + 1, -1);
    std::set<int> cls;
    for (int x = 0; x < g.size(); ++x) cls.insert(g.conj(x, mu));
    mu_class.assign(cls.begin(), cls.end());
  }

  void finish() {
    int ln = gval[w.n];
    if (lambda && *lambda != ln) return;
    ++out.per_lambda[ln];
    ++out.total;
    if (out.witnesses.size() < witness_cap) out.witnesses.push_back(gval);
  }

  void step(int i) {
    if (i > w.n) {
      finish();
      return;
    }
    int k = w.kappa[i - 1];
    int e = w.signs[i - 1];
    auto propagate = [&](int conj_mu) {
      // g_i = (g_k mu g_k^-1)^e g_{i-1}
      int c = e > 0 ? conj_mu : g.inv(conj_mu);
      int gi = g.mul(c, gval[i - 1]);
      // consistency when arc i itself was branched earlier
      if (conj_val[i] >= 0 && g.conj(gi, mu) != conj_val[i]) return;
      gval[i] = gi;
      step(i + 1);
      gval[i] = -1;
    };
    if (gval[k] >= 0) {
      propagate(g.conj(gval[k], mu));
    } else if (conj_val[k] >= 0) {
      propagate(conj_val[k]);
    } else {
      for (int q : mu_class) {
        conj_val[k] = q;
        propagate(q);
      }
      conj_val[k] = -1;
    }
  }

  void run() {
    gval[0] = g.identity();
    step(1);
  }
};

}  // namespace

HomCount count_homs(const WirtingerData& w, const FiniteGroup& g, int mu,
                    std::optional<int> lambda, size_t witness_cap) {
  HomSearch s(w, g, mu, lambda, witness_cap);
  s.run();
  return std::move(s.out);
}

bool e_presentation_check(const WirtingerData& w, const FiniteGroup& g, int mu) {
  // Enumerate E-presentation homomorphisms with full witnesses.
  HomCount ecount = count_homs(w, g, mu, std::nullopt, (size_t)-1);

  // Enumerate W-presentation homomorphisms: assignments x_0..x_n with x_0 =
  // mu and x_i = x_{kappa_i}^{eps_i} x_{i-1} x_{kappa_i}^{-eps_i}; arcs
  // referenced early are branched over the conjugacy class of mu.
  std::set<std::vector<int>> whoms;
  std::vector<int> xval(w.n + 1, -1);
  std::vector<int> cls;
  {
    std::set<int> c;
    for (int x = 0; x < g.size(); ++x) c.insert(g.conj(x, mu));
    cls.assign(c.begin(), c.end());
  }
  std::function<void(int)> search = [&](int i) {
    if (i > w.n) {
      whoms.insert(xval);
      return;
    }
    int k = w.kappa[i - 1];
    int e = w.signs[i - 1];
    auto with_xk = [&](int xk) {
      int c = e > 0 ? xk : g.inv(xk);
      int xi = g.mul(g.mul(c, xval[i - 1]), g.inv(c));
      if (xval[i] >= 0 && xval[i] != xi) return;  // arc branched earlier
      int save = xval[i];
      xval[i] = xi;
      search(i + 1);
      xval[i] = save;
    };
    if (xval[k] >= 0) {
      with_xk(xval[k]);
    } else {
      for (int q : cls) {
        xval[k] = q;
        with_xk(q);
        xval[k] = -1;
      }
    }
  };
  xval[0] = mu;
  search(1);

  // u: W -> E translates a g-assignment to w_i = g_i mu g_i^-1; check that u
  // maps E-homs bijectively onto the W-homs with the same longitude value.
  std::set<std::vector<int>> image;
  for (const auto& gv : ecount.witnesses) {
    std::vector<int> xv(w.n + 1);
    for (int i = 0; i <= w.n; ++i) xv[i] = g.conj(gv[i], mu);
    if (!whoms.count(xv)) return false;
    // v maps back: v(e_i) = x_{k_i}^{e_i} ... x_{k_1}^{e_1} must equal g_i
    int acc = g.identity();
    for (int i = 1; i <= w.n; ++i) {
      int c = w.signs[i - 1] > 0 ? xv[w.kappa[i - 1]] : g.inv(xv[w.kappa[i - 1]]);
      acc = g.mul(c, acc);
      if (acc != gv[i]) return false;
    }
    image.insert(xv);
  }
  return image.size() == whoms.size() && image.size() == ecount.total;
}

// ---------------------------------------------------------------------------

void LaurentPoly::prune() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long long>& coeffs, int min_exp) {
  LaurentPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.c_[min_exp + (int)i] = Rational(coeffs[i]);
  return p;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end())
      r.c_[e] = v;
    else
      it->second += v;
  }
  r.prune();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end())
        r.c_[e1 + e2] = v1 * v2;
      else
        it->second += v1 * v2;
    }
  r.prune();
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (const auto& [e, v] : c_) acc += v * Rational::pow(x, e);
  return acc;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& o) const {
  if (o.is_zero()) throw Error("LaurentPoly: division by zero");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  int lead = o.max_exp();
  Rational lc = o.coeff(lead);
  while (!rem.is_zero()) {
    int e = rem.max_exp();
    Rational c = rem.coeff(e);
    LaurentPoly term(c / lc, e - lead);
    quot += term;
    rem -= term * o;
    if (!rem.is_zero() && rem.max_exp() >= e)
      throw Error("LaurentPoly: inexact division");
  }
  return quot;
}

LaurentPoly LaurentPoly::up_to_units() const {
  if (is_zero()) return LaurentPoly();
  LaurentPoly r;
  int shift = -min_exp();
  // clear rational content
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& [e, v] : c_) {
    num_gcd = BigInt::gcd(num_gcd, v.num());
    den_lcm = den_lcm * (v.den() / BigInt::gcd(den_lcm, v.den()));
  }
  Rational scale(den_lcm, num_gcd);
  if (c_.begin()->second.sign() < 0) scale = -scale;
  for (const auto& [e, v] : c_) r.c_[e + shift] = v * scale;
  r.prune();
  return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [e, v] : c_) {
    Rational a = v;
    if (out.empty()) {
      if (a.sign() < 0) out += "-", a = -a;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string coeff = a.to_string();
    if (e == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LaurentPoly alexander_raw(const WirtingerData& w) {
  int n = w.n;
  if (n == 0) return LaurentPoly(Rational(1));
  // Fox derivatives of r_i = w_{k}^{e} w_{i-1} w_{k}^{-e} w_i^{-1} under the
  // abelianization w_j -> t, with the w_0 column deleted.
  LaurentPoly t = LaurentPoly::t(1);
  LaurentPoly tinv = LaurentPoly::t(-1);
  LaurentPoly one(Rational(1));
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  auto col = [&](int j) { return j - 1; };  // delete w_0 column
  for (int i = 1; i <= n; ++i) {
    int k = w.kappa[i - 1];
    int e = w.signs[i - 1];
    LaurentPoly dk = e > 0 ? one - t : tinv * (t - one);  // d/dw_k
    LaurentPoly dprev = e > 0 ? t : tinv;                 // d/dw_{i-1}
    LaurentPoly dself = -one;                             // d/dw_i
    if (k >= 1) m[i - 1][col(k)] += dk;
    if (i - 1 >= 1) m[i - 1][col(i - 1)] += dprev;
    m[i - 1][col(i)] += dself;
  }
  // Bareiss fraction-free elimination; entries are Laurent polynomials and
  // the determinant is only needed up to units.
  LaurentPoly prev(Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return LaurentPoly();  // singular: degenerate presentation
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        LaurentPoly num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        m[r][c] = num.divided_by(prev);
      }
      m[r][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

LaurentPoly normalize_alexander(const LaurentPoly& raw) {
  if (raw.is_zero()) throw Error("alexander: zero determinant (degenerate presentation)");
  LaurentPoly p = raw.up_to_units();
  int span = p.max_exp();
  if (span % 2 != 0)
    throw Error("alexander: odd span, cannot symmetrize (not a knot diagram?)");
  Rational at1 = p.eval(Rational(1));
  if (!(at1 == Rational(1) || at1 == Rational(-1)))
    throw Error("alexander: Delta(1) != +-1 (degenerate presentation)");
  LaurentPoly shifted;
  for (const auto& [e, v] : p.coeffs())
    shifted += LaurentPoly(at1 == Rational(1) ? v : -v, e - span / 2);
  // verify the palindromic symmetry Delta(t) = Delta(1/t)
  for (const auto& [e, v] : shifted.coeffs())
    if (!(shifted.coeff(-e) == v)) throw Error("alexander: not palindromic");
  return shifted;
}

LaurentPoly alexander_normalized(const WirtingerData& w) {
  return normalize_alexander(alexander_raw(w));
}

}  // namespace lki::knotgroup
