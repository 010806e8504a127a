#include "lki/heisenberg.hpp"

#include <algorithm>
#include <set>

namespace lki::heis {

MultiPoly HeisCtx::tpow(int e) const {
  return MultiPoly::var(ring.get(), e >= 0 ? var_t : var_T, e >= 0 ? e : -e);
}

SymGroupElem group_identity(const HeisCtx& ctx) {
  return {0, ctx.zero(), ctx.zero(), ctx.zero()};
}

SymGroupElem group_mul(const HeisCtx& ctx, const SymGroupElem& x, const SymGroupElem& y) {
  // [[ax,bx,dx],[0,1,cx],[0,0,ax]] * [[ay,by,dy],[0,1,cy],[0,0,ay]]
  SymGroupElem r;
  r.k = x.k + y.k;
  MultiPoly ax = ctx.tpow(x.k), ay = ctx.tpow(y.k);
  r.b = ax * y.b + x.b;
  r.c = y.c + x.c * ay;
  r.d = ax * y.d + x.b * y.c + x.d * ay;
  return r;
}

SymGroupElem conjugate_mu(const HeisCtx& ctx, const SymGroupElem& g, int sign) {
  SymGroupElem r;
  r.k = sign;
  MultiPoly te = ctx.tpow(sign);
  MultiPoly one = ctx.one();
  MultiPoly ainv = ctx.tpow(-g.k);
  r.b = g.b * (one - te);
  r.c = g.c * (te - one) * ainv;
  r.d = g.b * g.c * (te - one) * ainv;
  return r;
}

RepSystem rep_variety_ideal(const knotgroup::WirtingerData& w) {
  int n = w.n;
  {
    int sum = 0;
    for (int s : w.signs) sum += s;
    if (sum != 0) throw Error("rep_variety_ideal: total sign must vanish");
  }
  // arcs referenced at or after the crossing that needs them get fresh unknowns
  std::set<int> free_set;
  for (int i = 1; i <= n; ++i)
    if (w.kappa[i - 1] >= i) free_set.insert(w.kappa[i - 1]);
  std::vector<int> free_arcs(free_set.begin(), free_set.end());

  RepSystem sys;
  std::vector<std::string> names;
  std::vector<int> arc_block;
  std::vector<int> var_of_arc(n + 1, -1);
  for (int j : free_arcs) {
    var_of_arc[j] = (int)names.size();
    for (const char* p : {"b", "c", "d"})
      names.push_back(std::string(p) + std::to_string(j));
    arc_block.push_back(var_of_arc[j]);
    arc_block.push_back(var_of_arc[j] + 1);
    arc_block.push_back(var_of_arc[j] + 2);
  }
  int var_T = (int)names.size();
  names.push_back("T");
  int var_t = (int)names.size();
  names.push_back("t");
  int var_s = (int)names.size();
  names.push_back("s");
  std::vector<std::vector<int>> blocks;
  if (!arc_block.empty()) blocks.push_back(arc_block);
  blocks.push_back({var_T});
  blocks.push_back({var_t, var_s});
  sys.ctx.ring = std::make_unique<PolyRing>(PolyRing::block(std::move(names), std::move(blocks)));
  sys.ctx.var_T = var_T;
  sys.ctx.var_t = var_t;
  sys.ctx.var_s = var_s;
  sys.free_arcs = free_arcs;
  const HeisCtx& ctx = sys.ctx;
  const PolyRing* ring = ctx.ring.get();

  // prefix writhe fixes every a-coordinate
  std::vector<int> kexp(n + 1, 0);
  for (int i = 1; i <= n; ++i) kexp[i] = kexp[i - 1] + w.signs[i - 1];

  auto fresh_elem = [&](int arc) {
    SymGroupElem e;
    e.k = kexp[arc];
    e.b = MultiPoly::var(ring, var_of_arc[arc]);
    e.c = MultiPoly::var(ring, var_of_arc[arc] + 1);
    e.d = MultiPoly::var(ring, var_of_arc[arc] + 2);
    return e;
  };

  std::vector<SymGroupElem> arc(n + 1, group_identity(ctx));
  std::vector<char> known(n + 1, 0);
  known[0] = 1;
  for (int j : free_arcs) {
    arc[j] = fresh_elem(j);
    known[j] = 1;  // usable symbolically; matched when reached
  }

  for (int i = 1; i <= n; ++i) {
    int kp = w.kappa[i - 1];
    if (!known[kp]) throw Error("rep_variety_ideal: internal ordering error");
    SymGroupElem conj = conjugate_mu(ctx, arc[kp], w.signs[i - 1]);
    SymGroupElem e = group_mul(ctx, conj, arc[i - 1]);
    if (e.k != kexp[i]) throw Error("rep_variety_ideal: writhe bookkeeping broke");
    if (var_of_arc[i] >= 0) {
      // arc i already carries fresh unknowns: emit matching equations and
      // keep the small symbols for later use
      SymGroupElem f = fresh_elem(i);
      sys.gens.push_back(f.b - e.b);
      sys.gens.push_back(f.c - e.c);
      sys.gens.push_back(f.d - e.d);
    } else {
      arc[i] = e;
      known[i] = 1;
    }
  }

  // e_n = lambda: b = 0, c = 0, d = s
  const SymGroupElem& last = arc[n];
  sys.gens.push_back(last.b);
  sys.gens.push_back(last.c);
  sys.gens.push_back(last.d - MultiPoly::var(ring, var_s));
  // Laurent relation
  sys.gens.push_back(MultiPoly::var(ring, var_t) * MultiPoly::var(ring, var_T) - ctx.one());
  return sys;
}

// ---------------------------------------------------------------------------

const PolyRing* ts_ring() {
  static PolyRing ring = PolyRing::grevlex({"t", "s"});
  return &ring;
}

MultiPoly ts_poly(const std::vector<long long>& t_coeffs, int s_pow) {
  std::vector<Term> terms;
  for (size_t i = 0; i < t_coeffs.size(); ++i) {
    if (t_coeffs[i] == 0) continue;
    Monomial m(2, 0);
    m[0] = (uint16_t)i;
    m[1] = (uint16_t)s_pow;
    terms.push_back({m, Rational(t_coeffs[i])});
  }
  return MultiPoly(ts_ring(), std::move(terms));
}

MultiPoly ts_from_laurent(const knotgroup::LaurentPoly& p, int s_pow) {
  knotgroup::LaurentPoly q = p.up_to_units();
  std::vector<Term> terms;
  for (const auto& [e, v] : q.coeffs()) {
    Monomial m(2, 0);
    m[0] = (uint16_t)e;
    m[1] = (uint16_t)s_pow;
    terms.push_back({m, v});
  }
  return MultiPoly(ts_ring(), std::move(terms));
}

std::vector<std::string> LaurentIdeal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis) out.push_back(g.primitive().to_string());
  return out;
}

/// Clears t-unit factors: divides each generator by the largest power of t
/// dividing it (t is invertible in the Laurent ring).
static MultiPoly clear_t_units(const MultiPoly& g) {
  if (g.is_zero()) return g;
  uint16_t tmin = 0xffff;
  for (const auto& term : g.terms()) tmin = std::min(tmin, term.m[0]);
  if (tmin == 0) return g;
  std::vector<Term> terms;
  for (const auto& term : g.terms()) {
    Monomial m = term.m;
    m[0] = (uint16_t)(m[0] - tmin);
    terms.push_back({m, term.c});
  }
  return MultiPoly(ts_ring(), std::move(terms));
}

LaurentIdeal laurent_ideal(const std::vector<MultiPoly>& gens_ts, const GroebnerOptions& opts) {
  // saturate at t by eliminating T from gens + (tT - 1)
  static PolyRing satring_storage = PolyRing::block({"T", "t", "s"}, {{0}, {1, 2}});
  PolyRing* satring = &satring_storage;
  std::vector<MultiPoly> lifted;
  std::vector<MultiPoly> ts_images(2);
  ts_images[0] = MultiPoly::var(satring, 1);
  ts_images[1] = MultiPoly::var(satring, 2);
  for (const auto& g : gens_ts) lifted.push_back(g.map_into(satring, ts_images));
  lifted.push_back(MultiPoly::var(satring, 1) * MultiPoly::var(satring, 0) -
                   MultiPoly::constant(satring, Rational(1)));
  auto gb = groebner(lifted, opts);
  auto contr = contraction(gb, {1, 2});
  std::vector<MultiPoly> back;
  std::vector<MultiPoly> back_images = {MultiPoly(), MultiPoly::var(ts_ring(), 0),
                                        MultiPoly::var(ts_ring(), 1)};
  for (const auto& g : contr) back.push_back(clear_t_units(g.map_into(ts_ring(), back_images)));
  LaurentIdeal ideal;
  ideal.basis = groebner(back, opts);
  return ideal;
}

bool ideal_contains(const LaurentIdeal& a, const MultiPoly& f_ts) {
  return reduces_to_zero(f_ts, a.basis);
}

bool ideal_equal(const LaurentIdeal& a, const LaurentIdeal& b) {
  for (const auto& g : a.basis)
    if (!reduces_to_zero(g, b.basis)) return false;
  for (const auto& g : b.basis)
    if (!reduces_to_zero(g, a.basis)) return false;
  return true;
}

LaurentIdeal ideal_invariant(const knotgroup::WirtingerData& w, const GroebnerOptions& opts) {
  RepSystem sys = rep_variety_ideal(w);
  auto gb = groebner(sys.gens, opts);
  auto contr = contraction(gb, {sys.ctx.var_t, sys.ctx.var_s});
  std::vector<MultiPoly> images(sys.ctx.ring->nvars());
  images[sys.ctx.var_t] = MultiPoly::var(ts_ring(), 0);
  images[sys.ctx.var_s] = MultiPoly::var(ts_ring(), 1);
  std::vector<MultiPoly> ts_gens;
  for (const auto& g : contr) ts_gens.push_back(clear_t_units(g.map_into(ts_ring(), images)));
  LaurentIdeal ideal;
  ideal.basis = groebner(ts_gens, opts);
  return ideal;
}

// ---------------------------------------------------------------------------

static const std::vector<long long> kD1 = {1, -1, 1};
static const std::vector<long long> kD2 = {1, -3, 1};
static const std::vector<long long> kD3 = {1, -3, 3, -3, 1};

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"3_1", {1, 0, 0}, {{{1, 0, 0}, 1}}},
      {"4_1", {0, 1, 0}, {{{0, 1, 0}, 1}}},
      {"6_2", {0, 0, 1}, {{{0, 0, 1}, 1}}},
      {"8_10", {3, 0, 0}, {{{1, 0, 0}, 1}, {{0, 0, 0}, 2}}},
      {"8_18", {2, 1, 0}, {{{1, 1, 0}, 1}}},
      {"8_20", {2, 0, 0}, {{{1, 0, 0}, 1}, {{0, 0, 0}, 2}}},
      {"9_24", {2, 1, 0}, {{{1, 1, 0}, 1}, {{0, 1, 0}, 2}}},
      {"10_99", {4, 0, 0}, {{{1, 0, 0}, 1}, {{0, 0, 0}, 2}}},
      {"10_123", {0, 0, 2}, {{{0, 0, 1}, 1}}},
      {"10_137", {0, 2, 0}, {{{0, 1, 0}, 1}, {{0, 0, 0}, 2}}},
      {"11a_5", {0, 3, 0}, {{{0, 1, 0}, 1}, {{0, 0, 0}, 2}}},
  };
  return rows;
}

knotgroup::LaurentPoly table1_delta(const Table1Row& row) {
  using knotgroup::LaurentPoly;
  LaurentPoly p = LaurentPoly::from_coeffs({1});
  const std::vector<long long>* base[3] = {&kD1, &kD2, &kD3};
  for (int f = 0; f < 3; ++f)
    for (int k = 0; k < row.delta_pows[f]; ++k) p *= LaurentPoly::from_coeffs(*base[f]);
  return p;
}

LaurentIdeal table1_ideal(const Table1Row& row, const GroebnerOptions& opts) {
  using knotgroup::LaurentPoly;
  const std::vector<long long>* base[3] = {&kD1, &kD2, &kD3};
  std::vector<MultiPoly> gens;
  for (const auto& [pows, spow] : row.ideal) {
    LaurentPoly p = LaurentPoly::from_coeffs({1});
    for (int f = 0; f < 3; ++f)
      for (int k = 0; k < pows[f]; ++k) p *= LaurentPoly::from_coeffs(*base[f]);
    gens.push_back(ts_from_laurent(p, spow));
  }
  return laurent_ideal(gens, opts);
}

}  // namespace lki::heis
