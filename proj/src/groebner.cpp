#include "lki/groebner.hpp"

#include <algorithm>
#include <list>

namespace lki::heis {

MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      long long* steps, long long cap) {
  if (f.is_zero()) return f;
  const PolyRing* ring = f.ring();
  MultiPoly rem(ring);
  MultiPoly cur = f;
  while (!cur.is_zero()) {
    const Term& lt = cur.lead();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.lead().m, lt.m)) continue;
      Term q{mono_div(lt.m, g.lead().m), lt.c / g.lead().c};
      cur -= g.times_term(q);
      reduced = true;
      if (steps) {
        ++*steps;
        if (cap >= 0 && *steps > cap)
          throw ResourceLimitError("groebner: reduction step cap exceeded");
      }
      break;
    }
    if (!reduced) {
      // move the irreducible lead into the remainder
      rem += MultiPoly(ring, {lt});
      cur -= MultiPoly(ring, {lt});
    }
  }
  return rem;
}

bool reduces_to_zero(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  return reduce_full(f, basis).is_zero();
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  long deg;
};

long mono_deg(const Monomial& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

std::vector<MultiPoly> groebner(std::vector<MultiPoly> gens, const GroebnerOptions& opts) {
  std::vector<MultiPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.primitive());
  if (basis.empty()) return basis;
  const PolyRing* ring = basis[0].ring();
  long long steps = 0;

  std::list<Pair> pairs;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      Monomial l = mono_lcm(basis[i].lead().m, basis[j].lead().m);
      pairs.push_back({i, j, l, mono_deg(l)});
    }
  };
  for (int j = 1; j < (int)basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // normal selection: smallest lcm degree first
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->deg < best->deg || (it->deg == best->deg && mono_cmp(*ring, it->lcm, best->lcm) < 0))
        best = it;
    Pair p = *best;
    pairs.erase(best);
    const MultiPoly& fi = basis[p.i];
    const MultiPoly& fj = basis[p.j];
    if (fi.is_zero() || fj.is_zero()) continue;
    // product criterion
    if (mono_mul(fi.lead().m, fj.lead().m) == p.lcm) continue;
    // chain criterion: an untreated third element dividing the lcm
    {
      bool skip = false;
      for (int k = 0; k < (int)basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j || basis[k].is_zero()) continue;
        if (!mono_divides(basis[k].lead().m, p.lcm)) continue;
        bool pik = false, pjk = false;
        for (const auto& q : pairs) {
          if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k))) pik = true;
          if ((q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) pjk = true;
        }
        if (!pik && !pjk) skip = true;
      }
      if (skip) continue;
    }
    Term ti{mono_div(p.lcm, fi.lead().m), Rational(1) / fi.lead().c};
    Term tj{mono_div(p.lcm, fj.lead().m), Rational(1) / fj.lead().c};
    MultiPoly s = fi.times_term(ti) - fj.times_term(tj);
    MultiPoly r = reduce_full(s, basis, &steps, opts.step_cap);
    if (r.is_zero()) continue;
    basis.push_back(r.primitive());
    add_pairs_for((int)basis.size() - 1);
    if ((long long)basis.size() > opts.step_cap)
      throw ResourceLimitError("groebner: basis growth cap exceeded");
  }

  // inter-reduce to the unique reduced basis
  // 1. drop elements whose lead is divisible by another's lead
  std::vector<MultiPoly> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (mono_divides(basis[j].lead().m, basis[i].lead().m)) {
        // break ties deterministically: keep the earlier equal lead
        if (basis[j].lead().m == basis[i].lead().m)
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  // 2. fully reduce each against the others, repeat until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      MultiPoly r = reduce_full(kept[i], others, &steps, opts.step_cap);
      if (!(r == kept[i])) {
        changed = true;
        if (r.is_zero()) {
          kept.erase(kept.begin() + i);
          break;
        }
        kept[i] = r.primitive();
      }
    }
  }
  for (auto& g : kept) g = g.monic();
  std::sort(kept.begin(), kept.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return mono_cmp(*ring, a.lead().m, b.lead().m) < 0;
  });
  return kept;
}

std::vector<MultiPoly> contraction(const std::vector<MultiPoly>& reduced_basis,
                                   const std::vector<int>& keep) {
  std::vector<MultiPoly> out;
  for (const auto& g : reduced_basis) {
    if (g.is_zero()) continue;
    std::vector<char> allowed(g.ring()->nvars(), 0);
    for (int v : keep) allowed[v] = 1;
    bool ok = true;
    for (int v = 0; v < g.ring()->nvars() && ok; ++v)
      if (!allowed[v] && g.lead().m[v] != 0) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace lki::heis
