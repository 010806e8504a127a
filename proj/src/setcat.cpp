#include "lki/setcat.hpp"

namespace lki::setcat {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > UINT64_MAX / b) throw ResourceLimitError("tuple space exceeds 64 bits");
    r *= b;
  }
  return r;
}

template <class S>
auto SpanCat<S>::identity(Obj a) const -> Mor {
  Mor m;
  m.base = base_;
  m.src_ar = m.dst_ar = a;
  uint64_t n = ipow(base_, a);
  for (uint64_t i = 0; i < n; ++i) m.m[i][i] = S::one();
  return m;
}

template <class S>
auto SpanCat<S>::compose(const Mor& f, const Mor& g) const -> Mor {
  if (g.dst_ar != f.src_ar) throw Error("Span compose: arity mismatch");
  Mor r;
  r.base = base_;
  r.src_ar = g.src_ar;
  r.dst_ar = f.dst_ar;
  for (const auto& [s, mids] : g.m) {
    for (const auto& [mid, v1] : mids) {
      auto it = f.m.find(mid);
      if (it == f.m.end()) continue;
      for (const auto& [d, v2] : it->second) r.add(s, d, S::mul(v1, v2));
    }
  }
  return r;
}

template <class S>
auto SpanCat<S>::tensor(const Mor& a, const Mor& b) const -> Mor {
  Mor r;
  r.base = base_;
  r.src_ar = a.src_ar + b.src_ar;
  r.dst_ar = a.dst_ar + b.dst_ar;
  uint64_t bs = ipow(base_, b.src_ar);
  uint64_t bd = ipow(base_, b.dst_ar);
  for (const auto& [s1, ds1] : a.m)
    for (const auto& [d1, v1] : ds1)
      for (const auto& [s2, ds2] : b.m)
        for (const auto& [d2, v2] : ds2)
          r.add(s1 * bs + s2, d1 * bd + d2, S::mul(v1, v2));
  return r;
}

template <class S>
bool SpanCat<S>::equal(const Mor& a, const Mor& b) const {
  if (a.src_ar != b.src_ar || a.dst_ar != b.dst_ar) return false;
  // maps may carry explicit zeros; compare semantically
  auto nonzero = [](const Span<S>& z) {
    std::map<std::pair<uint64_t, uint64_t>, typename S::Val> out;
    for (const auto& [s, ds] : z.m)
      for (const auto& [d, v] : ds)
        if (v != S::zero()) out[{s, d}] = v;
    return out;
  };
  return nonzero(a) == nonzero(b);
}

template <class S>
auto SpanCat<S>::invert(const Mor& f) const -> std::optional<Mor> {
  if (f.src_ar != f.dst_ar) return std::nullopt;
  uint64_t n = ipow(base_, f.src_ar);
  std::vector<char> hit(n, 0);
  Mor r;
  r.base = base_;
  r.src_ar = f.dst_ar;
  r.dst_ar = f.src_ar;
  uint64_t srcs = 0;
  for (const auto& [s, ds] : f.m) {
    uint64_t img = 0;
    int count = 0;
    for (const auto& [d, v] : ds) {
      if (v == S::zero()) continue;
      if (v != S::one()) return std::nullopt;
      img = d;
      ++count;
    }
    if (count == 0) continue;
    if (count > 1) return std::nullopt;
    if (hit[img]) return std::nullopt;
    hit[img] = 1;
    r.m[img][s] = S::one();
    ++srcs;
  }
  if (srcs != n) return std::nullopt;
  return r;
}

template <class S>
auto SpanCat<S>::eval_begin(int in_width) const -> State {
  State st;
  st.in_ar = in_width;
  st.width = in_width;
  uint64_t n = ipow(base_, in_width);
  st.rows.resize(n);
  for (uint64_t i = 0; i < n; ++i) st.rows[i][i] = S::one();
  return st;
}

template <class S>
void SpanCat<S>::eval_apply(State& st, int pos, int in_ar, int out_ar, const Mor& mor) const {
  int w = st.width;
  if (pos < 0 || pos + in_ar > w) throw Error("eval_apply: position out of range");
  uint64_t below = ipow(base_, w - pos - in_ar);
  uint64_t block_in = ipow(base_, in_ar);
  uint64_t block_out = ipow(base_, out_ar);
  for (auto& row : st.rows) {
    std::map<uint64_t, Val> next;
    for (const auto& [bnd, v] : row) {
      uint64_t low = bnd % below;
      uint64_t rest = bnd / below;
      uint64_t mid = rest % block_in;
      uint64_t pre = rest / block_in;
      auto it = mor.m.find(mid);
      if (it == mor.m.end()) continue;
      for (const auto& [mid2, v2] : it->second) {
        if (v2 == S::zero()) continue;
        uint64_t key = (pre * block_out + mid2) * below + low;
        auto& cell = next[key];
        cell = S::add(cell, S::mul(v, v2));
      }
    }
    row = std::move(next);
  }
  st.width = w - in_ar + out_ar;
}

template <class S>
auto SpanCat<S>::eval_end(State&& st) const -> Mor {
  Mor r;
  r.base = base_;
  r.src_ar = st.in_ar;
  r.dst_ar = st.width;
  for (uint64_t s = 0; s < st.rows.size(); ++s)
    for (const auto& [d, v] : st.rows[s])
      if (v != S::zero()) r.m[s][d] = v;
  return r;
}

template class SpanCat<NatSemiring>;
template class SpanCat<BoolSemiring>;

SpanBool varpi(const SpanNat& z) {
  SpanBool r;
  r.base = z.base;
  r.src_ar = z.src_ar;
  r.dst_ar = z.dst_ar;
  for (const auto& [s, ds] : z.m)
    for (const auto& [d, v] : ds)
      if (v != 0) r.m[s][d] = 1;
  return r;
}

void verify_rack(const RackTable& r) {
  int n = r.n;
  if ((int)r.dot.size() != n || (int)r.star.size() != n)
    throw Error("rack axiom violation: table size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (r.star[x][r.dot[x][y]] != y)
        throw Error("rack axiom violation: x*(x.y) != y");
      for (int z = 0; z < n; ++z)
        if (r.dot[x][r.dot[y][z]] != r.dot[r.dot[x][y]][r.dot[x][z]])
          throw Error("rack axiom violation: left self-distributivity");
    }
}

RackTable rack_from_pointed_group(const FiniteGroup& g, int mu) {
  RackTable r;
  r.n = g.size();
  r.dot.assign(r.n, std::vector<int>(r.n));
  r.star.assign(r.n, std::vector<int>(r.n));
  for (int x = 0; x < r.n; ++x) {
    int c = g.conj(x, mu);
    int ci = g.conj(x, g.inv(mu));
    for (int y = 0; y < r.n; ++y) {
      r.dot[x][y] = g.mul(c, y);
      r.star[x][y] = g.mul(ci, y);
    }
  }
  verify_rack(r);
  return r;
}

template <class S>
Span<S> rack_graph(const RackTable& r, RackMap which) {
  Span<S> m;
  m.base = r.n;
  m.src_ar = m.dst_ar = 2;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      int a = 0, b = 0;
      switch (which) {
        case RackMap::R: a = r.dot[x][y]; b = x; break;            // (x.y, x)
        case RackMap::RPrime: a = y; b = r.dot[y][x]; break;       // (y, y.x)
        case RackMap::SMap: a = r.star[x][y]; b = x; break;        // (x*y, x)
        case RackMap::SPrimeMap: a = y; b = r.star[y][x]; break;   // (y, y*x)
      }
      m.m[(uint64_t)x * r.n + y][(uint64_t)a * r.n + b] = S::one();
    }
  return m;
}

template Span<NatSemiring> rack_graph<NatSemiring>(const RackTable&, RackMap);
template Span<BoolSemiring> rack_graph<BoolSemiring>(const RackTable&, RackMap);

template <class S>
RackDatum<S> rmatrix_from_rack(const RackTable& r) {
  verify_rack(r);
  RackDatum<S> d;
  d.r = rack_graph<S>(r, RackMap::R);
  d.r_inv = rack_graph<S>(r, RackMap::SPrimeMap);
  d.eps.base = d.eta.base = r.n;
  d.eps.src_ar = 2;
  d.eps.dst_ar = 0;
  d.eta.src_ar = 0;
  d.eta.dst_ar = 2;
  for (int x = 0; x < r.n; ++x) {
    d.eps.m[(uint64_t)x * r.n + x][0] = S::one();
    d.eta.m[0][(uint64_t)x * r.n + x] = S::one();
  }
  return d;
}

template RackDatum<NatSemiring> rmatrix_from_rack<NatSemiring>(const RackTable&);
template RackDatum<BoolSemiring> rmatrix_from_rack<BoolSemiring>(const RackTable&);

SpanMatrix to_matrix(const SpanNat& z) {
  if (z.src_ar != 1 || z.dst_ar != 1) throw Error("to_matrix: arity-1 spans only");
  SpanMatrix m;
  m.src = m.dst = z.base;
  m.mult.assign(z.base, std::vector<unsigned long long>(z.base, 0));
  for (const auto& [s, ds] : z.m)
    for (const auto& [d, v] : ds) m.mult[s][d] = v;
  return m;
}

SpanMatrix to_matrix(const SpanBool& z) {
  if (z.src_ar != 1 || z.dst_ar != 1) throw Error("to_matrix: arity-1 spans only");
  SpanMatrix m;
  m.src = m.dst = z.base;
  m.mult.assign(z.base, std::vector<unsigned long long>(z.base, 0));
  for (const auto& [s, ds] : z.m)
    for (const auto& [d, v] : ds) m.mult[s][d] = v ? 1 : 0;
  return m;
}

SpanMatrix varpi(const SpanMatrix& z) {
  SpanMatrix r = z;
  for (auto& row : r.mult)
    for (auto& v : row) v = v ? 1 : 0;
  return r;
}

unsigned long long fiber_count(const SpanMatrix& j, int x, int y) {
  if (x < 0 || x >= j.src || y < 0 || y >= j.dst) throw Error("fiber_count: index out of range");
  return j.mult[x][y];
}

}  // namespace lki::setcat
