#pragma once

#include <array>
#include <optional>
#include <string>

#include "lki/errors.hpp"
#include "lki/linalg.hpp"
#include "lki/morse.hpp"

namespace lki::rt {

/// The twelve structure morphisms an R-matrix datum carries.  The eight
/// crossing entries follow the slice assignment table: a crossing is keyed by
/// its sign and the orientations of its two bottom endpoints.
enum MorTag : int {
  IdG = 0,
  IdF,
  Eps,
  Eta,
  R,             // (+, up, up)
  Rinv,          // (-, up, up)
  TildeR,        // (+, down, up)
  TildeRinv,     // (-, down, up)
  DTildeR,       // (+, down, down)
  DTildeRinv,    // (-, down, down)
  InvTildeR,     // (-, up, down): (tilde r)^-1
  InvTildeRinv,  // (+, up, down): (tilde r^-1)^-1
  MorTagCount,
};

struct TagArity {
  int in, out;
};

inline TagArity tag_arity(MorTag t) {
  switch (t) {
    case IdG:
    case IdF: return {1, 1};
    case Eps: return {2, 0};
    case Eta: return {0, 2};
    default: return {2, 2};
  }
}

/// Crossing slot of the assignment table.
inline MorTag crossing_tag(const morse::MorseEvent& e) {
  bool l, r;
  e.bottom_orients(l, r);
  if (l && r) return e.sign > 0 ? R : Rinv;
  if (!l && r) return e.sign > 0 ? TildeR : TildeRinv;
  if (!l && !r) return e.sign > 0 ? DTildeR : DTildeRinv;
  return e.sign > 0 ? InvTildeRinv : InvTildeR;
}

template <class Cat>
struct RMatrixDatum {
  typename Cat::Obj G{}, F{};
  std::array<typename Cat::Mor, MorTagCount> mor;
};

/// Builds the full datum from {G, F, eps, eta, r, r_inv}: verifies the
/// adjunction zig-zags and r r^-1 = id, computes both tilde morphisms and
/// their inverses, the double tildes, and checks the double-tilde inverse
/// identity.  Throws NotRigidError when a tilde fails to invert.
template <class Cat>
RMatrixDatum<Cat> derive_tildes(const Cat& cat, typename Cat::Obj G, typename Cat::Obj F,
                                const typename Cat::Mor& eps, const typename Cat::Mor& eta,
                                const typename Cat::Mor& r, const typename Cat::Mor& r_inv) {
  using Mor = typename Cat::Mor;
  RMatrixDatum<Cat> d;
  d.G = G;
  d.F = F;
  Mor idG = cat.identity(G);
  Mor idF = cat.identity(F);

  Mor zig = cat.compose(cat.tensor(eps, idF), cat.tensor(idF, eta));
  Mor zag = cat.compose(cat.tensor(idG, eps), cat.tensor(eta, idG));
  if (!cat.equal(zig, idF) || !cat.equal(zag, idG))
    throw Error("adjunction zig-zag identities fail");
  Mor idGG = cat.identity(cat.tensor_obj(G, G));
  if (!cat.equal(cat.compose(r, r_inv), idGG) || !cat.equal(cat.compose(r_inv, r), idGG))
    throw Error("r and r_inv are not mutually inverse");

  auto sideways = [&](const Mor& x, typename Cat::Obj left, typename Cat::Obj right) {
    // (eps tensor id_{out}) . (id_F tensor x tensor id_F) . (id_{in} tensor eta)
    return cat.sideways(eps, eta, x, F, left, right);
  };
  // tilde(r^{+-1}): F tensor G -> G tensor F
  Mor tr = sideways(r, G, G);
  Mor trinv = sideways(r_inv, G, G);
  auto inv_tr = cat.invert(tr);
  if (!inv_tr) throw NotRigidError("tilde(r) is not invertible");
  auto inv_trinv = cat.invert(trinv);
  if (!inv_trinv) throw NotRigidError("tilde(r^-1) is not invertible");
  // double tildes: F tensor F -> F tensor F
  Mor dtr = sideways(tr, F, G);
  Mor dtrinv = sideways(trinv, F, G);
  auto dtr_inv = cat.invert(dtr);
  if (!dtr_inv || !cat.equal(*dtr_inv, dtrinv))
    throw NotRigidError("double-tilde inverse identity fails");

  d.mor[IdG] = idG;
  d.mor[IdF] = idF;
  d.mor[Eps] = eps;
  d.mor[Eta] = eta;
  d.mor[R] = r;
  d.mor[Rinv] = r_inv;
  d.mor[TildeR] = tr;
  d.mor[TildeRinv] = trinv;
  d.mor[DTildeR] = dtr;
  d.mor[DTildeRinv] = dtrinv;
  d.mor[InvTildeR] = *inv_tr;
  d.mor[InvTildeRinv] = *inv_trinv;
  return d;
}

template <class Cat>
MorTag event_tag(const morse::MorseEvent& e) {
  using morse::EventKind;
  switch (e.kind) {
    case EventKind::StrandUp: return IdG;
    case EventKind::StrandDown: return IdF;
    case EventKind::CapRL: return Eps;
    case EventKind::CupRL: return Eta;
    case EventKind::Crossing: return crossing_tag(e);
    default:
      throw NotNormalError("evaluate: diagram contains a left-to-right extremum");
  }
}

/// Evaluates a normal Morse word slice by slice, tensoring events left to
/// right and composing slices bottom to top.  Works for any boundary; for a
/// long-knot word the result is an endomorphism of G.
template <class Cat>
typename Cat::Mor evaluate(const Cat& cat, const RMatrixDatum<Cat>& datum,
                           const morse::MorseWord& w) {
  morse::validate(w);
  if (!morse::is_normal(w))
    throw NotNormalError("evaluate: diagram contains a left-to-right extremum");
  auto st = cat.eval_begin((int)w.bottom.size());
  for (const auto& slice : w.slices) {
    int offset = 0;
    int in_pos = 0;
    for (const auto& e : slice.events) {
      MorTag tag = event_tag<Cat>(e);
      if (tag != IdG && tag != IdF) {
        TagArity ar = tag_arity(tag);
        cat.eval_apply(st, in_pos + offset, ar.in, ar.out, datum.mor[tag]);
        offset += ar.out - ar.in;
      }
      in_pos += e.in_arity();
    }
  }
  return cat.eval_end(std::move(st));
}

/// The long-knot invariant: evaluation of the writhe-corrected normalization.
template <class Cat>
typename Cat::Mor invariant(const Cat& cat, const RMatrixDatum<Cat>& datum,
                            const morse::MorseWord& w) {
  morse::require_long_knot(w);
  return evaluate(cat, datum, morse::corrected(w));
}

// ---------------------------------------------------------------------------

/// Exact-matrix backend category over a commutative ring T.  Objects are
/// dimensions; morphisms dense matrices.
template <class T>
class MatCat {
 public:
  using Obj = int;  // dimension
  using Mor = Matrix<T>;

  explicit MatCat(int leg_dim, size_t max_state_elems = 30'000'000)
      : d_(leg_dim), max_state_(max_state_elems) {}
  int leg_dim() const { return d_; }

  Obj unit() const { return 1; }
  Obj tensor_obj(Obj a, Obj b) const { return a * b; }
  Mor identity(Obj a) const { return Matrix<T>::identity(a); }
  Mor compose(const Mor& f, const Mor& g) const { return f * g; }
  Mor tensor(const Mor& a, const Mor& b) const { return a.kron(b); }
  bool equal(const Mor& a, const Mor& b) const { return a == b; }
  std::optional<Mor> invert(const Mor& f) const { return f.inverse(); }

  /// (eps tensor id) . (id_F tensor x tensor id_F) . (id tensor eta) as a
  /// direct contraction, avoiding the dense four-leg intermediates:
  /// out[(b,k),(f,g)] = sum_{a,c} eps[(f,a)] x[(a,b),(g,c)] eta[(c,k)].
  /// All legs share the backend dimension.
  Mor sideways(const Mor& eps, const Mor& eta, const Mor& x, Obj, Obj, Obj) const {
    int d = d_;
    Mor out(d * d, d * d);
    for (int f = 0; f < d; ++f)
      for (int a = 0; a < d; ++a) {
        const T& ev = eps.at(0, f * d + a);
        if (ev.is_zero()) continue;
        for (int c = 0; c < d; ++c)
          for (int k = 0; k < d; ++k) {
            const T& hv = eta.at(c * d + k, 0);
            if (hv.is_zero()) continue;
            T w = ev * hv;
            for (int b = 0; b < d; ++b)
              for (int g = 0; g < d; ++g) {
                const T& xv = x.at(a * d + b, g * d + c);
                if (!xv.is_zero()) out.at(b * d + k, f * d + g) += w * xv;
              }
          }
      }
    return out;
  }

  struct State {
    int in_dim = 0;
    int width = 0;
    std::vector<T> data;  // data[bnd * in_dim + i]
  };

  State eval_begin(int in_width) const {
    State st;
    st.width = in_width;
    st.in_dim = 1;
    for (int k = 0; k < in_width; ++k) st.in_dim *= d_;
    st.data.assign((size_t)st.in_dim * st.in_dim, T(0));
    for (int i = 0; i < st.in_dim; ++i) st.data[(size_t)i * st.in_dim + i] = T(1);
    return st;
  }

  void eval_apply(State& st, int pos, int in_ar, int out_ar, const Mor& mor) const {
    int w = st.width;
    if (pos < 0 || pos + in_ar > w) throw Error("eval_apply: position out of range");
    size_t below = 1, block_in = 1, block_out = 1;
    for (int k = 0; k < w - pos - in_ar; ++k) below *= d_;
    for (int k = 0; k < in_ar; ++k) block_in *= d_;
    for (int k = 0; k < out_ar; ++k) block_out *= d_;
    size_t old_bnd = 1;
    for (int k = 0; k < w; ++k) old_bnd *= d_;
    size_t pre_count = old_bnd / (below * block_in);
    size_t new_bnd = pre_count * block_out * below;
    if (new_bnd * (size_t)st.in_dim > max_state_)
      throw ResourceLimitError("matrix backend state exceeds the size cap (" +
                               std::to_string(new_bnd * (size_t)st.in_dim) + " entries)");

    // sparse triplets of mor
    std::vector<std::tuple<size_t, size_t, T>> trip;
    for (int r = 0; r < mor.rows(); ++r)
      for (int c = 0; c < mor.cols(); ++c)
        if (!mor.at(r, c).is_zero()) trip.emplace_back((size_t)r, (size_t)c, mor.at(r, c));

    std::vector<T> next((size_t)new_bnd * st.in_dim, T(0));
    for (size_t pre = 0; pre < pre_count; ++pre)
      for (const auto& [mo, mi, v] : trip)
        for (size_t low = 0; low < below; ++low) {
          size_t src = ((pre * block_in + mi) * below + low) * st.in_dim;
          size_t dst = ((pre * block_out + mo) * below + low) * st.in_dim;
          for (int i = 0; i < st.in_dim; ++i) {
            const T& x = st.data[src + i];
            if (!x.is_zero()) next[dst + i] += v * x;
          }
        }
    st.data = std::move(next);
    st.width = w - in_ar + out_ar;
  }

  Mor eval_end(State&& st) const {
    size_t out_dim = 1;
    for (int k = 0; k < st.width; ++k) out_dim *= d_;
    Matrix<T> m((int)out_dim, st.in_dim);
    for (size_t b = 0; b < out_dim; ++b)
      for (int i = 0; i < st.in_dim; ++i) m.at((int)b, i) = st.data[b * st.in_dim + i];
    return m;
  }

 private:
  int d_;
  size_t max_state_;
};

}  // namespace lki::rt
