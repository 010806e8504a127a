#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lki/errors.hpp"
#include "lki/group.hpp"

namespace lki::setcat {

// Multiplicities live in a commutative semiring: natural numbers for Span,
// booleans for Rel.  Rel composition is then exactly the boolean shadow of
// Span composition.
struct NatSemiring {
  using Val = unsigned long long;
  static Val zero() { return 0; }
  static Val one() { return 1; }
  static Val add(Val a, Val b) { return a + b; }
  static Val mul(Val a, Val b) { return a * b; }
};

struct BoolSemiring {
  using Val = unsigned char;
  static Val zero() { return 0; }
  static Val one() { return 1; }
  static Val add(Val a, Val b) { return a || b ? 1 : 0; }
  static Val mul(Val a, Val b) { return a && b ? 1 : 0; }
};

/// Equivalence class of spans between tensor powers of a fixed finite carrier
/// X, stored as a sparse multiplicity table indexed by packed tuples (leftmost
/// factor most significant).
template <class S>
struct Span {
  int base = 0;  // |X|
  int src_ar = 0, dst_ar = 0;
  std::map<uint64_t, std::map<uint64_t, typename S::Val>> m;

  void add(uint64_t s, uint64_t d, typename S::Val v) {
    auto& cell = m[s][d];
    cell = S::add(cell, v);
  }
};

uint64_t ipow(uint64_t b, int e);

/// Rel and Span as backend categories over a fixed carrier size.  Objects are
/// tensor powers of the carrier.
template <class S>
class SpanCat {
 public:
  using Obj = int;  // arity
  using Mor = Span<S>;
  using Val = typename S::Val;

  explicit SpanCat(int base) : base_(base) {}
  int base() const { return base_; }

  Obj unit() const { return 0; }
  Obj tensor_obj(Obj a, Obj b) const { return a + b; }

  Mor identity(Obj a) const;
  Mor compose(const Mor& f, const Mor& g) const;  // f after g
  Mor tensor(const Mor& a, const Mor& b) const;
  bool equal(const Mor& a, const Mor& b) const;
  /// (eps tensor id) . (id_F tensor x tensor id_F) . (id tensor eta); spans
  /// stay sparse so the composite route is fine here.
  Mor sideways(const Mor& eps, const Mor& eta, const Mor& x, Obj f, Obj left, Obj right) const {
    Mor s1 = tensor(identity(f + left), eta);
    Mor s2 = tensor(tensor(identity(f), x), identity(f));
    Mor s3 = tensor(eps, identity(right + f));
    return compose(s3, compose(s2, s1));
  }
  /// Inverts graphs of bijections (permutation tables); nullopt otherwise —
  /// in Rel and Span those are the only two-sided invertibles.
  std::optional<Mor> invert(const Mor& f) const;

  // -- sparse evaluation state for the RT functor -----------------------------
  struct State {
    int in_ar = 0;
    int width = 0;
    // keyed by input tuple, then boundary tuple
    std::vector<std::map<uint64_t, Val>> rows;
  };

  State eval_begin(int in_width) const;
  void eval_apply(State& st, int pos, int in_ar, int out_ar, const Mor& mor) const;
  Mor eval_end(State&& st) const;

 private:
  int base_;
};

using SpanNat = Span<NatSemiring>;
using SpanBool = Span<BoolSemiring>;
using SpanBackend = SpanCat<NatSemiring>;
using RelBackend = SpanCat<BoolSemiring>;

/// Entrywise nonempty-fiber shadow Span -> Rel.
SpanBool varpi(const SpanNat& z);

// ---------------------------------------------------------------------------

/// Left rack: x.y self-distributive with x*(x.y) = y.
struct RackTable {
  int n = 0;
  std::vector<std::vector<int>> dot;   // dot[x][y] = x . y
  std::vector<std::vector<int>> star;  // star[x][y] = x * y
};

/// Throws Error("rack axiom...") on violation.
void verify_rack(const RackTable& r);

/// Conjugation rack of a pointed group: (g,h) -> (g mu g^-1 h, g mu^-1 g^-1 h).
RackTable rack_from_pointed_group(const FiniteGroup& g, int mu);

/// The four structure maps of a rack as graphs on X^2.
enum class RackMap { R, RPrime, SMap, SPrimeMap };
template <class S>
Span<S> rack_graph(const RackTable& r, RackMap which);

/// Base R-matrix datum {eps, eta, r, r_inv} of a rack in Rel or Span.
template <class S>
struct RackDatum {
  Span<S> eps, eta, r, r_inv;
};
template <class S>
RackDatum<S> rmatrix_from_rack(const RackTable& r);

// ---------------------------------------------------------------------------

/// Dense multiplicity matrix view of an arity-1 span (the invariant values).
struct SpanMatrix {
  int src = 0, dst = 0;
  std::vector<std::vector<unsigned long long>> mult;

  bool operator==(const SpanMatrix& o) const {
    return src == o.src && dst == o.dst && mult == o.mult;
  }
};

SpanMatrix to_matrix(const SpanNat& z);
SpanMatrix to_matrix(const SpanBool& z);
SpanMatrix varpi(const SpanMatrix& z);
unsigned long long fiber_count(const SpanMatrix& j, int x, int y);

}  // namespace lki::setcat
