#include "lki/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>

namespace lki::morse {

namespace {

int det_sign(bool a, bool b) { return a == b ? +1 : -1; }

// All move patterns live in slices made of pass-through strands plus exactly
// one special event.  For such slices the special event's input and output
// positions both equal its event index, which keeps pattern windows aligned
// across adjacent slices.
struct SpecialEvent {
  int index = -1;
  MorseEvent event;
};

std::optional<SpecialEvent> single_special(const Slice& s) {
  SpecialEvent r;
  bool found = false;
  for (size_t i = 0; i < s.events.size(); ++i) {
    const auto& e = s.events[i];
    if (e.kind == EventKind::StrandUp || e.kind == EventKind::StrandDown) continue;
    if (found) return std::nullopt;
    found = true;
    r.index = (int)i;
    r.event = e;
  }
  if (!found) return std::nullopt;
  return r;
}

/// Slice made of strands for `sig` with `e` spliced in at event index `idx`,
/// consuming the matching inputs.
Slice splice(const std::vector<bool>& sig, int idx, const MorseEvent& e) {
  Slice s;
  int pos = 0;
  for (int i = 0; i < idx; ++i) s.events.push_back(MorseEvent::strand(sig[pos++]));
  s.events.push_back(e);
  pos += e.in_arity();
  while (pos < (int)sig.size()) s.events.push_back(MorseEvent::strand(sig[pos++]));
  return s;
}

struct Ctx {
  const MorseWord& w;
  std::vector<std::vector<bool>> sig;
  explicit Ctx(const MorseWord& word) : w(word), sig(boundaries(word)) {}

  int nslices() const { return (int)w.slices.size(); }

  std::optional<SpecialEvent> special(int i) const {
    if (i < 0 || i >= nslices()) return std::nullopt;
    return single_special(w.slices[i]);
  }
  std::optional<MorseEvent> crossing_at(int i, int index) const {
    auto se = special(i);
    if (!se || se->index != index || se->event.kind != EventKind::Crossing) return std::nullopt;
    return se->event;
  }
  bool kind_at(int i, int index, EventKind k) const {
    auto se = special(i);
    return se && se->index == index && se->event.kind == k;
  }
};

using Result = std::optional<MorseWord>;

// ---- RII --------------------------------------------------------------------

Result rii_insert(const Ctx& c, int boundary, int p, int sign) {
  if (boundary < 0 || boundary > c.nslices()) return std::nullopt;
  const auto& sig = c.sig[boundary];
  if (p < 0 || p + 1 >= (int)sig.size()) return std::nullopt;
  MorseEvent c1 = crossing_with_bottom(sig[p], sig[p + 1], sign);
  MorseEvent c2 = crossing_with_bottom(sig[p + 1], sig[p], -sign);
  std::vector<bool> mid = sig;
  bool t = mid[p];
  mid[p] = mid[p + 1];
  mid[p + 1] = t;
  MorseWord out = c.w;
  out.slices.insert(out.slices.begin() + boundary, {splice(sig, p, c1), splice(mid, p, c2)});
  return out;
}

Result rii_delete(const Ctx& c, int i, int p, int sign) {
  auto x1 = c.crossing_at(i, p);
  auto x2 = c.crossing_at(i + 1, p);
  if (!x1 || !x2) return std::nullopt;
  if (x1->sign != sign) return std::nullopt;
  bool l, r;
  x1->bottom_orients(l, r);
  if (!(*x2 == crossing_with_bottom(r, l, -x1->sign))) return std::nullopt;
  MorseWord out = c.w;
  out.slices.erase(out.slices.begin() + i, out.slices.begin() + i + 2);
  return out;
}

// ---- RI ----------------------------------------------------------------------

Result ri_insert(const Ctx& c, int boundary, int p, int sign) {
  if (boundary < 0 || boundary > c.nslices()) return std::nullopt;
  const auto& sig = c.sig[boundary];
  if (p < 0 || p >= (int)sig.size()) return std::nullopt;
  bool o = sig[p];
  std::vector<bool> s1 = sig;
  s1.insert(s1.begin() + p + 1, {true, false});  // cup legs
  std::vector<bool> s2 = s1;
  {
    bool t = s2[p];
    s2[p] = s2[p + 1];
    s2[p + 1] = t;
  }
  MorseWord out = c.w;
  Slice a = splice(sig, p + 1, {EventKind::CupRL, 0, false, false});
  Slice b = splice(s1, p, crossing_with_bottom(o, true, sign));
  Slice d = splice(s2, o ? p + 1 : p, {EventKind::CapLR, 0, false, false});
  out.slices.insert(out.slices.begin() + boundary, {a, b, d});
  return out;
}

Result ri_delete(const Ctx& c, int i, int p, int sign) {
  if (i < 0 || i + 2 >= c.nslices()) return std::nullopt;
  const auto& sig = c.sig[i];
  if (p < 0 || p >= (int)sig.size()) return std::nullopt;
  bool o = sig[p];
  if (!c.kind_at(i, p + 1, EventKind::CupRL)) return std::nullopt;
  auto x = c.crossing_at(i + 1, p);
  if (!x || x->sign != sign) return std::nullopt;
  bool l, r;
  x->bottom_orients(l, r);
  if (l != o || r != true) return std::nullopt;
  if (!c.kind_at(i + 2, o ? p + 1 : p, EventKind::CapLR)) return std::nullopt;
  MorseWord out = c.w;
  out.slices.erase(out.slices.begin() + i, out.slices.begin() + i + 3);
  return out;
}

// ---- R0 (cap and cup slides) --------------------------------------------------

Result r0_plus(const Ctx& c, int i, int p, bool inverse) {
  if (i < 0 || i + 1 >= c.nslices()) return std::nullopt;
  const auto& sig = c.sig[i];
  if (p < 0 || p + 2 >= (int)sig.size()) return std::nullopt;
  if (sig[p] != false || sig[p + 2] != true) return std::nullopt;
  bool o_y = sig[p + 1];
  MorseWord out = c.w;
  if (!inverse) {
    // [strand_down @p, crossing @(p+1,p+2)] ; [capRL @(p,p+1), strand @p+2]
    auto x = c.crossing_at(i, p + 1);
    if (!x || !c.kind_at(i + 1, p, EventKind::CapRL)) return std::nullopt;
    bool y_over = x->over_on_left();
    out.slices[i] = splice(sig, p, MorseEvent::crossing_lr(false, o_y, !y_over));
    std::vector<bool> mid = sig;
    mid[p] = o_y;
    mid[p + 1] = false;
    out.slices[i + 1] = splice(mid, p + 1, {EventKind::CapRL, 0, false, false});
  } else {
    // [crossing @(p,p+1), strand_up @p+2] ; [strand @p, capRL @(p+1,p+2)]
    auto x = c.crossing_at(i, p);
    if (!x || !c.kind_at(i + 1, p + 1, EventKind::CapRL)) return std::nullopt;
    bool y_over = !x->over_on_left();
    out.slices[i] = splice(sig, p + 1, MorseEvent::crossing_lr(o_y, true, y_over));
    std::vector<bool> mid = sig;
    mid[p] = false;
    mid[p + 1] = true;
    mid[p + 2] = o_y;
    out.slices[i + 1] = splice(mid, p, {EventKind::CapRL, 0, false, false});
  }
  return out;
}

Result r0_minus(const Ctx& c, int i, int p, bool inverse) {
  if (i < 0 || i + 1 >= c.nslices()) return std::nullopt;
  const auto& bot = c.sig[i];
  if (p < 0 || p >= (int)bot.size()) return std::nullopt;
  bool o_y = bot[p];
  MorseWord out = c.w;
  if (!inverse) {
    // [cupRL @idx p, strand y @idx p+1] ; [strand @p, crossing @(p+1,p+2)]
    if (!c.kind_at(i, p, EventKind::CupRL)) return std::nullopt;
    auto x = c.crossing_at(i + 1, p + 1);
    if (!x) return std::nullopt;
    bool y_over = !x->over_on_left();
    out.slices[i] = splice(bot, p + 1, {EventKind::CupRL, 0, false, false});
    std::vector<bool> mid = bot;
    mid.insert(mid.begin() + p + 1, {true, false});
    out.slices[i + 1] = splice(mid, p, MorseEvent::crossing_lr(o_y, true, y_over));
  } else {
    // [strand y @idx p, cupRL @idx p+1] ; [crossing @(p,p+1), strand @p+2]
    if (!c.kind_at(i, p + 1, EventKind::CupRL)) return std::nullopt;
    auto x = c.crossing_at(i + 1, p);
    if (!x) return std::nullopt;
    bool y_over = x->over_on_left();
    out.slices[i] = splice(bot, p, {EventKind::CupRL, 0, false, false});
    std::vector<bool> mid = bot;
    mid.insert(mid.begin() + p, {true, false});
    out.slices[i + 1] = splice(mid, p + 1, MorseEvent::crossing_lr(false, o_y, !y_over));
  }
  return out;
}

// ---- RIII ----------------------------------------------------------------------

struct RIIIData {
  std::array<bool, 3> orient = {false, false, false};
  bool over01 = false, over02 = false, over12 = false;
};

bool riii_pair_over(const RIIIData& d, int a, int b) {
  if (a > b) return !riii_pair_over(d, b, a);
  if (a == 0 && b == 1) return d.over01;
  if (a == 0 && b == 2) return d.over02;
  return d.over12;
}

std::optional<RIIIData> riii_extract(const Ctx& c, int i, int p, bool pattern_b) {
  if (i < 0 || i + 2 >= c.nslices()) return std::nullopt;
  const auto& sig = c.sig[i];
  if (p < 0 || p + 2 >= (int)sig.size()) return std::nullopt;
  RIIIData d;
  for (int k = 0; k < 3; ++k) d.orient[k] = sig[p + k];
  std::array<int, 3> ord = {0, 1, 2};
  const int off_a[3] = {0, 1, 0};
  const int off_b[3] = {1, 0, 1};
  for (int step = 0; step < 3; ++step) {
    int off = (pattern_b ? off_b : off_a)[step];
    auto x = c.crossing_at(i + step, p + off);
    if (!x) return std::nullopt;
    int a = ord[off], b = ord[off + 1];
    bool a_over = x->over_on_left();
    int hi = a_over ? a : b, lo = a_over ? b : a;
    if ((hi + lo) == 1) d.over01 = hi == 0;
    if ((hi + lo) == 2) d.over02 = hi == 0;
    if ((hi + lo) == 3) d.over12 = hi == 1;
    std::swap(ord[off], ord[off + 1]);
  }
  return d;
}

Result riii_apply(const Ctx& c, int i, int p, bool inverse) {
  bool from_b = inverse;
  auto dd = riii_extract(c, i, p, from_b);
  if (!dd) return std::nullopt;
  const RIIIData& d = *dd;
  // The move exists only when the over/under relation is a total order.
  int wins0 = (int)riii_pair_over(d, 0, 1) + (int)riii_pair_over(d, 0, 2);
  int wins1 = (int)riii_pair_over(d, 1, 0) + (int)riii_pair_over(d, 1, 2);
  int wins2 = (int)riii_pair_over(d, 2, 0) + (int)riii_pair_over(d, 2, 1);
  if (wins0 == wins1 || wins1 == wins2 || wins0 == wins2) return std::nullopt;

  MorseWord out = c.w;
  std::array<int, 3> ord = {0, 1, 2};
  std::vector<bool> cur = c.sig[i];
  const int off_a[3] = {0, 1, 0};
  const int off_b[3] = {1, 0, 1};
  for (int step = 0; step < 3; ++step) {
    int off = (from_b ? off_a : off_b)[step];  // rewrite to the other pattern
    int a = ord[off], b = ord[off + 1];
    MorseEvent x = MorseEvent::crossing_lr(d.orient[a], d.orient[b], riii_pair_over(d, a, b));
    out.slices[i + step] = splice(cur, p + off, x);
    bool t = cur[p + off];
    cur[p + off] = cur[p + off + 1];
    cur[p + off + 1] = t;
    std::swap(ord[off], ord[off + 1]);
  }
  return out;
}

Result dispatch(const Ctx& c, const ReidemeisterMove& m) {
  switch (m.kind) {
    case MoveKind::RIIBasic:
      if (m.variant != +1 && m.variant != -1) return std::nullopt;
      return m.inverse ? rii_delete(c, m.slice, m.pos, m.variant)
                       : rii_insert(c, m.slice, m.pos, m.variant);
    case MoveKind::RIPositive:
      return m.inverse ? ri_delete(c, m.slice, m.pos, +1) : ri_insert(c, m.slice, m.pos, +1);
    case MoveKind::RINegative:
      return m.inverse ? ri_delete(c, m.slice, m.pos, -1) : ri_insert(c, m.slice, m.pos, -1);
    case MoveKind::R0Plus:
      return r0_plus(c, m.slice, m.pos, m.inverse);
    case MoveKind::R0Minus:
      return r0_minus(c, m.slice, m.pos, m.inverse);
    case MoveKind::RIII:
      return riii_apply(c, m.slice, m.pos, m.inverse);
  }
  return std::nullopt;
}

}  // namespace

MorseEvent crossing_with_bottom(bool left_up, bool right_up, int sign) {
  bool left_over = sign == det_sign(left_up, right_up);
  return MorseEvent::crossing_lr(left_up, right_up, left_over);
}

MorseWord apply_move(const MorseWord& w, const ReidemeisterMove& m) {
  Ctx c(w);
  auto r = dispatch(c, m);
  if (!r) throw PatternMismatchError("move pattern does not match at the given location");
  return *r;
}

ReidemeisterMove move_inverse(const ReidemeisterMove& m) {
  ReidemeisterMove r = m;
  r.inverse = !m.inverse;
  return r;
}

std::vector<ReidemeisterMove> enumerate_moves(const MorseWord& w, int max_width) {
  std::vector<ReidemeisterMove> out;
  Ctx c(w);
  int nslices = c.nslices();
  auto try_push = [&](ReidemeisterMove m) {
    if (dispatch(c, m)) out.push_back(m);
  };
  for (int b = 0; b <= nslices; ++b) {
    int width = (int)c.sig[b].size();
    for (int p = 0; p + 1 < width; ++p)
      for (int s : {+1, -1})
        try_push({MoveKind::RIIBasic, b, p, s, false});
    if (width + 2 <= max_width)
      for (int p = 0; p < width; ++p) {
        try_push({MoveKind::RIPositive, b, p, 0, false});
        try_push({MoveKind::RINegative, b, p, 0, false});
      }
  }
  for (int i = 0; i < nslices; ++i) {
    int width = (int)c.sig[i].size();
    for (int p = 0; p < width; ++p) {
      for (int s : {+1, -1})
        try_push({MoveKind::RIIBasic, i, p, s, true});
      for (bool inv : {false, true}) {
        try_push({MoveKind::R0Plus, i, p, 0, inv});
        try_push({MoveKind::R0Minus, i, p, 0, inv});
        try_push({MoveKind::RIII, i, p, 0, inv});
      }
      try_push({MoveKind::RIPositive, i, p, 0, true});
      try_push({MoveKind::RINegative, i, p, 0, true});
    }
  }
  return out;
}

MorseWord random_move_sequence(const MorseWord& w, uint64_t seed, int length,
                               std::vector<ReidemeisterMove>* log, int max_width) {
  std::mt19937_64 rng(seed);
  MorseWord cur = w;
  for (int step = 0; step < length; ++step) {
    auto moves = enumerate_moves(cur, max_width);
    if (moves.empty()) break;
    // stratified draw: kind/direction first, then instance, so that the rare
    // slide and triangle moves are not drowned out by RII insertions
    std::vector<std::pair<MoveKind, bool>> kinds;
    for (const auto& m : moves) {
      std::pair<MoveKind, bool> k{m.kind, m.inverse};
      if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
    }
    auto pick = kinds[rng() % kinds.size()];
    std::vector<const ReidemeisterMove*> pool;
    for (const auto& m : moves)
      if (m.kind == pick.first && m.inverse == pick.second) pool.push_back(&m);
    const auto& m = *pool[rng() % pool.size()];
    cur = apply_move(cur, m);
    if (log) log->push_back(m);
  }
  return cur;
}

MorseWord random_move_sequence(const MorseWord& w, uint64_t seed, int length, int max_width) {
  return random_move_sequence(w, seed, length, nullptr, max_width);
}

RIIIClass riii_class(const MorseWord& w, const ReidemeisterMove& m) {
  Ctx c(w);
  auto d = riii_extract(c, m.slice, m.pos, m.inverse);
  if (!d) throw PatternMismatchError("riii_class: no RIII pattern at location");
  RIIIClass r;
  for (int k = 0; k < 3; ++k) {
    int unders = 0;
    for (int j = 0; j < 3; ++j)
      if (j != k && !riii_pair_over(*d, k, j)) ++unders;
    r.arcs[k] = 1 + unders;
    r.signs[k] = d->orient[k] ? +1 : -1;
  }
  return r;
}

}  // namespace lki::morse
