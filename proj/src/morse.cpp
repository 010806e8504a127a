#include "lki/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lki::morse {

static int det_sign(bool over_up, bool under_up) {
  // Sign of the crossing when the over strand sits on the bottom-left
  // diagonal; flipping the diagonal flips the sign.
  return over_up == under_up ? +1 : -1;
}

MorseEvent MorseEvent::crossing_lr(bool o_left_up, bool o_right_up, bool left_over) {
  bool over_up = left_over ? o_left_up : o_right_up;
  bool under_up = left_over ? o_right_up : o_left_up;
  int sign = left_over ? det_sign(over_up, under_up) : -det_sign(over_up, under_up);
  return crossing(sign, over_up, under_up);
}

bool MorseEvent::over_on_left() const {
  return sign == det_sign(over_up, under_up);
}

void MorseEvent::bottom_orients(bool& left_up, bool& right_up) const {
  if (over_on_left()) {
    left_up = over_up;
    right_up = under_up;
  } else {
    left_up = under_up;
    right_up = over_up;
  }
}

int MorseEvent::in_arity() const {
  switch (kind) {
    case EventKind::StrandUp:
    case EventKind::StrandDown: return 1;
    case EventKind::CapRL:
    case EventKind::CapLR: return 2;
    case EventKind::CupRL:
    case EventKind::CupLR: return 0;
    case EventKind::Crossing: return 2;
  }
  return 0;
}

int MorseEvent::out_arity() const {
  switch (kind) {
    case EventKind::StrandUp:
    case EventKind::StrandDown: return 1;
    case EventKind::CapRL:
    case EventKind::CapLR: return 0;
    case EventKind::CupRL:
    case EventKind::CupLR: return 2;
    case EventKind::Crossing: return 2;
  }
  return 0;
}

void MorseEvent::in_orients(bool out[2]) const {
  switch (kind) {
    case EventKind::StrandUp: out[0] = true; break;
    case EventKind::StrandDown: out[0] = false; break;
    case EventKind::CapRL: out[0] = false; out[1] = true; break;
    case EventKind::CapLR: out[0] = true; out[1] = false; break;
    case EventKind::CupRL:
    case EventKind::CupLR: break;
    case EventKind::Crossing: {
      bool l, r;
      bottom_orients(l, r);
      out[0] = l;
      out[1] = r;
      break;
    }
  }
}

void MorseEvent::out_orients(bool out[2]) const {
  switch (kind) {
    case EventKind::StrandUp: out[0] = true; break;
    case EventKind::StrandDown: out[0] = false; break;
    case EventKind::CapRL:
    case EventKind::CapLR: break;
    case EventKind::CupRL: out[0] = true; out[1] = false; break;
    case EventKind::CupLR: out[0] = false; out[1] = true; break;
    case EventKind::Crossing: {
      bool l, r;
      bottom_orients(l, r);
      out[0] = r;  // strands swap sides
      out[1] = l;
      break;
    }
  }
}

bool MorseEvent::operator==(const MorseEvent& o) const {
  if (kind != o.kind) return false;
  if (kind != EventKind::Crossing) return true;
  return sign == o.sign && over_up == o.over_up && under_up == o.under_up;
}

MorseWord trivial_word() { return MorseWord{{true}, {}}; }

std::vector<std::vector<bool>> boundaries(const MorseWord& w) {
  std::vector<std::vector<bool>> sig;
  sig.push_back(w.bottom);
  for (size_t si = 0; si < w.slices.size(); ++si) {
    const auto& cur = sig.back();
    std::vector<bool> next;
    size_t pos = 0;
    for (size_t ei = 0; ei < w.slices[si].events.size(); ++ei) {
      const MorseEvent& e = w.slices[si].events[ei];
      bool io[2] = {false, false};
      e.in_orients(io);
      for (int k = 0; k < e.in_arity(); ++k) {
        if (pos >= cur.size())
          throw ValidationError("slice " + std::to_string(si) + ": too many inputs");
        if (cur[pos] != io[k])
          throw ValidationError("slice " + std::to_string(si) + ": orientation mismatch at position " +
                                std::to_string(pos));
        ++pos;
      }
      bool oo[2] = {false, false};
      e.out_orients(oo);
      for (int k = 0; k < e.out_arity(); ++k) next.push_back(oo[k]);
    }
    if (pos != cur.size())
      throw ValidationError("slice " + std::to_string(si) + ": unconsumed strands");
    sig.push_back(std::move(next));
  }
  return sig;
}

void validate(const MorseWord& w) { boundaries(w); }

namespace {

// Port-walking machinery shared by connectivity check and crossing tracing.
struct Walker {
  const MorseWord& w;
  std::vector<std::vector<bool>> sig;
  // For each slice, prefix sums of in/out arities per event.
  std::vector<std::vector<int>> in_off, out_off;

  explicit Walker(const MorseWord& word) : w(word), sig(boundaries(word)) {
    in_off.resize(w.slices.size());
    out_off.resize(w.slices.size());
    for (size_t s = 0; s < w.slices.size(); ++s) {
      int i = 0, o = 0;
      for (const auto& e : w.slices[s].events) {
        in_off[s].push_back(i);
        out_off[s].push_back(o);
        i += e.in_arity();
        o += e.out_arity();
      }
    }
  }

  int event_at(int slice, bool bottom, int pos, int& offset) const {
    const auto& offs = bottom ? in_off[slice] : out_off[slice];
    const auto& evs = w.slices[slice].events;
    for (size_t k = evs.size(); k-- > 0;) {
      int a = bottom ? evs[k].in_arity() : evs[k].out_arity();
      if (offs[k] <= pos && pos < offs[k] + a) {
        offset = pos - offs[k];
        return (int)k;
      }
    }
    throw ValidationError("internal: port lookup failed");
  }
};

}  // namespace

std::vector<CrossingPassage> trace_crossings_impl(const MorseWord& w, bool* single_component) {
  Walker wk(w);
  std::vector<CrossingPassage> out;
  size_t total_passages = 0;
  for (const auto& sl : w.slices)
    for (const auto& e : sl.events)
      total_passages += e.kind == EventKind::Crossing ? 2 : 1;

  size_t visited = 0;
  // Position state: about to enter slice `slice` from below at `pos` moving up,
  // or from above at `pos` moving down.
  int slice = 0, pos = 0;
  bool moving_up = true;
  while (true) {
    if (moving_up && slice == (int)w.slices.size()) break;  // exited at the top
    if (!moving_up && slice < 0)
      throw ValidationError("knot path exited at the bottom");
    int offset = 0;
    int ei = wk.event_at(slice, moving_up, pos, offset);
    const MorseEvent& e = w.slices[slice].events[ei];
    ++visited;
    switch (e.kind) {
      case EventKind::StrandUp:
      case EventKind::StrandDown:
        pos = moving_up ? wk.out_off[slice][ei] : wk.in_off[slice][ei];
        slice += moving_up ? 1 : -1;
        break;
      case EventKind::CapRL:
      case EventKind::CapLR:
        // enter at one bottom endpoint moving up, leave at the other moving down
        pos = wk.in_off[slice][ei] + (1 - offset);
        moving_up = false;
        slice -= 1;
        break;
      case EventKind::CupRL:
      case EventKind::CupLR:
        pos = wk.out_off[slice][ei] + (1 - offset);
        moving_up = true;
        slice += 1;
        break;
      case EventKind::Crossing: {
        // left diagonal: bottom 0 <-> top 1; right diagonal: bottom 1 <-> top 0
        bool left_diag = moving_up ? (offset == 0) : (offset == 1);
        bool under = left_diag != e.over_on_left();
        out.push_back({slice, ei, under, e.sign});
        int exit_offset = moving_up ? (offset == 0 ? 1 : 0) : (offset == 1 ? 0 : 1);
        pos = (moving_up ? wk.out_off : wk.in_off)[slice][ei] + exit_offset;
        slice += moving_up ? 1 : -1;
        break;
      }
    }
    if (visited > 4 * total_passages + 8)
      throw ValidationError("knot path does not terminate");
  }
  if (single_component) *single_component = (visited == total_passages);
  return out;
}

bool is_long_knot(const MorseWord& w) {
  try {
    auto sig = boundaries(w);
    if (!(sig.front() == std::vector<bool>{true})) return false;
    if (!(sig.back() == std::vector<bool>{true})) return false;
    bool single = false;
    trace_crossings_impl(w, &single);
    return single;
  } catch (const ValidationError&) {
    return false;
  }
}

void require_long_knot(const MorseWord& w) {
  auto sig = boundaries(w);
  if (!(sig.front() == std::vector<bool>{true}) || !(sig.back() == std::vector<bool>{true}))
    throw ValidationError("not a long-knot word: boundary is not a single up strand");
  bool single = false;
  trace_crossings_impl(w, &single);
  if (!single)
    throw ValidationError("not a long-knot word: more than one component");
}

std::vector<CrossingPassage> trace_crossings(const MorseWord& w) {
  bool single = false;
  auto out = trace_crossings_impl(w, &single);
  if (!single) throw ValidationError("diagram has more than one component");
  return out;
}

static bool slice_is_identity(const Slice& s) {
  for (const auto& e : s.events)
    if (e.kind != EventKind::StrandUp && e.kind != EventKind::StrandDown) return false;
  return true;
}

MorseWord canonical(const MorseWord& w) {
  MorseWord r;
  r.bottom = w.bottom;
  for (const auto& s : w.slices)
    if (!slice_is_identity(s)) r.slices.push_back(s);
  return r;
}

bool words_equal(const MorseWord& a, const MorseWord& b) {
  return canonical(a) == canonical(b);
}

int writhe(const MorseWord& w) {
  int total = 0;
  for (const auto& s : w.slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::Crossing) total += e.sign;
  return total;
}

bool is_normal(const MorseWord& w) {
  for (const auto& s : w.slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::CapLR || e.kind == EventKind::CupLR) return false;
  return true;
}

MorseWord normalize(const MorseWord& w) {
  MorseWord cur = w;
  validate(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t si = 0; si < cur.slices.size() && !changed; ++si) {
      const Slice& s = cur.slices[si];
      for (size_t ei = 0; ei < s.events.size(); ++ei) {
        const MorseEvent& e = s.events[ei];
        if (e.kind == EventKind::CapLR) {
          // up/down pair is isotoped through a vertical tangency: the rising
          // strand crosses over the falling one, then a normal cap closes.
          Slice below;
          for (size_t k = 0; k < s.events.size(); ++k) {
            const MorseEvent& f = s.events[k];
            if (k == ei) {
              below.events.push_back(MorseEvent::crossing_lr(true, false, true));
            } else {
              bool io[2];
              f.in_orients(io);
              for (int t = 0; t < f.in_arity(); ++t) below.events.push_back(MorseEvent::strand(io[t]));
            }
          }
          Slice above = s;
          above.events[ei].kind = EventKind::CapRL;
          cur.slices[si] = above;
          cur.slices.insert(cur.slices.begin() + si, below);
          changed = true;
          break;
        }
        if (e.kind == EventKind::CupLR) {
          // Dual replacement: normal cup first, then the falling strand
          // crosses over the cup's rising leg.
          Slice below = s;
          below.events[ei].kind = EventKind::CupRL;
          Slice above;
          for (size_t k = 0; k < s.events.size(); ++k) {
            const MorseEvent& f = s.events[k];
            if (k == ei) {
              above.events.push_back(MorseEvent::crossing_lr(true, false, false));
            } else {
              bool oo[2];
              f.out_orients(oo);
              for (int t = 0; t < f.out_arity(); ++t) above.events.push_back(MorseEvent::strand(oo[t]));
            }
          }
          cur.slices[si] = below;
          cur.slices.insert(cur.slices.begin() + si + 1, above);
          changed = true;
          break;
        }
      }
    }
  }
  return canonical(cur);
}

MorseWord xi(int n) {
  if (n == 0) return trivial_word();
  bool pos = n > 0;
  // xi^+ : the rising strand dives into a cup on its right, the falling
  // return crosses over both strands and closes with a cap; xi^- mirrors the
  // over/under choices.
  MorseEvent c = pos ? MorseEvent::crossing(+1, false, true)   // x+du
                     : MorseEvent::crossing(-1, true, false);  // x-ud
  MorseWord unit;
  unit.bottom = {true};
  unit.slices.resize(4);
  unit.slices[0].events = {MorseEvent::strand(true), {EventKind::CupRL, 0, false, false}};
  unit.slices[1].events = {MorseEvent::strand(true), c};
  unit.slices[2].events = {c, MorseEvent::strand(true)};
  unit.slices[3].events = {{EventKind::CapRL, 0, false, false}, MorseEvent::strand(true)};
  MorseWord out = unit;
  for (int k = 1; k < std::abs(n); ++k) out = compose(out, unit);
  return out;
}

MorseWord compose(const MorseWord& d, const MorseWord& d2) {
  require_long_knot(d);
  require_long_knot(d2);
  MorseWord r;
  r.bottom = {true};
  r.slices = d2.slices;
  r.slices.insert(r.slices.end(), d.slices.begin(), d.slices.end());
  return r;
}

MorseWord corrected(const MorseWord& d) {
  MorseWord nd = normalize(d);
  int w = writhe(nd);
  if (w % 2 != 0)
    throw ValidationError("internal invariant violation: normal diagram with odd writhe");
  if (w == 0) return canonical(nd);
  return canonical(compose(nd, xi(-w / 2)));
}

MorseWord from_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) throw ValidationError("from_braid: need at least one strand");
  for (int g : word) {
    int i = std::abs(g);
    if (i < 1 || i >= strands)
      throw ValidationError("from_braid: generator " + std::to_string(g) + " out of range");
  }
  MorseWord w;
  w.bottom = {true};
  // Right-nested cups create strands 2..n (upward) with their downward
  // returns stacked to the right, innermost return first.
  for (int j = 1; j < strands; ++j) {
    Slice s;
    for (int p = 0; p < j; ++p) s.events.push_back(MorseEvent::strand(true));
    s.events.push_back({EventKind::CupRL, 0, false, false});
    for (int p = 0; p < j - 1; ++p) s.events.push_back(MorseEvent::strand(false));
    w.slices.push_back(std::move(s));
  }
  int width = 2 * strands - 1;
  for (int g : word) {
    int i = std::abs(g);
    Slice s;
    for (int p = 0; p < i - 1; ++p) s.events.push_back(MorseEvent::strand(true));
    // positive generator: the left strand passes over
    s.events.push_back(MorseEvent::crossing_lr(true, true, g > 0));
    for (int p = i + 1; p < strands; ++p) s.events.push_back(MorseEvent::strand(true));
    for (int p = strands; p < width; ++p) s.events.push_back(MorseEvent::strand(false));
    w.slices.push_back(std::move(s));
  }
  for (int j = strands - 1; j >= 1; --j) {
    // close braid top j with its return (adjacent after inner closures)
    Slice s;
    for (int p = 0; p < j; ++p) s.events.push_back(MorseEvent::strand(true));
    s.events.push_back({EventKind::CapLR, 0, false, false});
    for (int p = 0; p < j - 1; ++p) s.events.push_back(MorseEvent::strand(false));
    w.slices.push_back(std::move(s));
  }
  validate(w);
  bool single = false;
  trace_crossings_impl(w, &single);
  if (!single)
    throw ValidationError("from_braid: closure has more than one component");
  return w;
}

// ---------------------------------------------------------------------------

std::string event_token(const MorseEvent& e) {
  switch (e.kind) {
    case EventKind::StrandUp: return "u";
    case EventKind::StrandDown: return "d";
    case EventKind::CapRL: return "capRL";
    case EventKind::CapLR: return "capLR";
    case EventKind::CupRL: return "cupRL";
    case EventKind::CupLR: return "cupLR";
    case EventKind::Crossing: {
      std::string s = "x";
      s += e.sign > 0 ? '+' : '-';
      s += e.over_up ? 'u' : 'd';
      s += e.under_up ? 'u' : 'd';
      return s;
    }
  }
  return "?";
}

MorseEvent event_from_token(const std::string& tok) {
  if (tok == "u") return MorseEvent::strand(true);
  if (tok == "d") return MorseEvent::strand(false);
  if (tok == "capRL") return {EventKind::CapRL, 0, false, false};
  if (tok == "capLR") return {EventKind::CapLR, 0, false, false};
  if (tok == "cupRL") return {EventKind::CupRL, 0, false, false};
  if (tok == "cupLR") return {EventKind::CupLR, 0, false, false};
  if (tok.size() == 4 && tok[0] == 'x' && (tok[1] == '+' || tok[1] == '-') &&
      (tok[2] == 'u' || tok[2] == 'd') && (tok[3] == 'u' || tok[3] == 'd'))
    return MorseEvent::crossing(tok[1] == '+' ? +1 : -1, tok[2] == 'u', tok[3] == 'u');
  throw ParseError("unknown event token '" + tok + "'", 0, 0);
}

MorseWord parse_morse(const std::string& text) {
  MorseWord w;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_any = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    saw_any = true;
    if (toks.size() == 1 && toks[0] == "|") continue;  // explicit trivial slice
    Slice s;
    size_t col = 1;
    for (const auto& tok : toks) {
      size_t where = line.find(tok, col - 1);
      col = where == std::string::npos ? col : where + 1;
      try {
        s.events.push_back(event_from_token(tok));
      } catch (const ParseError&) {
        throw ParseError("unknown event token '" + tok + "'", lineno, (int)col);
      }
    }
    w.slices.push_back(std::move(s));
  }
  if (!saw_any) throw ParseError("empty input", lineno == 0 ? 1 : lineno, 1);
  // Bottom signature is implied by the first slice; the trivial word has none.
  if (w.slices.empty()) {
    w.bottom = {true};
  } else {
    for (const auto& e : w.slices[0].events) {
      bool io[2];
      e.in_orients(io);
      for (int k = 0; k < e.in_arity(); ++k) w.bottom.push_back(io[k]);
    }
  }
  validate(w);
  return w;
}

std::string serialize(const MorseWord& w) {
  if (w.slices.empty()) return "|\n";
  std::string out;
  for (const auto& s : w.slices) {
    for (size_t i = 0; i < s.events.size(); ++i) {
      if (i) out += ' ';
      out += event_token(s.events[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const MorseWord& w) {
  nlohmann::json j;
  j["bottom"] = nlohmann::json::array();
  for (bool b : w.bottom) j["bottom"].push_back(b ? "u" : "d");
  j["slices"] = nlohmann::json::array();
  for (const auto& s : w.slices) {
    nlohmann::json sl = nlohmann::json::array();
    for (const auto& e : s.events) sl.push_back(event_token(e));
    j["slices"].push_back(sl);
  }
  return j.dump();
}

MorseWord from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  MorseWord w;
  for (const auto& b : j.at("bottom")) w.bottom.push_back(b.get<std::string>() == "u");
  for (const auto& sl : j.at("slices")) {
    Slice s;
    for (const auto& t : sl) s.events.push_back(event_from_token(t.get<std::string>()));
    w.slices.push_back(std::move(s));
  }
  validate(w);
  return w;
}

}  // namespace lki::morse
