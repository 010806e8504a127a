#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lki/errors.hpp"

namespace lki::morse {

// Elementary tangle events inside one horizontal slice.
//
// Orientation bookkeeping: every strand endpoint on a slice boundary is either
// up-oriented (the strand points upward there) or down-oriented.  Caps and cups
// are named by the direction the strand travels through the extremum: the
// right-to-left ones (CapRL, CupRL) are the normal-form extrema, the
// left-to-right ones are removed by normalization.
enum class EventKind : uint8_t {
  StrandUp,
  StrandDown,
  CapRL,  // consumes (down, up)
  CapLR,  // consumes (up, down); not normal
  CupRL,  // produces (up, down)
  CupLR,  // produces (down, up); not normal
  Crossing,
};

struct MorseEvent {
  EventKind kind = EventKind::StrandUp;
  // Crossing data: sign is +1 iff the ordered pair (over-tangent,
  // under-tangent) is positively oriented; over_up/under_up give the
  // orientation of the over- and under-strand.
  int8_t sign = 0;
  bool over_up = false;
  bool under_up = false;

  static MorseEvent strand(bool up) {
    return {up ? EventKind::StrandUp : EventKind::StrandDown, 0, false, false};
  }
  static MorseEvent crossing(int sign, bool over_up, bool under_up) {
    return {EventKind::Crossing, (int8_t)sign, over_up, under_up};
  }
  /// Crossing specified by the diagonals: o_left/o_right are the orientations
  /// of the strands through the bottom-left and bottom-right endpoints,
  /// left_over says whether the bottom-left diagonal is the over strand.
  static MorseEvent crossing_lr(bool o_left_up, bool o_right_up, bool left_over);

  int in_arity() const;
  int out_arity() const;
  /// Orientations consumed at the bottom (left to right).
  void in_orients(bool out[2]) const;
  /// Orientations produced at the top (left to right).
  void out_orients(bool out[2]) const;

  /// For crossings: true if the over strand runs bottom-left to top-right.
  bool over_on_left() const;
  /// For crossings: orientations (bottom-left, bottom-right).
  void bottom_orients(bool& left_up, bool& right_up) const;

  bool operator==(const MorseEvent& o) const;
};

struct Slice {
  std::vector<MorseEvent> events;
  bool operator==(const Slice& o) const { return events == o.events; }
};

/// A long-knot (or tangle) diagram as a bottom-to-top sequence of slices.
/// `bottom` is the orientation signature of the bottom boundary (true = up).
struct MorseWord {
  std::vector<bool> bottom;
  std::vector<Slice> slices;

  bool operator==(const MorseWord& o) const {
    return bottom == o.bottom && slices == o.slices;
  }
};

/// The trivial long-knot word: a single upward strand, no slices.
MorseWord trivial_word();

/// Validates arity/orientation bookkeeping; throws ValidationError. Returns
/// the boundary signatures between slices (size slices+1, [0] = bottom).
std::vector<std::vector<bool>> boundaries(const MorseWord& w);

void validate(const MorseWord& w);

/// True if bottom = top = single up strand and the underlying 1-manifold is a
/// single arc from bottom to top (no closed components).
bool is_long_knot(const MorseWord& w);
void require_long_knot(const MorseWord& w);

/// Drops slices consisting only of pass-through strands.
MorseWord canonical(const MorseWord& w);
bool words_equal(const MorseWord& a, const MorseWord& b);

int writhe(const MorseWord& w);
bool is_normal(const MorseWord& w);

/// Replaces every left-to-right extremum by its crossing-bearing fragment.
MorseWord normalize(const MorseWord& w);

/// xi(n): the n-th power of the 2-crossing curl word; xi(0) is trivial.
MorseWord xi(int n);

/// Stacks d2 below d (d ∘ d2: d2 evaluated first).
MorseWord compose(const MorseWord& d, const MorseWord& d2);

/// normalize(d) composed with xi(-writhe/2); total writhe 0.
MorseWord corrected(const MorseWord& d);

/// Long closure of a braid word: strand 1 stays open, strands 2..n are closed
/// by right-nested cups below and caps above.  Generators are signed indices
/// (i or -i for sigma_i^{+-1}), 1 <= i < strands.
MorseWord from_braid(const std::vector<int>& word, int strands);

// -- text format -------------------------------------------------------------
//
// One slice per line, events separated by whitespace.  Tokens:
//   u d capRL capLR cupRL cupLR
//   x<sign><over><under>   e.g. x+uu, x-ud  (sign, over-strand orientation,
//                                            under-strand orientation)
// Blank lines and #-comments are ignored.  The bottom signature is implied by
// the first slice's inputs; a word with zero slices is written as the special
// line "|" (single up strand).

MorseWord parse_morse(const std::string& text);
std::string serialize(const MorseWord& w);
std::string event_token(const MorseEvent& e);
MorseEvent event_from_token(const std::string& tok);  // throws ParseError(0,0)

std::string to_json(const MorseWord& w);
MorseWord from_json(const std::string& json_text);

// -- knot traversal ----------------------------------------------------------

/// One passage of the knot path through a crossing event.
struct CrossingPassage {
  int slice = 0;
  int event_index = 0;
  bool under = false;  // this passage runs on the under strand
  int sign = 0;
};

/// Walks the knot from the bottom open end to the top one and reports every
/// crossing passage in path order.  Requires a valid long-knot word.
std::vector<CrossingPassage> trace_crossings(const MorseWord& w);

}  // namespace lki::morse
