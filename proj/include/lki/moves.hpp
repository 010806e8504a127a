#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lki/morse.hpp"

namespace lki::morse {

enum class MoveKind : uint8_t {
  R0Plus,      // slide a strand across a cap
  R0Minus,     // slide a strand across a cup
  RIIBasic,    // insert (or, inverse, cancel) an adjacent inverse crossing pair
  RIII,        // braid-like triangle move, pattern A <-> pattern B
  RIPositive,  // insert (or delete) a +1 kink
  RINegative,  // insert (or delete) a -1 kink
};

/// Location of a move.  For insertions `slice` is the boundary index the new
/// slices go to; for rewrites/deletions it is the first pattern slice.  `pos`
/// is the leftmost strand position of the pattern window.  `variant` selects
/// among oriented variants (RIIBasic: sign of the lower crossing).  `inverse`
/// applies the rewrite right-to-left (deletion for insertions).
struct ReidemeisterMove {
  MoveKind kind;
  int slice = 0;
  int pos = 0;
  int variant = 0;
  bool inverse = false;

  bool operator==(const ReidemeisterMove& o) const {
    return kind == o.kind && slice == o.slice && pos == o.pos && variant == o.variant &&
           inverse == o.inverse;
  }
};

/// The unique crossing event with given bottom orientations and sign.
MorseEvent crossing_with_bottom(bool left_up, bool right_up, int sign);

/// Applies the move; throws PatternMismatchError if the pattern is absent.
MorseWord apply_move(const MorseWord& w, const ReidemeisterMove& m);

ReidemeisterMove move_inverse(const ReidemeisterMove& m);

/// All moves applicable to w (insertions limited by max_width).
std::vector<ReidemeisterMove> enumerate_moves(const MorseWord& w, int max_width = 16);

/// Applies `length` seeded random applicable moves; deterministic given seed.
MorseWord random_move_sequence(const MorseWord& w, uint64_t seed, int length,
                               int max_width = 16);
MorseWord random_move_sequence(const MorseWord& w, uint64_t seed, int length,
                               std::vector<ReidemeisterMove>* log, int max_width = 16);

/// Classifies a matched RIII pattern by (#arcs per strand, orientation signs),
/// the Sym(3) x {+-1}^3 index of the move.
struct RIIIClass {
  std::array<int, 3> arcs;   // a permutation of {1,2,3}
  std::array<int, 3> signs;  // +1 = strand oriented upward
};
RIIIClass riii_class(const MorseWord& w, const ReidemeisterMove& m);

}  // namespace lki::morse
