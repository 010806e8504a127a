#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lki/knotgroup.hpp"
#include "lki/morse.hpp"

namespace lki::catalog {

struct CatalogEntry {
  std::string name;
  std::vector<int> braid;
  int strands = 0;
  std::vector<long long> alexander;  // expected coefficients, lowest degree first
  // optional narrow Morse word (used by the module backend where tensor
  // widths are costly); same knot as the braid closure
  std::string morse_text;

  morse::MorseWord word() const;        // braid closure
  morse::MorseWord narrow_word() const;  // morse_text if present, else word()
  knotgroup::LaurentPoly expected_alexander() const;
  int crossings() const { return (int)braid.size(); }
};

struct Catalog {
  std::vector<CatalogEntry> entries;  // sorted by name
  const CatalogEntry& find(const std::string& name) const;
  bool has(const std::string& name) const;
};

/// The built-in table-backed catalog.
const Catalog& builtin();

/// Loads {"version":1,"knots":[{name,braid,strands,alexander[,morse]}]}.
Catalog from_json(const std::string& text);

/// Reads a catalog file; throws Error with the path on failure.
Catalog load_file(const std::string& path);

/// Computes the Alexander polynomial of the entry's diagram and compares with
/// the expected coefficients up to units; throws Error on mismatch.
void validate_entry(const CatalogEntry& e);
void validate(const Catalog& c);

}  // namespace lki::catalog
