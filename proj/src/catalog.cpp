#include "lki/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lki::catalog {

morse::MorseWord CatalogEntry::word() const { return morse::from_braid(braid, strands); }

morse::MorseWord CatalogEntry::narrow_word() const {
  if (!morse_text.empty()) return morse::parse_morse(morse_text);
  return word();
}

knotgroup::LaurentPoly CatalogEntry::expected_alexander() const {
  return knotgroup::LaurentPoly::from_coeffs(alexander);
}

const CatalogEntry& Catalog::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error("unknown knot '" + name + "'");
}

bool Catalog::has(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return true;
  return false;
}

Catalog from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Catalog c;
  for (const auto& k : j.at("knots")) {
    CatalogEntry e;
    e.name = k.at("name").get<std::string>();
    for (const auto& g : k.at("braid")) e.braid.push_back(g.get<int>());
    e.strands = k.at("strands").get<int>();
    for (const auto& a : k.at("alexander")) e.alexander.push_back(a.get<long long>());
    if (k.contains("morse")) e.morse_text = k.at("morse").get<std::string>();
    c.entries.push_back(std::move(e));
  }
  std::sort(c.entries.begin(), c.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return c;
}

Catalog load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed catalog file '" + path + "': " + e.what());
  }
}

void validate_entry(const CatalogEntry& e) {
  auto w = knotgroup::wirtinger_from_diagram(morse::corrected(e.word()));
  auto got = knotgroup::alexander_raw(w).up_to_units();
  if (!(got == e.expected_alexander().up_to_units()))
    throw Error("catalog entry '" + e.name + "': Alexander polynomial mismatch (got " +
                got.to_string() + ")");
  if (!e.morse_text.empty()) {
    auto nw = knotgroup::wirtinger_from_diagram(morse::corrected(e.narrow_word()));
    auto got2 = knotgroup::alexander_raw(nw).up_to_units();
    if (!(got2 == e.expected_alexander().up_to_units()))
      throw Error("catalog entry '" + e.name + "': narrow word Alexander mismatch");
  }
}

void validate(const Catalog& c) {
  for (const auto& e : c.entries) validate_entry(e);
}

const char* builtin_json();  // generated from data/knots.json

const Catalog& builtin() {
  static Catalog c = from_json(builtin_json());
  return c;
}

}  // namespace lki::catalog
