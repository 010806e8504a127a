#pragma once

#include <string>
#include <vector>

#include "lki/errors.hpp"

namespace lki::setcat {

/// Finite group given by a multiplication table over elements 0..n-1.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<std::string> labels,
              std::vector<std::vector<int>> table);

  int size() const { return (int)labels_.size(); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  int pow(int a, int e) const;

  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[a]; }
  /// Index of the element with this label; throws Error if absent.
  int element(const std::string& label) const;

  static FiniteGroup symmetric(int n);  // labels in cycle notation, e.g. "(1 2)"
  static FiniteGroup cyclic(int n);     // labels "0".."n-1"
  static FiniteGroup dihedral(int n);   // rotations "r0..", reflections "s0.."

  /// Parses {"name":..., "elements":[...], "table":[[...]]} with an optional
  /// group-by-name convenience via make().
  static FiniteGroup from_json(const std::string& text);

  /// "S3", "S4", "Z5", "D4", ... or a path to a JSON multiplication table.
  static FiniteGroup make(const std::string& spec);

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int id_ = -1;
};

}  // namespace lki::setcat
