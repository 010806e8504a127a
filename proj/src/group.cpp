#include "lki/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lki::setcat {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  int n = (int)labels_.size();
  if ((int)table_.size() != n)
    throw Error("group '" + name_ + "': table size mismatch");
  for (const auto& row : table_) {
    if ((int)row.size() != n) throw Error("group '" + name_ + "': table row size mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("group '" + name_ + "': table entry out of range");
  }
  // locate the identity
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw Error("group '" + name_ + "': no identity element");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == id_ && table_[b][a] == id_) inv_[a] = b;
    if (inv_[a] < 0) throw Error("group '" + name_ + "': element without inverse");
  }
  // associativity spot check is O(n^3); our groups are small enough to verify
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error("group '" + name_ + "': multiplication is not associative");
}

int FiniteGroup::pow(int a, int e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = id_;
  while (e--) r = mul(r, a);
  return r;
}

int FiniteGroup::element(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw Error("group '" + name_ + "': no element labelled '" + label + "'");
}

static std::string cycle_label(const std::vector<int>& perm) {
  int n = (int)perm.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = true;
    for (int j = perm[i]; j != i; j = perm[j]) {
      seen[j] = true;
      cyc += " " + std::to_string(j + 1);
    }
    out += cyc + ")";
  }
  return out.empty() ? "e" : out;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw Error("symmetric(n) supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = (int)perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return (int)(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];  // a after b
      table[a][b] = index_of(q);
    }
  std::vector<std::string> labels;
  for (const auto& perm : perms) labels.push_back(cycle_label(perm));
  return FiniteGroup("S" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic(n): n must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw Error("dihedral(n): n must be positive");
  // elements r^k (0) and s r^k (1), with s r^k s = r^-k
  auto idx = [&](int flip, int k) { return flip * n + ((k % n) + n) % n; };
  int m = 2 * n;
  std::vector<std::string> labels(m);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int f = 0; f < 2; ++f)
    for (int k = 0; k < n; ++k) labels[idx(f, k)] = (f ? "s" : "r") + std::to_string(k);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int k2 = 0; k2 < n; ++k2) {
          // (s^f1 r^k1)(s^f2 r^k2) = s^(f1+f2) r^(k2 + (f2 ? -k1 : k1))
          int f = (f1 + f2) % 2;
          int k = k2 + (f2 ? -k1 : k1);
          table[idx(f1, k1)][idx(f2, k2)] = idx(f, k);
        }
  return FiniteGroup("D" + std::to_string(n), std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    table.push_back(std::move(r));
  }
  std::string name = j.value("name", "custom");
  return FiniteGroup(name, std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::make(const std::string& spec) {
  auto num = [&](size_t off) { return std::stoi(spec.substr(off)); };
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 's') && isdigit(spec[1]))
    return symmetric(num(1));
  if (spec.size() >= 2 && (spec[0] == 'Z' || spec[0] == 'z') && isdigit(spec[1]))
    return cyclic(num(1));
  if (spec.size() >= 2 && (spec[0] == 'D' || spec[0] == 'd') && isdigit(spec[1]))
    return dihedral(num(1));
  std::ifstream in(spec);
  if (!in) throw Error("cannot open group spec '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace lki::setcat
