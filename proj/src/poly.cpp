#include "lki/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lki::heis {

PolyRing PolyRing::grevlex(std::vector<std::string> names) {
  PolyRing r;
  r.vars = std::move(names);
  std::vector<int> all(r.vars.size());
  std::iota(all.begin(), all.end(), 0);
  r.blocks = {all};
  return r;
}

PolyRing PolyRing::block(std::vector<std::string> names, std::vector<std::vector<int>> split) {
  PolyRing r;
  r.vars = std::move(names);
  r.blocks = std::move(split);
  return r;
}

int mono_cmp(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  for (const auto& blk : ring.blocks) {
    long da = 0, db = 0;
    for (int v : blk) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse lex: scanning from the last variable of the block, the
    // monomial with the smaller exponent at the first difference is larger
    for (size_t k = blk.size(); k-- > 0;) {
      int v = blk[k];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
  }
  return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = (uint16_t)(r[i] + b[i]);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) {
    if (b[i] > r[i]) throw Error("mono_div: not divisible");
    r[i] = (uint16_t)(r[i] - b[i]);
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

MultiPoly::MultiPoly(const PolyRing* ring, std::vector<Term> terms)
    : ring_(ring), terms_(std::move(terms)) {
  normalize();
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
    return mono_cmp(*ring_, x.m, y.m) > 0;
  });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(const PolyRing* ring, const Rational& c) {
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars(), 0), c});
  return p;
}

MultiPoly MultiPoly::var(const PolyRing* ring, int v, int exp) {
  MultiPoly p(ring);
  Monomial m(ring->nvars(), 0);
  m[v] = (uint16_t)exp;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

const Term& MultiPoly::lead() const {
  if (terms_.empty()) throw Error("lead of zero polynomial");
  return terms_.front();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(*ring_, terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  auto cmp = [this](const Monomial& a, const Monomial& b) {
    return mono_cmp(*ring_, a, b) > 0;
  };
  std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
  for (const auto& t1 : terms_)
    for (const auto& t2 : o.terms_) {
      Monomial m = mono_mul(t1.m, t2.m);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), t1.c * t2.c);
      else
        it->second += t1.c * t2.c;
    }
  MultiPoly r(ring_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
  return true;
}

MultiPoly MultiPoly::times_term(const Term& t) const {
  MultiPoly r(ring_);
  if (t.c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& x : terms_) r.terms_.push_back({mono_mul(x.m, t.m), x.c * t.c});
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& x : terms_) r.terms_.push_back({x.m, x.c * c});
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().c.inverse());
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = BigInt::gcd(num_gcd, t.c.num());
    den_lcm = den_lcm * (t.c.den() / BigInt::gcd(den_lcm, t.c.den()));
  }
  Rational scale(den_lcm, num_gcd);
  if (lead().c.sign() < 0) scale = -scale;
  return scaled(scale);
}

MultiPoly MultiPoly::map_into(const PolyRing* target, const std::vector<MultiPoly>& images) const {
  MultiPoly out(target);
  for (const auto& t : terms_) {
    MultiPoly acc = MultiPoly::constant(target, t.c);
    for (int v = 0; v < ring_->nvars(); ++v)
      for (int k = 0; k < t.m[v]; ++k) acc *= images[v];
    out += acc;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational a = t.c;
    if (out.empty()) {
      if (a.sign() < 0) out += "-", a = -a;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string mono;
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[v];
      if (t.m[v] > 1) mono += "^" + std::to_string((int)t.m[v]);
    }
    std::string coeff = a.to_string();
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace lki::heis
