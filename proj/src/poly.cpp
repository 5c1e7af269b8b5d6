#include "effdim/poly.hpp"

#include <algorithm>
#include <sstream>

namespace effdim {

__extension__ using u128 = unsigned __int128;

Monomial Monomial::variable(VarIndex v, std::uint32_t exponent) { return from_factors({{v, exponent}}); }

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.push_back({v, e});
    m.degree_ += e;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.push_back({i->first, i->second + j->second});
      ++i, ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto fa = a.factors(), fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

std::string default_variable_name(VarIndex v) { return "x" + std::to_string(v); }

MultiPoly::MultiPoly(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

MultiPoly MultiPoly::variable(VarIndex v) { return term(1, Monomial::variable(v)); }

MultiPoly MultiPoly::term(Integer coeff, Monomial m) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
  return p;
}

std::optional<Integer> MultiPoly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<VarIndex> MultiPoly::max_variable() const {
  std::optional<VarIndex> best;
  for (const auto& [m, c] : terms_)
    if (!m.is_one()) best = std::max(best.value_or(0), m.factors().back().first);
  return best;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Homogeneity MultiPoly::homogeneity() const {
  if (terms_.empty()) return {Homogeneity::Kind::zero, 0};
  const auto deg = terms_.begin()->first.degree();
  // Graded order: first and last terms bound the degree range.
  if (terms_.rbegin()->first.degree() != deg) return {Homogeneity::Kind::mixed, 0};
  return {Homogeneity::Kind::homogeneous, deg};
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t MultiPoly::evaluate_mod(std::span<const std::uint64_t> values, std::uint64_t modulus) const {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    Integer r = c % modulus;
    if (r < 0) r += modulus;
    std::uint64_t t = static_cast<std::uint64_t>(r);
    for (auto [v, e] : m.factors()) {
      if (v >= values.size()) throw std::out_of_range("no evaluation value for variable " + std::to_string(v));
      t = mulmod(t, powmod(values[v], e, modulus), modulus);
    }
    acc = (acc + t) % modulus;
  }
  return acc;
}

std::string MultiPoly::to_string(const VariableNamer& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      out << mag;
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      out << mag;
      need_star = true;
    }
    for (auto [v, e] : m.factors()) {
      if (need_star) out << '*';
      out << name(v);
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
Homogeneity is_homogeneous(const MultiPoly& p) { return p.homogeneity(); }

PolyMatrix mat_mul(const PolyMatrix& m, const PolyMatrix& k) { return m * k; }

}  // namespace effdim
