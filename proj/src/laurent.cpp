#include "affkl/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace affkl {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exp, Integer c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Integer LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

bool LaurentPoly::in_vZv() const { return terms_.empty() || terms_.front().first >= 1; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return;
  if (g.terms_.size() == 1) {
    LaurentPoly t = f.shifted(g.terms_[0].first);
    if (g.terms_[0].second != 1)
      for (auto& x : t.terms_) x.second *= g.terms_[0].second;
    *this += t;
    return;
  }
  *this += f * g;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) raw.emplace_back(x.first + y.first, x.second * y.second);
  return LaurentPoly::from_terms(std::move(raw));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Work with ordinary polynomials A, D with nonzero constant terms.
  const int shift = min_exp() - d.min_exp();
  const int da = max_exp() - min_exp();
  const int dd = d.max_exp() - d.min_exp();
  if (da < dd) return std::nullopt;
  std::vector<Integer> rem(da + 1, 0), den(dd + 1, 0), quo(da - dd + 1, 0);
  for (const auto& t : terms_) rem[t.first - min_exp()] = t.second;
  for (const auto& t : d.terms_) den[t.first - d.min_exp()] = t.second;
  const Integer& lead = den[dd];
  for (int k = da - dd; k >= 0; --k) {
    const Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Integer q = top / lead;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
    quo[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<Term> out;
  for (int k = 0; k <= da - dd; ++k)
    if (quo[k] != 0) out.emplace_back(k + shift, std::move(quo[k]));
  LaurentPoly q;
  q.terms_ = std::move(out);
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<std::pair<int, std::string>> LaurentPoly::to_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [e, c] : terms_) {
    h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    h = (h ^ static_cast<std::size_t>(static_cast<long long>(c % 1000000007))) * 1099511628211ull;
  }
  return h;
}

const LaurentPoly& vinv_minus_v() {
  static const LaurentPoly p = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  return p;
}

const LaurentPoly& v_plus_vinv() {
  static const LaurentPoly p = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1);
  return p;
}

LaurentPoly poincare_symmetric(const std::vector<std::int64_t>& counts) {
  const int n = static_cast<int>(counts.size()) - 1;
  std::vector<LaurentPoly::Term> t;
  for (int k = 0; k <= n; ++k)
    if (counts[k] != 0) t.emplace_back(2 * k - n, Integer(counts[k]));
  return LaurentPoly::from_terms(std::move(t));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace affkl
