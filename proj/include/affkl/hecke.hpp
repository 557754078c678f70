#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affkl/laurent.hpp"
#include "affkl/weyl.hpp"

namespace affkl {

// Finite Z[v^{+-1}]-linear combination of basis vectors labelled by W_ext.
// Tag separates the Hecke algebra from its modules at the type level.
template <class Tag>
class LinComb {
 public:
  using Map = std::unordered_map<ExtElem, LaurentPoly, ExtElemHash>;

  LinComb() = default;
  static LinComb basis(const ExtElem& x, LaurentPoly c = 1) {
    LinComb r;
    r.add(x, c);
    return r;
  }

  void add(const ExtElem& x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = c_.find(x);
    if (it == c_.end()) {
      c_.emplace(x, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
  void add_product(const ExtElem& x, const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(x);
    it->second.add_product(f, g);
    if (it->second.is_zero()) c_.erase(it);
  }
  void add_scaled(const LinComb& o, const LaurentPoly& c) {
    for (const auto& [x, f] : o.c_) add_product(x, f, c);
  }

  LaurentPoly coeff(const ExtElem& x) const {
    auto it = c_.find(x);
    return it == c_.end() ? LaurentPoly() : it->second;
  }
  bool contains(const ExtElem& x) const { return c_.count(x) != 0; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const Map& terms() const { return c_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [x, f] : o.c_) add(x, f);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [x, f] : o.c_) add(x, -f);
    return *this;
  }
  LinComb& operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& [x, f] : c_) f *= c;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const LaurentPoly& c) { return a *= c; }
  friend LinComb operator*(const LaurentPoly& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  // Terms in the canonical output order of W_ext.
  std::vector<std::pair<ExtElem, LaurentPoly>> sorted(const ExtendedWeyl& W) const {
    std::vector<ExtElem> keys;
    keys.reserve(c_.size());
    for (const auto& kv : c_) keys.push_back(kv.first);
    W.sort_canonical(keys);
    std::vector<std::pair<ExtElem, LaurentPoly>> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.emplace_back(k, c_.at(k));
    return out;
  }
  // Key of maximal length, ties broken canonically; requires non-empty.
  ExtElem top(const ExtendedWeyl& W) const {
    const ExtElem* best = nullptr;
    int bl = -1;
    for (const auto& kv : c_) {
      const int l = W.length(kv.first);
      if (!best || l > bl || (l == bl && W.canonical_less(*best, kv.first))) {
        best = &kv.first;
        bl = l;
      }
    }
    return *best;
  }

 private:
  Map c_;
};

struct HTag {};
struct NTag {};
struct MTag {};
struct PTag {};
using HeckeElem = LinComb<HTag>;     // basis H_x
using AsphElem = LinComb<NTag>;      // basis N_x, x in fW_ext
using SphElem = LinComb<MTag>;       // basis M_x, x in fW_ext
using PeriodicElem = LinComb<PTag>;  // basis of alcoves x(A_fund), x in W

// Coefficient-wise evaluation at v = 1.
template <class Tag>
std::vector<std::pair<ExtElem, Integer>> specialize_v1(const LinComb<Tag>& a, const ExtendedWeyl& W) {
  std::vector<std::pair<ExtElem, Integer>> out;
  for (const auto& [x, f] : a.sorted(W)) {
    Integer c = f.at_one();
    if (c != 0) out.emplace_back(x, c);
  }
  return out;
}

// "poly * [elem] + ..." in canonical order, "0" when empty
template <class Tag>
std::string to_text(const LinComb<Tag>& a, const ExtendedWeyl& W) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [x, f] : a.sorted(W)) {
    if (!s.empty()) s += " + ";
    s += "(" + f.to_string() + ")[" + W.to_text(x) + "]";
  }
  return s;
}

// Cache directory from AFFKL_CACHE_DIR, empty when unset.
std::filesystem::path default_cache_dir();

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const ExtendedWeyl> w);

  const ExtendedWeyl& weyl() const { return *w_; }
  std::shared_ptr<const ExtendedWeyl> weyl_ptr() const { return w_; }

  HeckeElem standard(const ExtElem& x) const { return HeckeElem::basis(x); }
  HeckeElem mul_right_gen(const HeckeElem& a, int g) const;     // a * H_s
  HeckeElem mul_left_gen(int g, const HeckeElem& a) const;      // H_s * a
  HeckeElem mul_right_kl_gen(const HeckeElem& a, int g) const;  // a * (H_s + v)
  HeckeElem mul_right_std(const HeckeElem& a, const ExtElem& x) const;
  HeckeElem mul_left_std(const ExtElem& x, const HeckeElem& a) const;
  HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const;
  HeckeElem bar(const HeckeElem& a) const;
  // bar(H_x) = (H_{x^{-1}})^{-1}
  HeckeElem bar_standard(const ExtElem& x) const;

  // Kazhdan-Lusztig element; W-parts are memoized, H_{w omega} = H_w H_omega.
  std::shared_ptr<const HeckeElem> kl_basis(const ExtElem& x) const;
  LaurentPoly kl_poly(const ExtElem& y, const ExtElem& w) const { return kl_basis(w)->coeff(y); }
  // H_w * H_s == (v + v^{-1}) H_w; requires ws < w.
  bool check_absorption(const ExtElem& w, int g) const;

  // Persistent cache of W-part KL elements (see kl_cache.cpp for the layout).
  std::size_t cache_size() const;
  // Returns the number of records accepted; corrupt records are skipped.
  std::size_t load_cache(const std::filesystem::path& dir);
  void save_cache(const std::filesystem::path& dir) const;
  std::filesystem::path cache_file(const std::filesystem::path& dir) const;

 private:
  std::shared_ptr<const ExtendedWeyl> w_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<ExtElem, std::shared_ptr<const HeckeElem>, ExtElemHash> cache_;

  std::shared_ptr<const HeckeElem> lookup(const ExtElem& x) const;
  std::shared_ptr<const HeckeElem> insert(const ExtElem& x, HeckeElem h) const;
  std::shared_ptr<const HeckeElem> compute_W(const ExtElem& x) const;
};

}  // namespace affkl
