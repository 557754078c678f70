#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "affkl/rootdata.hpp"

namespace affkl {

// The finite Weyl group, enumerated once. Elements are indices 0..size()-1 in
// BFS order (length, then lexicographically minimal reduced word); 0 is the identity.
class FiniteWeyl {
 public:
  explicit FiniteWeyl(const RootDatum& d);

  std::size_t size() const { return length_.size(); }
  int rank() const { return rank_; }
  int length(std::uint32_t u) const { return length_[u]; }
  std::uint32_t identity() const { return 0; }
  std::uint32_t longest() const { return longest_; }
  std::uint32_t simple(int i) const { return right_[0 * rank_ + i]; }
  std::uint32_t inverse(std::uint32_t u) const { return inverse_[u]; }
  std::uint32_t left_simple(int i, std::uint32_t u) const { return left_[u * rank_ + i]; }
  std::uint32_t right_simple(std::uint32_t u, int i) const { return right_[u * rank_ + i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  // reflection s_beta for the positive root with index k
  std::uint32_t reflection(int k) const { return reflection_[k]; }
  // Longest element of the parabolic subgroup generated by the simple reflections in mask.
  std::uint32_t longest_of(std::uint32_t mask) const;

  const std::vector<int>& word(std::uint32_t u) const { return words_[u]; }
  // u(alpha_k) = sign * alpha_|.|: encoded as +/-(index+1)
  int root_image(std::uint32_t u, int k) const { return root_image_[u * npos_ + k]; }
  bool sends_negative(std::uint32_t u, int k) const { return root_image(u, k) < 0; }

  Weight act(std::uint32_t u, const Weight& lambda) const;
  // u acting on a covector in dual coordinates (contragredient), so that
  // <u(lambda), act_dual(u, c)> = <lambda, c>.
  Weight act_dual(std::uint32_t u, const Weight& c) const;
  const std::vector<std::int64_t>& matrix(std::uint32_t u) const { return matrices_[u]; }
  std::uint32_t find(const std::vector<std::int64_t>& matrix) const;

 private:
  int rank_ = 0;
  int lat_ = 0;
  int npos_ = 0;
  std::vector<int> length_;
  std::vector<std::vector<std::int64_t>> matrices_;  // row-major lat x lat
  std::vector<std::uint32_t> left_, right_, inverse_, reflection_;
  std::vector<int> root_image_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint32_t> table_;  // full multiplication table when small
  std::uint32_t longest_ = 0;
  struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const;
  };
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, VecHash> index_;
};

// Element w * t_lambda of W_ext = W_f x| X acting on V by v -> w(v + lambda).
struct ExtElem {
  std::uint32_t fin = 0;
  Weight trans;

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.fin == b.fin && a.trans == b.trans; }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }
  friend bool operator<(const ExtElem& a, const ExtElem& b) {
    if (a.fin != b.fin) return a.fin < b.fin;
    return a.trans < b.trans;
  }
  std::size_t hash() const { return trans.hash() * 31 + fin * 0x9e3779b97f4a7c15ull; }
};

struct ExtElemHash {
  std::size_t operator()(const ExtElem& x) const { return x.hash(); }
};

enum class Order { Less, Greater, Equal, Incomparable };
const char* to_string(Order o);

class ExtendedWeyl {
 public:
  explicit ExtendedWeyl(std::shared_ptr<const RootDatum> d);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  const FiniteWeyl& finite() const { return fin_; }

  // Generators S: affine ones first (one per component), then s_1..s_n.
  int num_generators() const { return num_affine_ + datum_->rank(); }
  int num_affine() const { return num_affine_; }
  bool is_finite_generator(int g) const { return g >= num_affine_; }
  int finite_generator(int i) const { return num_affine_ + i; }
  int simple_of(int g) const { return g - num_affine_; }  // only for finite generators
  ExtElem generator(int g) const { return gens_[g]; }
  const std::string& generator_name(int g) const { return gen_names_[g]; }
  int generator_index(const std::string& name) const;  // -1 if unknown
  std::uint32_t finite_mask() const;                   // bitmask of S_f inside S

  ExtElem identity() const;
  ExtElem translation(const Weight& lambda) const;
  ExtElem finite_elem(std::uint32_t u) const;

  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem inverse(const ExtElem& a) const;
  int length(const ExtElem& a) const;
  ExtElem right_gen(const ExtElem& a, int g) const;
  ExtElem left_gen(int g, const ExtElem& a) const;
  bool is_right_descent(const ExtElem& a, int g) const { return length(right_gen(a, g)) < length(a); }
  bool is_left_descent(int g, const ExtElem& a) const { return length(left_gen(g, a)) < length(a); }
  int first_right_descent(const ExtElem& a) const;  // -1 if none
  ExtElem from_word(const std::vector<int>& word) const;

  // action on V restricted to lattice points, x(lambda) = w(lambda + mu)
  Weight act(const ExtElem& x, const Weight& lambda) const;
  // exact action on points with denominator den (numerator vectors)
  Weight act_scaled(const ExtElem& x, const Weight& num, std::int64_t den) const;
  // (w t_mu) ._p lambda = w(lambda + p mu + varsigma) - varsigma
  Weight dot_p(const ExtElem& x, const Weight& lambda, std::int64_t p) const;

  bool in_W(const ExtElem& x) const { return datum_->in_root_lattice(x.trans); }
  bool is_omega(const ExtElem& x) const { return length(x) == 0; }
  // x = omega * w with l(omega) = 0 and w in W
  std::pair<ExtElem, ExtElem> omega_decompose(const ExtElem& x) const;
  // x = w * omega with l(omega) = 0 and w in W
  std::pair<ExtElem, ExtElem> omega_decompose_right(const ExtElem& x) const;
  // (omega_lambda, x_lambda) with t_lambda = x_lambda * omega_lambda
  std::pair<ExtElem, ExtElem> omega_of_weight(const Weight& lambda) const;
  ExtElem tau(const Weight& lambda, const ExtElem& w) const;
  // Lexicographically minimal reduced word of the W-part of x = (word) * omega.
  std::vector<int> reduced_word(const ExtElem& x) const;

  // Within a common Omega-coset; different cosets are incomparable.
  Order bruhat(const ExtElem& x, const ExtElem& y) const;
  bool bruhat_leq(const ExtElem& x, const ExtElem& y) const;

  // minimal in W_J x for J given as bitmask over S
  bool is_min_in_coset(const ExtElem& x, std::uint32_t mask) const;
  bool is_fWext(const ExtElem& x) const;  // minimal in W_f x; geometric test
  bool is_fW(const ExtElem& x) const { return in_W(x) && is_fWext(x); }
  // x = u * y with u in W_f, y in fW_ext; returns (u, y)
  std::pair<std::uint32_t, ExtElem> finite_coset_decompose(const ExtElem& x) const;
  ExtElem longest_finite() const { return finite_elem(fin_.longest()); }
  bool is_restricted(const ExtElem& x) const;

  // Omega for semisimple data: finite list in BFS order from omega_{varpi_i}.
  bool omega_finite() const { return !omegas_.empty(); }
  const std::vector<ExtElem>& omegas() const { return omegas_; }
  int omega_index(const ExtElem& omega) const;  // -1 if not found

  // All W-elements with length <= max_len, BFS order (length, canonical word).
  std::vector<ExtElem> enumerate_W(int max_len) const;
  // All fW_ext elements w * omega (omega in Omega) with l <= max_len; requires finite Omega.
  std::vector<ExtElem> enumerate_fWext(int max_len) const;
  std::vector<ExtElem> enumerate_Wext(int max_len) const;

  // Canonical total order used for all output: (length, omega index, reduced word).
  bool canonical_less(const ExtElem& a, const ExtElem& b) const;
  void sort_canonical(std::vector<ExtElem>& v) const;

  std::string to_text(const ExtElem& x) const;
  ExtElem parse(const std::string& text) const;
  std::string word_text(const std::vector<int>& word) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  FiniteWeyl fin_;
  int num_affine_ = 0;
  std::vector<ExtElem> gens_;
  std::vector<std::string> gen_names_;
  std::vector<ExtElem> omegas_;
};

}  // namespace affkl
