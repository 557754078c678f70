#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affkl {

using Integer = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in v with integer coefficients.
// Terms are kept sorted by exponent and never hold a zero coefficient.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(Integer c);

  static LaurentPoly monomial(int exp, Integer c = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly vinv() { return monomial(-1); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Integer coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiplied by v^k
  Integer at_one() const;

  bool nonnegative() const;  // every coefficient >= 0
  bool in_vZv() const;       // every exponent >= 1
  bool is_bar_invariant() const { return *this == bar(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  // this += f * g without materialising f * g when one side is a monomial
  void add_product(const LaurentPoly& f, const LaurentPoly& g);

  // Exact quotient by d, or nullopt if d does not divide this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  std::string to_string() const;
  std::vector<std::pair<int, std::string>> to_pairs() const;

  std::size_t hash() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
  void normalize();
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// v^{-1} - v, the recurring coefficient of the quadratic relation
const LaurentPoly& vinv_minus_v();
// v + v^{-1}
const LaurentPoly& v_plus_vinv();

// v^{-n} * sum_{x} v^{2 l(x)} from a length generating function (counts[k] = #{x : l(x)=k}).
LaurentPoly poincare_symmetric(const std::vector<std::int64_t>& counts);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace affkl
