#pragma once

#include <memory>

#include "affkl/weyl.hpp"

namespace affkl {

// The alcove x(A_fund) for x in W. The barycenter is x(rho/h), stored as a
// numerator vector over the common denominator 2h.
struct Alcove {
  ExtElem elem;
  Weight bary;

  friend bool operator==(const Alcove& a, const Alcove& b) { return a.elem == b.elem; }
  friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
  friend bool operator<(const Alcove& a, const Alcove& b) { return a.elem < b.elem; }
};

struct AlcoveHash {
  std::size_t operator()(const Alcove& a) const { return a.elem.hash(); }
};

class AlcoveModel {
 public:
  explicit AlcoveModel(std::shared_ptr<const ExtendedWeyl> w);

  const ExtendedWeyl& weyl() const { return *w_; }
  std::shared_ptr<const ExtendedWeyl> weyl_ptr() const { return w_; }
  std::int64_t denominator() const { return den_; }

  Alcove fundamental() const;
  Alcove from_weyl(const ExtElem& x) const;  // x must lie in W
  // Alcove x(A_fund) for any x in W_ext.
  Alcove of_elem(const ExtElem& x) const;
  // W-part of x * omega^{-1}: the element of W sending A_fund to x(A_fund)
  ExtElem normalize(const ExtElem& x) const;
  const ExtElem& to_weyl(const Alcove& a) const { return a.elem; }

  Alcove act_left(const ExtElem& y, const Alcove& a) const { return of_elem(w_->mul(y, a.elem)); }
  Alcove act_right(const Alcove& a, const ExtElem& y) const { return of_elem(w_->mul(a.elem, y)); }
  Alcove translate(const Alcove& a, const Weight& mu) const { return of_elem(w_->mul(w_->translation(mu), a.elem)); }

  std::int64_t pair_bary(const Alcove& a, int i) const;  // numerator of <b, alpha_i^vee>
  bool is_dominant(const Alcove& a) const;
  Weight box_rep_below(const Alcove& a) const;
  Weight box_rep_above(const Alcove& a) const;
  Alcove hat(const Alcove& a) const;
  Alcove check(const Alcove& a) const;

  // smallest m >= 0 with A + m varsigma dominant
  std::int64_t dominance_shift(const Alcove& a) const;
  Order generic_order(const Alcove& a, const Alcove& b) const;
  bool generic_leq(const Alcove& a, const Alcove& b) const;
  // Whether A <= A s for A = x(A_fund), x in W, s = generator g.
  bool below_wall_neighbor(const ExtElem& x, int g) const;

  // All alcoves x(A_fund) with l(x) <= max_len, BFS order of W.
  std::vector<Alcove> window(int max_len) const;

 private:
  std::shared_ptr<const ExtendedWeyl> w_;
  std::int64_t den_ = 0;
};

}  // namespace affkl
