#include "affkl/alcoves.hpp"

#include "affkl/intlinalg.hpp"

namespace affkl {

AlcoveModel::AlcoveModel(std::shared_ptr<const ExtendedWeyl> w)
    : w_(std::move(w)), den_(2 * w_->datum().coxeter_number()) {}

Alcove AlcoveModel::fundamental() const { return from_weyl(w_->identity()); }

Alcove AlcoveModel::from_weyl(const ExtElem& x) const {
  if (!w_->in_W(x)) throw InputError("alcoves are labelled by elements of W, got " + w_->to_text(x));
  return Alcove{x, w_->act_scaled(x, w_->datum().two_rho(), den_)};
}

ExtElem AlcoveModel::normalize(const ExtElem& x) const {
  if (w_->in_W(x)) return x;
  return w_->omega_decompose_right(x).first;
}

Alcove AlcoveModel::of_elem(const ExtElem& x) const {
  ExtElem y = normalize(x);
  return Alcove{y, w_->act_scaled(y, w_->datum().two_rho(), den_)};
}

std::int64_t AlcoveModel::pair_bary(const Alcove& a, int i) const { return w_->datum().pair_simple(a.bary, i); }

bool AlcoveModel::is_dominant(const Alcove& a) const {
  for (int i = 0; i < w_->datum().rank(); ++i)
    if (pair_bary(a, i) <= 0) return false;
  return true;
}

Weight AlcoveModel::box_rep_below(const Alcove& a) const {
  std::vector<std::int64_t> c;
  for (int i = 0; i < w_->datum().rank(); ++i) c.push_back(ceil_div(pair_bary(a, i), den_));
  return w_->datum().weight_with_pairings(c);
}

Weight AlcoveModel::box_rep_above(const Alcove& a) const {
  std::vector<std::int64_t> c;
  for (int i = 0; i < w_->datum().rank(); ++i) c.push_back(floor_div(pair_bary(a, i), den_));
  return w_->datum().weight_with_pairings(c);
}

Alcove AlcoveModel::hat(const Alcove& a) const {
  const Weight mu = box_rep_below(a);
  const ExtElem g = w_->mul(w_->mul(w_->translation(mu), w_->longest_finite()), w_->translation(-mu));
  return act_left(g, a);
}

Alcove AlcoveModel::check(const Alcove& a) const {
  const Weight mu = box_rep_above(a);
  const ExtElem g = w_->mul(w_->mul(w_->translation(mu), w_->longest_finite()), w_->translation(-mu));
  return act_left(g, a);
}

std::int64_t AlcoveModel::dominance_shift(const Alcove& a) const {
  std::int64_t m = 0;
  for (int i = 0; i < w_->datum().rank(); ++i) m = std::max(m, floor_div(-pair_bary(a, i), den_) + 1);
  return m;
}

Order AlcoveModel::generic_order(const Alcove& a, const Alcove& b) const {
  if (a == b) return Order::Equal;
  const std::int64_t m = std::max(dominance_shift(a), dominance_shift(b));
  const Weight& vs = w_->datum().varsigma();
  auto compare_at = [&](std::int64_t k) {
    const ExtElem t = w_->translation(k * vs);
    return w_->bruhat(normalize(w_->mul(t, a.elem)), normalize(w_->mul(t, b.elem)));
  };
  const Order o = compare_at(m);
  if (compare_at(m + 1) != o) throw ConsistencyError("generic order did not stabilise under translation");
  return o;
}

bool AlcoveModel::generic_leq(const Alcove& a, const Alcove& b) const {
  const Order o = generic_order(a, b);
  return o == Order::Less || o == Order::Equal;
}

bool AlcoveModel::below_wall_neighbor(const ExtElem& x, int g) const {
  const ExtElem xs = w_->right_gen(x, g);
  const auto& d = w_->datum();
  const Weight two_rho = d.two_rho();
  const Weight ba = w_->act_scaled(x, two_rho, den_);
  const Weight bb = w_->act_scaled(xs, two_rho, den_);
  std::int64_t m = 0;
  for (int i = 0; i < d.rank(); ++i) {
    m = std::max(m, floor_div(-d.pair_simple(ba, i), den_) + 1);
    m = std::max(m, floor_div(-d.pair_simple(bb, i), den_) + 1);
  }
  // lengths are unchanged by the right Omega-factor, so no normalisation is needed
  const ExtElem t = w_->translation(m * d.varsigma());
  return w_->length(w_->mul(t, x)) < w_->length(w_->mul(t, xs));
}

std::vector<Alcove> AlcoveModel::window(int max_len) const {
  std::vector<Alcove> out;
  for (const auto& x : w_->enumerate_W(max_len)) out.push_back(from_weyl(x));
  return out;
}

}  // namespace affkl
