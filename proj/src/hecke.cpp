#include "affkl/hecke.hpp"

#include <cstdlib>
#include <mutex>

namespace affkl {

std::filesystem::path default_cache_dir() {
  const char* e = std::getenv("AFFKL_CACHE_DIR");
  return e ? std::filesystem::path(e) : std::filesystem::path();
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const ExtendedWeyl> w) : w_(std::move(w)) {}

HeckeElem HeckeAlgebra::mul_right_gen(const HeckeElem& a, int g) const {
  HeckeElem r;
  for (const auto& [x, f] : a.terms()) {
    const ExtElem xs = w_->right_gen(x, g);
    r.add(xs, f);
    if (w_->length(xs) < w_->length(x)) r.add_product(x, f, vinv_minus_v());
  }
  return r;
}

HeckeElem HeckeAlgebra::mul_left_gen(int g, const HeckeElem& a) const {
  HeckeElem r;
  for (const auto& [x, f] : a.terms()) {
    const ExtElem sx = w_->left_gen(g, x);
    r.add(sx, f);
    if (w_->length(sx) < w_->length(x)) r.add_product(x, f, vinv_minus_v());
  }
  return r;
}

HeckeElem HeckeAlgebra::mul_right_kl_gen(const HeckeElem& a, int g) const {
  // H_x (H_s + v) = H_xs + v H_x if xs > x, and H_xs + v^{-1} H_x otherwise
  static const LaurentPoly v = LaurentPoly::v(), vi = LaurentPoly::vinv();
  HeckeElem r;
  for (const auto& [x, f] : a.terms()) {
    const ExtElem xs = w_->right_gen(x, g);
    r.add(xs, f);
    r.add_product(x, f, w_->length(xs) > w_->length(x) ? v : vi);
  }
  return r;
}

namespace {

// x = word * omega
std::pair<std::vector<int>, ExtElem> split(const ExtendedWeyl& W, const ExtElem& x) {
  std::vector<int> word = W.reduced_word(x);
  ExtElem om = W.mul(W.inverse(W.from_word(word)), x);
  return {std::move(word), om};
}

}  // namespace

HeckeElem HeckeAlgebra::mul_right_std(const HeckeElem& a, const ExtElem& x) const {
  auto [word, om] = split(*w_, x);
  HeckeElem r = a;
  for (int g : word) r = mul_right_gen(r, g);
  if (om == w_->identity()) return r;
  HeckeElem out;
  for (const auto& [y, f] : r.terms()) out.add(w_->mul(y, om), f);
  return out;
}

HeckeElem HeckeAlgebra::mul_left_std(const ExtElem& x, const HeckeElem& a) const {
  auto [word, om] = split(*w_, x);
  HeckeElem r;
  if (om == w_->identity()) {
    r = a;
  } else {
    for (const auto& [y, f] : a.terms()) r.add(w_->mul(om, y), f);
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_left_gen(*it, r);
  return r;
}

HeckeElem HeckeAlgebra::mul(const HeckeElem& a, const HeckeElem& b) const {
  HeckeElem r;
  for (const auto& [y, f] : b.terms()) r.add_scaled(mul_right_std(a, y), f);
  return r;
}

HeckeElem HeckeAlgebra::bar_standard(const ExtElem& x) const {
  static const LaurentPoly c = -vinv_minus_v();
  auto [word, om] = split(*w_, x);
  HeckeElem r = standard(w_->identity());
  for (int g : word) {
    HeckeElem t = mul_right_gen(r, g);
    t.add_scaled(r, c);
    r = std::move(t);
  }
  if (om == w_->identity()) return r;
  HeckeElem out;
  for (const auto& [y, f] : r.terms()) out.add(w_->mul(y, om), f);
  return out;
}

HeckeElem HeckeAlgebra::bar(const HeckeElem& a) const {
  HeckeElem r;
  for (const auto& [x, f] : a.terms()) r.add_scaled(bar_standard(x), f.bar());
  return r;
}

std::shared_ptr<const HeckeElem> HeckeAlgebra::lookup(const ExtElem& x) const {
  std::shared_lock lock(mu_);
  auto it = cache_.find(x);
  return it == cache_.end() ? nullptr : it->second;
}

std::shared_ptr<const HeckeElem> HeckeAlgebra::insert(const ExtElem& x, HeckeElem h) const {
  auto p = std::make_shared<const HeckeElem>(std::move(h));
  std::unique_lock lock(mu_);
  return cache_.emplace(x, std::move(p)).first->second;
}

std::size_t HeckeAlgebra::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

std::shared_ptr<const HeckeElem> HeckeAlgebra::compute_W(const ExtElem& x) const {
  if (x == w_->identity()) return insert(x, standard(x));
  const int g = w_->first_right_descent(x);
  const ExtElem xs = w_->right_gen(x, g);
  auto lower = kl_basis(xs);
  HeckeElem r = mul_right_kl_gen(*lower, g);
  // H_{xs} H_s = H_x + sum_{z < xs, zs < z} mu(z, xs) H_z
  for (const auto& [z, h] : lower->terms()) {
    if (z == xs || !w_->is_right_descent(z, g)) continue;
    const Integer mu = h.coeff(1);
    if (mu != 0) r.add_scaled(*kl_basis(z), LaurentPoly(Integer(-mu)));
  }
  return insert(x, std::move(r));
}

std::shared_ptr<const HeckeElem> HeckeAlgebra::kl_basis(const ExtElem& x) const {
  if (auto hit = lookup(x)) return hit;
  if (w_->in_W(x)) return compute_W(x);
  auto [w, om] = w_->omega_decompose_right(x);
  auto base = kl_basis(w);
  HeckeElem r;
  for (const auto& [y, f] : base->terms()) r.add(w_->mul(y, om), f);
  return insert(x, std::move(r));
}

bool HeckeAlgebra::check_absorption(const ExtElem& w, int g) const {
  if (!w_->is_right_descent(w, g))
    throw InputError("absorption needs a right descent: " + w_->to_text(w) + " * " + w_->generator_name(g));
  const auto& h = *kl_basis(w);
  return mul_right_kl_gen(h, g) == h * v_plus_vinv();
}

}  // namespace affkl
