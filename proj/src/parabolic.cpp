#include "affkl/parabolic.hpp"

#include <functional>

#include "affkl/ptable.hpp"

namespace affkl {

namespace {

// (-v)^k for the sign module, v^{-k} for the trivial one
LaurentPoly sgn_power(int k) { return LaurentPoly::monomial(k, k % 2 ? -1 : 1); }
LaurentPoly triv_power(int k) { return LaurentPoly::monomial(-k); }

// Right action of H_s on a parabolic module; `outside` is the scalar of H_s when ws leaves fW_ext.
template <class Tag>
LinComb<Tag> act_gen(const ExtendedWeyl& W, const LinComb<Tag>& x, int g, const LaurentPoly& outside) {
  LinComb<Tag> r;
  for (const auto& [w, f] : x.terms()) {
    const ExtElem ws = W.right_gen(w, g);
    if (!W.is_fWext(ws)) {
      r.add_product(w, f, outside);
    } else {
      r.add(ws, f);
      if (W.length(ws) < W.length(w)) r.add_product(w, f, vinv_minus_v());
    }
  }
  return r;
}

template <class Tag>
LinComb<Tag> act_kl_gen(const ExtendedWeyl& W, const LinComb<Tag>& x, int g, const LaurentPoly& outside) {
  static const LaurentPoly v = LaurentPoly::v(), vi = LaurentPoly::vinv();
  const LaurentPoly out_kl = outside + v;
  LinComb<Tag> r;
  for (const auto& [w, f] : x.terms()) {
    const ExtElem ws = W.right_gen(w, g);
    if (!W.is_fWext(ws)) {
      r.add_product(w, f, out_kl);
    } else {
      r.add(ws, f);
      r.add_product(w, f, W.length(ws) > W.length(w) ? v : vi);
    }
  }
  return r;
}

template <class Tag>
LinComb<Tag> act_std(const ExtendedWeyl& W, const LinComb<Tag>& x, const ExtElem& y, const LaurentPoly& outside) {
  const std::vector<int> word = W.reduced_word(y);
  const ExtElem om = W.mul(W.inverse(W.from_word(word)), y);
  LinComb<Tag> r = x;
  for (int g : word) r = act_gen(W, r, g, outside);
  if (om == W.identity()) return r;
  LinComb<Tag> out;
  for (const auto& [w, f] : r.terms()) out.add(W.mul(w, om), f);
  return out;
}

// Bar-invariant g with f - g in vZ[v]; f is expected to be bar-invariant modulo vZ[v].
LaurentPoly bar_invariant_part(const LaurentPoly& f) {
  LaurentPoly g;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) continue;
    g += LaurentPoly::monomial(e, c);
    if (e < 0) g += LaurentPoly::monomial(-e, c);
  }
  return g;
}

// KL element of a parabolic module by descent recursion: take N_{ws} * H_s_kl and
// strip off every lower coefficient outside vZ[v], top-down in length.
template <class Tag>
LinComb<Tag> parabolic_kl(const ExtendedWeyl& W, const ExtElem& w, const LaurentPoly& outside,
                          std::map<ExtElem, LinComb<Tag>>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  LinComb<Tag> r;
  if (!W.in_W(w)) {
    auto [base, om] = W.omega_decompose_right(w);
    const LinComb<Tag> b = parabolic_kl(W, base, outside, memo);
    for (const auto& [y, f] : b.terms()) r.add(W.mul(y, om), f);
  } else if (w == W.identity()) {
    r = LinComb<Tag>::basis(w);
  } else {
    const int g = W.first_right_descent(w);
    r = act_kl_gen(W, parabolic_kl(W, W.right_gen(w, g), outside, memo), g, outside);
    for (;;) {
      const ExtElem* worst = nullptr;
      int wl = -1;
      for (const auto& [y, f] : r.terms()) {
        if (y == w || f.in_vZv()) continue;
        const int l = W.length(y);
        if (!worst || l > wl || (l == wl && y < *worst)) {
          worst = &y;
          wl = l;
        }
      }
      if (!worst) break;
      const ExtElem y = *worst;
      const LaurentPoly g0 = bar_invariant_part(r.coeff(y));
      r.add_scaled(parabolic_kl(W, y, outside, memo), -g0);
    }
  }
  memo.emplace(w, r);
  return r;
}

}  // namespace

ParabolicModules::ParabolicModules(std::shared_ptr<const HeckeAlgebra> h) : h_(std::move(h)) {}

void ParabolicModules::require_fW(const ExtElem& w, const char* what) const {
  if (!weyl().is_fWext(w))
    throw InputError(std::string(what) + ": " + weyl().to_text(w) + " is not minimal in its W_f-coset");
}

AsphElem ParabolicModules::asph_act_gen(const AsphElem& x, int g) const {
  return act_gen(weyl(), x, g, -LaurentPoly::v());
}
SphElem ParabolicModules::sph_act_gen(const SphElem& x, int g) const {
  return act_gen(weyl(), x, g, LaurentPoly::vinv());
}
AsphElem ParabolicModules::asph_act_kl_gen(const AsphElem& x, int g) const {
  return act_kl_gen(weyl(), x, g, -LaurentPoly::v());
}
SphElem ParabolicModules::sph_act_kl_gen(const SphElem& x, int g) const {
  return act_kl_gen(weyl(), x, g, LaurentPoly::vinv());
}
AsphElem ParabolicModules::asph_act_std(const AsphElem& x, const ExtElem& y) const {
  return act_std(weyl(), x, y, -LaurentPoly::v());
}
SphElem ParabolicModules::sph_act_std(const SphElem& x, const ExtElem& y) const {
  return act_std(weyl(), x, y, LaurentPoly::vinv());
}

AsphElem ParabolicModules::asph_act(const AsphElem& x, const HeckeElem& h) const {
  AsphElem r;
  for (const auto& [y, f] : h.terms()) r.add_scaled(asph_act_std(x, y), f);
  return r;
}

SphElem ParabolicModules::sph_act(const SphElem& x, const HeckeElem& h) const {
  SphElem r;
  for (const auto& [y, f] : h.terms()) r.add_scaled(sph_act_std(x, y), f);
  return r;
}

AsphElem ParabolicModules::xi(const HeckeElem& h) const {
  AsphElem r;
  for (const auto& [y, f] : h.terms()) {
    auto [u, x] = weyl().finite_coset_decompose(y);
    r.add_product(x, f, sgn_power(weyl().finite().length(u)));
  }
  return r;
}

SphElem ParabolicModules::sph_image(const HeckeElem& h) const {
  SphElem r;
  for (const auto& [y, f] : h.terms()) {
    auto [u, x] = weyl().finite_coset_decompose(y);
    r.add_product(x, f, triv_power(weyl().finite().length(u)));
  }
  return r;
}

AsphElem ParabolicModules::asph_bar(const AsphElem& x) const {
  AsphElem r;
  for (const auto& [w, f] : x.terms()) r.add_scaled(xi(h_->bar_standard(w)), f.bar());
  return r;
}

SphElem ParabolicModules::sph_bar(const SphElem& x) const {
  SphElem r;
  for (const auto& [w, f] : x.terms()) r.add_scaled(sph_image(h_->bar_standard(w)), f.bar());
  return r;
}

HeckeElem ParabolicModules::zeta(const SphElem& m) const {
  const auto& W = weyl();
  const auto& F = W.finite();
  const int lf = F.length(F.longest());
  HeckeElem r;
  for (const auto& [x, f] : m.terms()) {
    require_fW(x, "zeta");
    for (std::uint32_t z = 0; z < F.size(); ++z)
      r.add_product(W.mul(W.finite_elem(z), x), f, LaurentPoly::monomial(lf - F.length(z)));
  }
  return r;
}

SphElem ParabolicModules::zeta_preimage(const HeckeElem& h) const {
  const auto& W = weyl();
  const ExtElem wf = W.longest_finite();
  SphElem m;
  for (const auto& [y, f] : h.terms()) {
    auto [u, x] = W.finite_coset_decompose(y);
    if (!m.contains(x)) m.add(x, h.coeff(W.mul(wf, x)));
  }
  HeckeElem back = zeta(m);
  if (back == h) return m;
  HeckeElem d = h - back;
  const ExtElem y = d.sorted(W).front().first;
  throw NotInImageError("not in the image of zeta: coefficient of H at " + W.to_text(y) + " is " +
                        h.coeff(y).to_string() + ", the image pattern requires " + back.coeff(y).to_string());
}

AsphElem ParabolicModules::kl_N(const ExtElem& w) const {
  require_fW(w, "kl_N");
  return xi(*h_->kl_basis(w));
}

SphElem ParabolicModules::kl_M(const ExtElem& w) const {
  require_fW(w, "kl_M");
  return zeta_preimage(*h_->kl_basis(weyl().mul(weyl().longest_finite(), w)));
}

AsphElem ParabolicModules::kl_N_recursive(const ExtElem& w) const {
  require_fW(w, "kl_N");
  std::map<ExtElem, AsphElem> memo;
  return parabolic_kl(weyl(), w, -LaurentPoly::v(), memo);
}

SphElem ParabolicModules::kl_M_recursive(const ExtElem& w) const {
  require_fW(w, "kl_M");
  std::map<ExtElem, SphElem> memo;
  return parabolic_kl(weyl(), w, LaurentPoly::vinv(), memo);
}

LemmaRhoReport ParabolicModules::lemma_rho(const ExtElem& omega) const {
  const auto& W = weyl();
  const auto& F = W.finite();
  if (!W.is_omega(omega)) throw InputError("lemma_rho: " + W.to_text(omega) + " has nonzero length");
  LemmaRhoReport rep;
  rep.omega = omega;
  const ExtElem t = t_varsigma();
  const ExtElem x = W.mul(t, omega);
  rep.in_fWext = W.is_fWext(x);
  if (!rep.in_fWext) return rep;
  const AsphElem N = kl_N(x);
  rep.terms = N.size();
  AsphElem expect;
  for (std::uint32_t z = 0; z < F.size(); ++z)
    expect.add(W.mul(W.mul(t, W.finite_elem(z)), omega), LaurentPoly::monomial(F.length(z)));
  rep.sum_formula = (N == expect);
  const AsphElem N0 = omega == W.identity() ? N : kl_N(t);
  rep.absorption = true;
  for (int i = 0; i < W.datum().rank(); ++i)
    if (asph_act_kl_gen(N0, W.finite_generator(i)) != N0 * v_plus_vinv()) rep.absorption = false;
  return rep;
}

AsphElem ParabolicModules::uN_varsigma(const ExtElem& omega) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = uN_.find(omega); it != uN_.end()) return it->second;
  }
  const LemmaRhoReport rep = lemma_rho(omega);
  if (!rep.ok())
    throw ConsistencyError("N_{t_varsigma} fails the expected shape for omega = " + weyl().to_text(omega));
  AsphElem N = kl_N(weyl().mul(t_varsigma(), omega));
  std::lock_guard lock(mu_);
  return uN_.emplace(omega, std::move(N)).first->second;
}

AsphElem ParabolicModules::phi(const SphElem& m) const {
  const AsphElem base = uN_varsigma(weyl().identity());
  AsphElem r;
  for (const auto& [w, f] : m.terms()) {
    require_fW(w, "phi");
    r.add_scaled(asph_act_std(base, w), f);
  }
  return r;
}

SphElem ParabolicModules::twisted_embed(const Weight& lambda, const SphElem& m) const {
  const auto& W = weyl();
  const ExtElem oi = W.inverse(W.omega_of_weight(lambda).first);
  SphElem r;
  for (const auto& [w, f] : m.terms()) {
    if (!W.in_W(w)) throw InputError("twisted_embed: " + W.to_text(w) + " is not in W");
    const ExtElem x = W.mul(oi, w);
    if (!W.is_fWext(x))
      throw InputError("twisted_embed: " + W.to_text(w) + " is not minimal in its coset for the stabiliser of lambda");
    r.add(x, f);
  }
  return r;
}

ExtElem ParabolicModules::twisted_label(const Weight& lambda, const ExtElem& alcove) const {
  const auto& W = weyl();
  // (lambda + A_fund) * w = x_lambda w (A_fund), and omega_lambda^{-1} x_lambda^{-1} = t_{-lambda}
  const ExtElem x = W.mul(W.translation(-lambda), alcove);
  if (!W.is_fWext(x))
    throw InputError("alcove " + W.to_text(alcove) + " does not lie in the region attached to lambda");
  return x;
}

HeckeElem p_H(const PCanonicalTable& t, const ExtElem& w) {
  if (t.is_builtin()) return *t.modules().hecke().kl_basis(w);
  if (t.basis() != BasisKind::H) throw InputError("table with basis " + std::string(to_string(t.basis())) + " has no H-columns");
  return t.column_H(w);
}

AsphElem p_N(const PCanonicalTable& t, const ExtElem& w) {
  const auto& P = t.modules();
  if (!P.weyl().is_fWext(w)) throw InputError("p_N: " + P.weyl().to_text(w) + " is not in fW_ext");
  if (t.is_builtin()) return P.kl_N(w);
  switch (t.basis()) {
    case BasisKind::N:
      return t.column_N(w);
    case BasisKind::H:
      return P.xi(t.column_H(w));
    default:
      throw InputError("an M-table does not determine pN");
  }
}

SphElem p_M(const PCanonicalTable& t, const ExtElem& w) {
  const auto& P = t.modules();
  if (!P.weyl().is_fWext(w)) throw InputError("p_M: " + P.weyl().to_text(w) + " is not in fW_ext");
  if (t.is_builtin()) return P.kl_M(w);
  switch (t.basis()) {
    case BasisKind::M:
      return t.column_M(w);
    case BasisKind::H:
      return P.zeta_preimage(t.column_H(P.weyl().mul(P.weyl().longest_finite(), w)));
    default:
      throw InputError("an N-table does not determine pM");
  }
}

MainCheck verify_main(const PCanonicalTable& t, const ExtElem& w) {
  const auto& P = t.modules();
  const auto& W = P.weyl();
  MainCheck c;
  c.w = w;
  c.lhs = P.phi(p_M(t, w));
  c.rhs = p_N(t, W.mul(P.t_varsigma(), w));
  c.ok = c.lhs == c.rhs;
  if (!c.ok)
    for (const auto& [y, f] : (c.lhs - c.rhs).sorted(W)) c.diff.push_back({y, {c.lhs.coeff(y), c.rhs.coeff(y)}});
  return c;
}

}  // namespace affkl
