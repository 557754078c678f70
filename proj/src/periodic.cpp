#include "affkl/periodic.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace affkl {

struct PeriodicModule::FundCache {
  std::shared_mutex mu;
  std::unordered_map<ExtElem, std::shared_ptr<const PeriodicElem>, ExtElemHash> map;
};

PeriodicModule::PeriodicModule(std::shared_ptr<const ParabolicModules> P)
    : P_(std::move(P)),
      A_(std::make_shared<AlcoveModel>(P_->hecke().weyl_ptr())),
      builtin_(PCanonicalTable::builtin(P_)),
      fund_cache_(std::make_shared<FundCache>()) {
  const auto& F = weyl().finite();
  std::vector<std::int64_t> counts(F.length(F.longest()) + 1, 0);
  for (std::uint32_t u = 0; u < F.size(); ++u) ++counts[F.length(u)];
  pi_f_ = poincare_symmetric(counts);
}

PeriodicElem PeriodicModule::alcove(const ExtElem& x) const {
  if (!weyl().in_W(x)) throw InputError("alcove labels lie in W, got " + weyl().to_text(x));
  return PeriodicElem::basis(x);
}

PeriodicElem PeriodicModule::act_kl_gen(const PeriodicElem& x, int g) const {
  static const LaurentPoly v = LaurentPoly::v(), vi = LaurentPoly::vinv();
  PeriodicElem r;
  for (const auto& [a, f] : x.terms()) {
    r.add(weyl().right_gen(a, g), f);
    r.add_product(a, f, A_->below_wall_neighbor(a, g) ? v : vi);
  }
  return r;
}

PeriodicElem PeriodicModule::act_gen(const PeriodicElem& x, int g) const {
  PeriodicElem r = act_kl_gen(x, g);
  r.add_scaled(x, -LaurentPoly::v());
  return r;
}

PeriodicElem PeriodicModule::act_std(const PeriodicElem& x, const ExtElem& y) const {
  if (!weyl().in_W(y)) throw InputError("the periodic module is acted on by H only; " + weyl().to_text(y) + " is not in W");
  PeriodicElem r = x;
  for (int g : weyl().reduced_word(y)) r = act_gen(r, g);
  return r;
}

PeriodicElem PeriodicModule::act(const PeriodicElem& x, const HeckeElem& h) const {
  PeriodicElem r;
  for (const auto& [y, f] : h.terms()) r.add_scaled(act_std(x, y), f);
  return r;
}

PeriodicElem PeriodicModule::translate(const PeriodicElem& x, const Weight& mu) const {
  PeriodicElem r;
  const ExtElem t = weyl().translation(mu);
  for (const auto& [a, f] : x.terms()) r.add(A_->normalize(weyl().mul(t, a)), f);
  return r;
}

HeckeElem PeriodicModule::tau(const Weight& mu, const HeckeElem& h) const {
  const auto& W = weyl();
  const ExtElem om = W.omega_of_weight(mu).first, oi = W.inverse(om);
  HeckeElem r;
  for (const auto& [y, f] : h.terms()) r.add(W.mul(W.mul(om, y), oi), f);
  return r;
}

PeriodicElem PeriodicModule::canonical_P_fund(const Weight& mu) const {
  const auto& W = weyl();
  const auto& F = W.finite();
  const ExtElem t = W.translation(mu);
  PeriodicElem r;
  for (std::uint32_t z = 0; z < F.size(); ++z)
    r.add(A_->normalize(W.mul(t, W.finite_elem(z))), LaurentPoly::monomial(F.length(z)));
  return r;
}

PeriodicElem PeriodicModule::canonical_P(const ExtElem& A) const { return p_canonical_P(builtin_, A); }

PeriodicElem PeriodicModule::p_canonical_P(const PCanonicalTable& t, const ExtElem& A) const {
  return p_canonical_P_at(t, A, A_->box_rep_above(A_->from_weyl(A)));
}

PeriodicElem PeriodicModule::p_canonical_P_at(const PCanonicalTable& t, const ExtElem& A, const Weight& mu) const {
  const auto& W = weyl();
  const auto& d = W.datum();
  const Alcove a = A_->from_weyl(A);
  const Weight above = A_->box_rep_above(a);
  for (int i = 0; i < d.rank(); ++i)
    if (d.pair_simple(above, i) != d.pair_simple(mu, i))
      throw InputError("alcove " + W.to_text(A) + " is not in the upper box of " + mu.to_string());
  // (mu + A_fund) * w = A with zeta_mu(M_w) = H_{w_mu w}, w_mu w = omega_mu w_f t_{-mu} x_A
  const ExtElem om = W.omega_of_weight(mu).first;
  const ExtElem y = W.mul(W.mul(om, W.longest_finite()), W.mul(W.translation(-mu), A));
  if (!W.in_W(y)) throw ConsistencyError("Lusztig formula index left W");
  const HeckeElem h = p_H(t, y);

  // P_{A_fund + mu} * h = (P_{A_fund} * tau_mu^{-1}(h)) + mu
  auto& cache = fund_cache_;
  auto fund_times = [&](const ExtElem& z) {
    {
      std::shared_lock lock(cache->mu);
      if (auto it = cache->map.find(z); it != cache->map.end()) return it->second;
    }
    std::vector<int> word = W.reduced_word(z);
    // longest memoized prefix, then extend letter by letter
    std::size_t k = word.size();
    std::shared_ptr<const PeriodicElem> cur;
    ExtElem prefix = z;
    while (k > 0) {
      std::shared_lock lock(cache->mu);
      if (auto it = cache->map.find(prefix); it != cache->map.end()) {
        cur = it->second;
        break;
      }
      lock.unlock();
      prefix = W.right_gen(prefix, word[k - 1]);
      --k;
    }
    if (!cur) {
      cur = std::make_shared<const PeriodicElem>(canonical_P_fund(Weight(d.lattice_rank())));
      std::unique_lock lock(cache->mu);
      cache->map.emplace(W.identity(), cur);
    }
    for (; k < word.size(); ++k) {
      prefix = W.right_gen(prefix, word[k]);
      auto next = std::make_shared<const PeriodicElem>(act_gen(*cur, word[k]));
      std::unique_lock lock(cache->mu);
      cur = cache->map.emplace(prefix, std::move(next)).first->second;
    }
    return cur;
  };

  const ExtElem oi = W.inverse(om);
  PeriodicElem r;
  for (const auto& [z, f] : h.terms()) r.add_scaled(*fund_times(W.mul(W.mul(oi, z), om)), f);
  r = translate(r, mu);

  PeriodicElem out;
  for (const auto& [b, f] : r.terms()) {
    auto q = f.divide_exact(pi_f_);
    if (!q)
      throw ConsistencyError("coefficient " + f.to_string() + " at alcove " + W.to_text(b) + " is not divisible by " +
                             pi_f_.to_string() + " (alcove " + W.to_text(A) + ")");
    out.add(b, *q);
  }
  return out;
}

PositivityReport PeriodicModule::positivity_check(const PCanonicalTable& t, const std::vector<ExtElem>& window,
                                                  std::size_t max_steps) const {
  const auto& W = weyl();
  const Weight vs = W.datum().varsigma();
  PositivityReport rep;
  std::vector<ExtElem> order = window;
  W.sort_canonical(order);
  for (const auto& A : order) {
    ++rep.alcoves;
    PeriodicElem res = p_canonical_P(t, A);
    std::size_t steps = 0;
    while (!res.is_zero()) {
      if (++steps > max_steps)
        throw InputError("positivity expansion of alcove " + W.to_text(A) + " did not finish within " +
                         std::to_string(max_steps) + " steps; enlarge the budget");
      std::int64_t m = 0;
      for (const auto& kv : res.terms()) m = std::max(m, A_->dominance_shift(A_->from_weyl(kv.first)));
      const ExtElem shift = W.translation(m * vs);
      const ExtElem* best = nullptr;
      int bl = -1;
      for (const auto& kv : res.terms()) {
        const int l = W.length(W.mul(shift, kv.first));
        if (!best || l > bl || (l == bl && W.canonical_less(kv.first, *best))) {
          best = &kv.first;
          bl = l;
        }
      }
      const ExtElem B = *best;
      const LaurentPoly c = res.coeff(B);
      if (B != A || !c.is_one()) {
        PositivityEntry e{A, B, c};
        rep.entries.push_back(e);
        if (!c.nonnegative()) rep.negatives.push_back(e);
      }
      res.add_scaled(canonical_P(B), -c);
    }
  }
  return rep;
}

}  // namespace affkl
