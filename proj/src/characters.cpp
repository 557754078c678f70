#include "affkl/characters.hpp"

#include <algorithm>
#include <deque>

namespace affkl {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_dominant(const RootDatum& d, const Weight& mu) {
  for (int i = 0; i < d.rank(); ++i)
    if (d.pair_simple(mu, i) < 0) return false;
  return true;
}

// lambda - p nu + varsigma for the box normalization of lambda; zero means Steinberg type
Weight shifted_point(const RootDatum& d, const Weight& lambda, std::int64_t p) {
  std::vector<std::int64_t> pr(d.rank());
  for (int i = 0; i < d.rank(); ++i) pr[i] = floor_div(d.pair_simple(lambda, i), p) + 1;
  return lambda - p * d.weight_with_pairings(pr) + d.varsigma();
}

bool is_singular(const RootDatum& d, const Weight& P, std::int64_t p) {
  for (int k = 0; k < d.num_positive_roots(); ++k)
    if (d.pair_coroot(P, k) % p == 0) return true;
  return false;
}

IntMap at_one(const HeckeElem& h, const ExtendedWeyl& W) { return specialize_v1(h, W); }

IntMap sorted_map(const std::map<ExtElem, Integer>& m, const ExtendedWeyl& W) {
  std::vector<ExtElem> keys;
  for (const auto& [k, c] : m)
    if (c != 0) keys.push_back(k);
  W.sort_canonical(keys);
  IntMap out;
  for (const auto& k : keys) out.emplace_back(k, m.at(k));
  return out;
}

}  // namespace

Integer FormalCharacter::mass() const {
  Integer s = 0;
  for (const auto& kv : mult) s += kv.second;
  return s;
}

FormalCharacter FormalCharacter::dominant_part(const RootDatum& d) const {
  FormalCharacter r;
  for (const auto& [mu, c] : mult)
    if (is_dominant(d, mu)) r.mult.emplace(mu, c);
  return r;
}

void FormalCharacter::add(const Weight& mu, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = mult.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) mult.erase(it);
  }
}

Characters::Characters(std::shared_ptr<const PeriodicModule> M) : M_(std::move(M)) {}

void Characters::require_semisimple(const char* what) const {
  if (!weyl().datum().semisimple()) throw InputError(std::string(what) + " needs a semisimple datum");
}

void Characters::require_table_p(const PCanonicalTable& t, std::int64_t p) const {
  if (t.p() && *t.p() != p)
    throw InputError("table " + t.name() + " was computed for p = " + t.p_text() + ", not " + std::to_string(p));
}

IntMap Characters::q_of_alcove(const PCanonicalTable& t, const ExtElem& A) const {
  const int h = weyl().datum().coxeter_number();
  if (t.p() && *t.p() < 2 * h - 1)
    throw InputError("q_A from p-canonical data needs p >= 2h - 1 = " + std::to_string(2 * h - 1) + ", table has p = " +
                     t.p_text());
  const auto& al = M_->alcoves();
  const Alcove hA = al.hat(al.from_weyl(A));
  return specialize_v1(M_->p_canonical_P(t, hA.elem), weyl());
}

IntMap Characters::q_via_coset_sum(const PCanonicalTable& t, const ExtElem& A) const {
  const auto& W = weyl();
  const auto& al = M_->alcoves();
  const Alcove a = al.from_weyl(A);
  const Weight mu = al.box_rep_below(a);
  const ExtElem x = al.translate(a, -mu).elem;  // w_f w with w in fW
  if (!W.is_fWext(W.mul(W.longest_finite(), x)))
    throw ConsistencyError("alcove " + W.to_text(A) + " moved to the lower box of 0 has label " + W.to_text(x) +
                           ", which is not of the form w_f w");
  const ExtElem tm = W.translation(mu);
  std::map<ExtElem, Integer> r;
  for (const auto& [z, c] : at_one(p_H(t, x), W)) r[al.normalize(W.mul(tm, z))] += c;
  return sorted_map(r, W);
}

bool Characters::coset_constancy(const PCanonicalTable& t, const ExtElem& w) const {
  const auto& W = weyl();
  const auto& F = W.finite();
  std::map<ExtElem, Integer> col;
  for (const auto& [z, c] : at_one(p_H(t, W.mul(W.longest_finite(), w)), W)) col[z] = c;
  for (const auto& [z, c] : col)
    for (std::uint32_t u = 0; u < F.size(); ++u) {
      auto it = col.find(W.mul(W.finite_elem(u), z));
      if (it == col.end() || it->second != c) return false;
    }
  return true;
}

IntMap Characters::projective_row(const PCanonicalTable& t, const ExtElem& w) const {
  const auto& W = weyl();
  const ExtElem tw = W.mul(M_->modules().t_varsigma(), w);
  if (!W.is_fWext(tw) || !W.is_restricted(tw))
    throw InputError("t_varsigma " + W.to_text(w) + " must lie in fW_ext and be restricted");
  return at_one(p_H(t, w), W);
}

ProjectiveRow Characters::row_for_weight(const PCanonicalTable& t, const Weight& lambda, std::int64_t p) const {
  require_semisimple("projective multiplicities");
  const auto& W = weyl();
  const auto& d = W.datum();
  const auto& F = W.finite();
  const int h = d.coxeter_number();
  if (p < h) throw InputError("p = " + std::to_string(p) + " is below the Coxeter number " + std::to_string(h));
  require_table_p(t, p);

  ProjectiveRow row;
  row.lambda = lambda;
  std::vector<std::int64_t> pairings(d.rank());
  for (int i = 0; i < d.rank(); ++i) pairings[i] = floor_div(d.pair_simple(lambda, i), p) + 1;
  row.nu = d.weight_with_pairings(pairings);
  const Weight shifted = lambda - p * row.nu;  // pairings in [-p, -1]
  const Weight P = shifted + d.varsigma();

  if (P.is_zero()) {
    // Steinberg type: Q((p-1)varsigma) = Z((p-1)varsigma); the entry is ph_{y, w_f}(1) for any y in W_f
    row.steinberg = true;
    row.w = W.longest_finite();
    row.lambda0 = -d.varsigma();
    std::map<ExtElem, Integer> col;
    for (const auto& [y, c] : at_one(p_H(t, row.w), W)) col[y] = c;
    std::optional<Integer> val;
    for (std::uint32_t u = 0; u < F.size(); ++u) {
      auto it = col.find(W.finite_elem(u));
      const Integer c = it == col.end() ? Integer(0) : it->second;
      if (val && *val != c)
        throw ConsistencyError("ph_{y, w_f}(1) is not constant on W_f (at " + W.to_text(W.finite_elem(u)) + ")");
      val = c;
    }
    row.entries.emplace_back(lambda, *val);
    return row;
  }
  if (is_singular(d, P, p))
    throw InputError("weight (" + lambda.to_string() + ") is singular for p = " + std::to_string(p) +
                       "; only regular weights and (p-1)varsigma + pX are supported");

  // P = u(lambda0 + varsigma + p kappa) with lambda0 in the open fundamental alcove
  bool found = false;
  for (std::uint32_t u = 0; u < F.size(); ++u) {
    const Weight Q = F.act(F.inverse(u), P);
    std::vector<std::int64_t> kp(d.rank());
    for (int i = 0; i < d.rank(); ++i) kp[i] = floor_div(d.pair_simple(Q, i), p);
    const Weight kappa = d.weight_with_pairings(kp);
    const Weight R = Q - p * kappa;
    bool inside = true;
    for (int k = 0; k < d.num_positive_roots() && inside; ++k) {
      const auto c = d.pair_coroot(R, k);
      inside = c > 0 && c < p;
    }
    if (!inside) continue;
    const Weight l0 = R - d.varsigma();
    const ExtElem w{u, kappa};
    if (!found || l0 < row.lambda0 || (l0 == row.lambda0 && W.canonical_less(w, row.w))) {
      row.lambda0 = l0;
      row.w = w;
    }
    found = true;
  }
  if (!found) throw ConsistencyError("no fundamental-alcove representative for (" + lambda.to_string() + ")");
  if (W.dot_p(row.w, row.lambda0, p) != shifted) throw ConsistencyError("dot action normalization failed");
  const ExtElem tw = W.mul(M_->modules().t_varsigma(), row.w);
  if (!W.is_fWext(tw) || !W.is_restricted(tw))
    throw ConsistencyError("normalized label " + W.to_text(row.w) + " violates the restrictedness hypothesis");
  for (const auto& [y, c] : at_one(p_H(t, row.w), W))
    row.entries.emplace_back(W.dot_p(y, row.lambda0, p) + p * row.nu, c);
  std::sort(row.entries.begin(), row.entries.end());
  return row;
}

MultiplicityTable<ExtElem> Characters::multiplicity_table(const PCanonicalTable& t, std::vector<ExtElem> window) const {
  const auto& W = weyl();
  W.sort_canonical(window);
  MultiplicityTable<ExtElem> mt;
  mt.labels = window;
  for (const auto& w : window)
    for (const auto& [y, c] : at_one(p_H(t, w), W)) mt.entries[{w, y}] = c;
  return mt;
}

FormalCharacter Characters::baby_verma_character(const Weight& lambda, std::int64_t p) const {
  if (p < 2) throw InputError("p must be at least 2");
  FormalCharacter ch;
  ch.mult.emplace(lambda, 1);
  for (const auto& alpha : weyl().datum().positive_roots()) {
    FormalCharacter next;
    for (const auto& [mu, c] : ch.mult)
      for (std::int64_t k = 0; k < p; ++k) next.add(mu - k * alpha, c);
    ch = std::move(next);
  }
  return ch;
}

FormalCharacter Characters::simple_character(const PCanonicalTable& t, const Weight& lambda, std::int64_t p) const {
  require_semisimple("simple characters");
  const auto& d = weyl().datum();
  if (p <= d.coxeter_number())
    throw InputError("simple characters need p > h = " + std::to_string(d.coxeter_number()));
  const ProjectiveRow top = row_for_weight(t, lambda, p);
  if (top.steinberg) return baby_verma_character(lambda, p).dominant_part(d);

  std::map<Weight, FormalCharacter> dom;  // dominant part of ch Z(mu)
  auto dominant_Z = [&](const Weight& mu) -> const FormalCharacter& {
    auto it = dom.find(mu);
    if (it == dom.end()) it = dom.emplace(mu, baby_verma_character(mu, p).dominant_part(d)).first;
    return it->second;
  };

  // Candidate composition factors: linked weights, reachable downwards, whose Z has dominant weights.
  std::map<Weight, ProjectiveRow> rows{{lambda, top}};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (const auto& [nu, c] : baby_verma_character(mu, p).mult) {
      if (rows.count(nu) || is_singular(d, shifted_point(d, nu, p), p) || dominant_Z(nu).mult.empty()) continue;
      ProjectiveRow r = row_for_weight(t, nu, p);
      if (r.lambda0 != top.lambda0) continue;
      rows.emplace(nu, std::move(r));
      queue.push_back(nu);
    }
  }

  MultiplicityTable<Weight> mt;
  for (const auto& [mu, r] : rows) {
    mt.labels.push_back(mu);
    for (const auto& [y, c] : r.entries)
      if (rows.count(y)) mt.entries[{mu, y}] = c;
  }
  const auto inv = reciprocity_invert<Weight>(mt, [](const Weight& w) { return "(" + w.to_string() + ")"; });

  FormalCharacter ch;
  for (const auto& mu : mt.labels) {
    const Integer a = inv.at(lambda, mu);
    if (a == 0) continue;
    for (const auto& [nu, c] : dominant_Z(mu).mult) ch.add(nu, a * c);
  }
  for (const auto& [nu, c] : ch.mult)
    if (c < 0)
      throw ConsistencyError("negative multiplicity " + c.str() + " at (" + nu.to_string() + ") in ch L(" +
                             lambda.to_string() + ")");
  return ch;
}

std::pair<ExtElem, bool> Characters::tilting_to_projective(const ExtElem& w) const {
  const auto& W = weyl();
  const ExtElem tw = W.mul(M_->modules().t_varsigma(), w);
  return {W.mul(W.longest_finite(), w), W.is_fWext(tw) && W.is_restricted(tw)};
}

ExtElem Characters::projective_to_tilting(const ExtElem& x) const { return weyl().mul(weyl().longest_finite(), x); }

IntMap Characters::tilting_babyverma_mults(const IntMap& a) const {
  const auto& W = weyl();
  const auto& P = M_->modules();
  const ExtElem ts_inv = W.inverse(P.t_varsigma());
  AsphElem rest;
  for (const auto& [x, c] : a) rest.add(x, LaurentPoly(c));
  std::map<ExtElem, Integer> b;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > 100000) throw InputError("tilting decomposition did not terminate");
    const ExtElem top = rest.top(W);
    const ExtElem w = W.mul(ts_inv, top);
    if (!W.is_fWext(w))
      throw NotInImageError("not in the image of phi: leading term at " + W.to_text(top) + " has t_varsigma^{-1} " +
                            W.to_text(w) + " outside fW_ext");
    const Integer c = rest.coeff(top).at_one();
    b[w] += c;
    for (const auto& [y, e] : specialize_v1(P.phi(SphElem::basis(w)), W)) rest.add(y, LaurentPoly(Integer(-c * e)));
  }
  const auto& F = W.finite();
  std::map<ExtElem, Integer> out;
  for (const auto& [w, c] : b)
    for (std::uint32_t z = 0; z < F.size(); ++z) out[W.mul(W.finite_elem(z), w)] += c;
  return sorted_map(out, W);
}

}  // namespace affkl
