#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "affkl/periodic.hpp"

namespace affkl {

using IntMap = std::vector<std::pair<ExtElem, Integer>>;  // canonical order, no zeros

// T-weight multiplicities.
struct FormalCharacter {
  std::map<Weight, Integer> mult;

  Integer mass() const;
  FormalCharacter dominant_part(const RootDatum& d) const;
  void add(const Weight& mu, const Integer& c);
  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) { return a.mult == b.mult; }
};

// Square table indexed by labels; entries (row, col) = (Q_row : Z_col) = [Z_col : L_row].
template <class Label>
struct MultiplicityTable {
  std::vector<Label> labels;
  std::map<std::pair<Label, Label>, Integer> entries;  // nonzero only

  Integer at(const Label& row, const Label& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? Integer(0) : it->second;
  }
};

// Inverts the reciprocity system [Z_y] = sum_w (Q_w : Z_y) [L_w] on the labels of mt.
// Result entry (w, y) is the coefficient of [Z_y] in [L_w]. Exact for windows that are
// convex in the support order; a column label outside the window is an error.
template <class Label>
MultiplicityTable<Label> reciprocity_invert(const MultiplicityTable<Label>& mt,
                                            const std::function<std::string(const Label&)>& show) {
  std::set<Label> have(mt.labels.begin(), mt.labels.end());
  std::set<Label> missing;
  for (const auto& [rc, c] : mt.entries) {
    if (!have.count(rc.first)) missing.insert(rc.first);
    if (!have.count(rc.second)) missing.insert(rc.second);
  }
  if (!missing.empty()) {
    std::string m;
    for (const auto& l : missing) m += (m.empty() ? "" : "; ") + show(l);
    throw InputError("window is not closed; missing labels: " + m);
  }
  // factors[y] = {(w, [Z_y : L_w]) : w != y}
  std::map<Label, std::vector<std::pair<Label, Integer>>> factors;
  for (const auto& [rc, c] : mt.entries) {
    if (rc.first == rc.second) {
      if (c != 1) throw InputError("diagonal entry at " + show(rc.first) + " is not 1");
      continue;
    }
    factors[rc.second].emplace_back(rc.first, c);
  }
  for (const auto& l : mt.labels)
    if (mt.at(l, l) != 1) throw InputError("diagonal entry at " + show(l) + " is not 1");

  // [L_y] = [Z_y] - sum_w [Z_y : L_w] [L_w], memoized depth-first
  std::map<Label, std::map<Label, Integer>> inv;
  std::set<Label> open;
  std::function<const std::map<Label, Integer>&(const Label&)> solve = [&](const Label& y) -> const std::map<Label, Integer>& {
    if (auto it = inv.find(y); it != inv.end()) return it->second;
    if (!open.insert(y).second) throw InputError("multiplicity table is not triangular near " + show(y));
    std::map<Label, Integer> r{{y, Integer(1)}};
    for (const auto& [w, c] : factors[y])
      for (const auto& [z, a] : solve(w)) r[z] -= c * a;
    open.erase(y);
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return inv.emplace(y, std::move(r)).first->second;
  };
  MultiplicityTable<Label> out;
  out.labels = mt.labels;
  for (const auto& l : mt.labels)
    for (const auto& [z, a] : solve(l)) out.entries[{l, z}] = a;
  return out;
}

// One row (Q(lambda) : Z(mu)) of baby Verma multiplicities in a projective.
struct ProjectiveRow {
  Weight lambda;
  ExtElem w;             // lambda = w ._p lambda0 + p nu
  Weight lambda0, nu;    // lambda0 in the fundamental alcove (regular) or -varsigma (Steinberg type)
  bool steinberg = false;
  std::vector<std::pair<Weight, Integer>> entries;  // sorted by weight
};

class Characters {
 public:
  explicit Characters(std::shared_ptr<const PeriodicModule> M);

  const PeriodicModule& periodic() const { return *M_; }
  const ExtendedWeyl& weyl() const { return M_->weyl(); }

  // q_A = (pP_{hat A}) at v = 1; needs p >= 2h - 1 for the table.
  IntMap q_of_alcove(const PCanonicalTable& t, const ExtElem& A) const;
  // sum_z ph_{z, w_f w}(1) z(A_fund), after moving A into the lower box of 0.
  IntMap q_via_coset_sum(const PCanonicalTable& t, const ExtElem& A) const;
  // ph_{x z, w_f w}(1) = ph_{z, w_f w}(1) for all x in W_f; w in fW.
  bool coset_constancy(const PCanonicalTable& t, const ExtElem& w) const;

  // Row y -> ph_{y,w}(1); requires t_varsigma w in fW_ext and restricted.
  IntMap projective_row(const PCanonicalTable& t, const ExtElem& w) const;
  // Same row written in weights, for any lambda in a regular block or of Steinberg type.
  ProjectiveRow row_for_weight(const PCanonicalTable& t, const Weight& lambda, std::int64_t p) const;
  // Entries ph_{y,w}(1) for all w in the window (no hypothesis check; the window is the index set).
  MultiplicityTable<ExtElem> multiplicity_table(const PCanonicalTable& t, std::vector<ExtElem> window) const;

  FormalCharacter baby_verma_character(const Weight& lambda, std::int64_t p) const;
  // Dominant part of ch L(lambda); p > h, semisimple data.
  FormalCharacter simple_character(const PCanonicalTable& t, const Weight& lambda, std::int64_t p) const;

  // Q(t_varsigma w . 0) = T(t_varsigma w_f w . 0): returns (w_f w, hypothesis holds)
  std::pair<ExtElem, bool> tilting_to_projective(const ExtElem& w) const;
  ExtElem projective_to_tilting(const ExtElem& x) const;
  // zeta(phi^{-1}(a)) at v = 1.
  IntMap tilting_babyverma_mults(const IntMap& a) const;

 private:
  std::shared_ptr<const PeriodicModule> M_;

  void require_semisimple(const char* what) const;
  void require_table_p(const PCanonicalTable& t, std::int64_t p) const;
};

}  // namespace affkl
