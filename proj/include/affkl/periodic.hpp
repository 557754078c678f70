#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "affkl/alcoves.hpp"
#include "affkl/ptable.hpp"

namespace affkl {

struct PositivityEntry {
  ExtElem A, B;  // alcove labels
  LaurentPoly coeff;
};

struct PositivityReport {
  std::size_t alcoves = 0;
  std::vector<PositivityEntry> entries;    // nonzero off-diagonal coefficients
  std::vector<PositivityEntry> negatives;  // subset with a negative coefficient
  bool ok() const { return negatives.empty(); }
};

// Periodic module: free on alcoves, keys are the labels x in W of x(A_fund).
class PeriodicModule {
 public:
  explicit PeriodicModule(std::shared_ptr<const ParabolicModules> P);

  const ParabolicModules& modules() const { return *P_; }
  std::shared_ptr<const ParabolicModules> modules_ptr() const { return P_; }
  const HeckeAlgebra& hecke() const { return P_->hecke(); }
  const ExtendedWeyl& weyl() const { return P_->weyl(); }
  const AlcoveModel& alcoves() const { return *A_; }

  PeriodicElem alcove(const ExtElem& x) const;  // basis vector, x in W
  PeriodicElem act_kl_gen(const PeriodicElem& x, int g) const;
  PeriodicElem act_gen(const PeriodicElem& x, int g) const;
  PeriodicElem act_std(const PeriodicElem& x, const ExtElem& y) const;  // y in W
  PeriodicElem act(const PeriodicElem& x, const HeckeElem& h) const;
  PeriodicElem translate(const PeriodicElem& x, const Weight& mu) const;
  // tau_mu on the Hecke side: H_y -> H_{omega_mu y omega_mu^{-1}}
  HeckeElem tau(const Weight& mu, const HeckeElem& h) const;

  const LaurentPoly& pi_f() const { return pi_f_; }
  PeriodicElem canonical_P_fund(const Weight& mu) const;
  PeriodicElem canonical_P(const ExtElem& A) const;
  PeriodicElem p_canonical_P(const PCanonicalTable& t, const ExtElem& A) const;
  // Same, with an explicit mu; A must lie in the upper box of mu.
  PeriodicElem p_canonical_P_at(const PCanonicalTable& t, const ExtElem& A, const Weight& mu) const;

  // Expands pP_A in the basis P_B for every alcove of the window. The pivot is the
  // top alcove after a common dominant translation; max_steps bounds each expansion.
  PositivityReport positivity_check(const PCanonicalTable& t, const std::vector<ExtElem>& window,
                                    std::size_t max_steps = 10000) const;

 private:
  std::shared_ptr<const ParabolicModules> P_;
  std::shared_ptr<const AlcoveModel> A_;
  LaurentPoly pi_f_;
  PCanonicalTable builtin_;
  struct FundCache;
  std::shared_ptr<FundCache> fund_cache_;  // P_{A_fund} * H_z along reduced words
};

}  // namespace affkl
