#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "affkl/hecke.hpp"

namespace affkl {

class PCanonicalTable;

// Raised by zeta_preimage; the message names a witness coefficient.
struct NotInImageError : InputError {
  using InputError::InputError;
};

struct LemmaRhoReport {
  ExtElem omega;
  bool in_fWext = false;
  bool sum_formula = false;
  bool absorption = false;
  std::size_t terms = 0;
  bool ok() const { return in_fWext && sum_formula && absorption; }
};

// Antispherical (sgn) and spherical (triv) right modules over H_ext, with the
// maps xi, zeta and phi between them.
class ParabolicModules {
 public:
  explicit ParabolicModules(std::shared_ptr<const HeckeAlgebra> h);

  const HeckeAlgebra& hecke() const { return *h_; }
  std::shared_ptr<const HeckeAlgebra> hecke_ptr() const { return h_; }
  const ExtendedWeyl& weyl() const { return h_->weyl(); }

  AsphElem asph_act_gen(const AsphElem& x, int g) const;
  SphElem sph_act_gen(const SphElem& x, int g) const;
  AsphElem asph_act_kl_gen(const AsphElem& x, int g) const;  // x * (H_s + v)
  SphElem sph_act_kl_gen(const SphElem& x, int g) const;
  AsphElem asph_act(const AsphElem& x, const HeckeElem& h) const;
  SphElem sph_act(const SphElem& x, const HeckeElem& h) const;
  AsphElem asph_act_std(const AsphElem& x, const ExtElem& y) const;
  SphElem sph_act_std(const SphElem& x, const ExtElem& y) const;

  AsphElem asph_bar(const AsphElem& x) const;
  SphElem sph_bar(const SphElem& x) const;

  // xi(h) = N_e * h
  AsphElem xi(const HeckeElem& h) const;
  // M_e * h
  SphElem sph_image(const HeckeElem& h) const;
  HeckeElem zeta(const SphElem& m) const;
  SphElem zeta_preimage(const HeckeElem& h) const;

  AsphElem kl_N(const ExtElem& w) const;
  SphElem kl_M(const ExtElem& w) const;
  // Descent recursions inside the modules, used to cross-check kl_N / kl_M.
  AsphElem kl_N_recursive(const ExtElem& w) const;
  SphElem kl_M_recursive(const ExtElem& w) const;

  ExtElem t_varsigma() const { return weyl().translation(weyl().datum().varsigma()); }
  LemmaRhoReport lemma_rho(const ExtElem& omega) const;
  // N_{t_varsigma omega}; throws ConsistencyError if the lemma checks fail
  AsphElem uN_varsigma(const ExtElem& omega) const;
  AsphElem phi(const SphElem& m) const;

  // M^lambda_w (w minimal in W_lambda w) -> M_{omega_lambda^{-1} w}
  SphElem twisted_embed(const Weight& lambda, const SphElem& m) const;
  // label in fW_ext of the image of M^lambda_A, A = (lambda + A_fund) * w
  ExtElem twisted_label(const Weight& lambda, const ExtElem& alcove) const;

 private:
  std::shared_ptr<const HeckeAlgebra> h_;
  mutable std::mutex mu_;
  mutable std::map<ExtElem, AsphElem> uN_;
  void require_fW(const ExtElem& w, const char* what) const;
};

struct MainCheck {
  ExtElem w;
  bool ok = false;
  AsphElem lhs, rhs;
  std::vector<std::pair<ExtElem, std::pair<LaurentPoly, LaurentPoly>>> diff;  // key -> (lhs, rhs)
};

// p-canonical elements read from a table (H-columns are converted through xi / zeta).
HeckeElem p_H(const PCanonicalTable& t, const ExtElem& w);
AsphElem p_N(const PCanonicalTable& t, const ExtElem& w);
SphElem p_M(const PCanonicalTable& t, const ExtElem& w);
// phi(pM_w) against pN_{t_varsigma w}
MainCheck verify_main(const PCanonicalTable& t, const ExtElem& w);

}  // namespace affkl
