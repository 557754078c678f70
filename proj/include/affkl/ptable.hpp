#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "affkl/parabolic.hpp"

namespace affkl {

enum class BasisKind { H, N, M };
const char* to_string(BasisKind b);

// A table column failed one of the three axioms; y, w name the offending pair.
struct TableValidationError : InputError {
  TableValidationError(std::string kind, std::string y, std::string w, const std::string& detail);
  std::string kind, y, w;
};

// p-canonical data: column w lists the coefficients of pH_w (resp. pN_w, pM_w)
// in the standard basis. The builtin table is the KL basis, computed lazily.
class PCanonicalTable {
 public:
  using Column = std::vector<std::pair<ExtElem, LaurentPoly>>;

  static PCanonicalTable builtin(std::shared_ptr<const ParabolicModules> P);
  static PCanonicalTable from_json_text(const std::string& text, std::shared_ptr<const ParabolicModules> P);
  static PCanonicalTable load(const std::filesystem::path& path, std::shared_ptr<const ParabolicModules> P);
  // Validated construction from columns.
  static PCanonicalTable from_columns(std::shared_ptr<const ParabolicModules> P, BasisKind basis,
                                      std::optional<long> p, std::map<ExtElem, Column> cols);
  // No validation at all; only for fault-injection experiments.
  static PCanonicalTable unchecked(std::shared_ptr<const ParabolicModules> P, BasisKind basis, std::optional<long> p,
                                   std::map<ExtElem, Column> cols);

  // Throws TableValidationError on the first failing column (canonical column order).
  void validate() const;

  bool is_builtin() const { return builtin_; }
  BasisKind basis() const { return basis_; }
  std::optional<long> p() const { return p_; }
  std::string p_text() const { return p_ ? std::to_string(*p_) : "infinity"; }
  std::string hash_hex() const;
  std::string name() const;
  const ParabolicModules& modules() const { return *P_; }
  std::shared_ptr<const ParabolicModules> modules_ptr() const { return P_; }

  bool has_column(const ExtElem& w) const;
  std::vector<ExtElem> keys() const;

  // Stored column, extended by H_omega on the right when only the W-part is present.
  HeckeElem column_H(const ExtElem& w) const;
  AsphElem column_N(const ExtElem& w) const;
  SphElem column_M(const ExtElem& w) const;

  std::string to_json() const;

 private:
  std::shared_ptr<const ParabolicModules> P_;
  bool builtin_ = false;
  BasisKind basis_ = BasisKind::H;
  std::optional<long> p_;
  std::map<ExtElem, Column> cols_;
  std::uint64_t hash_ = 0;

  template <class Tag>
  LinComb<Tag> column(const ExtElem& w) const;
  void rehash();
};

}  // namespace affkl
