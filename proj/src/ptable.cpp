#include "affkl/ptable.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace affkl {

using json = nlohmann::json;

const char* to_string(BasisKind b) {
  switch (b) {
    case BasisKind::H:
      return "H";
    case BasisKind::N:
      return "N";
    case BasisKind::M:
      return "M";
  }
  return "?";
}

TableValidationError::TableValidationError(std::string k, std::string y_, std::string w_, const std::string& detail)
    : InputError(k + " violated at (y, w) = (" + y_ + ", " + w_ + ")" + (detail.empty() ? "" : ": " + detail)),
      kind(std::move(k)),
      y(std::move(y_)),
      w(std::move(w_)) {}

PCanonicalTable PCanonicalTable::builtin(std::shared_ptr<const ParabolicModules> P) {
  PCanonicalTable t;
  t.P_ = std::move(P);
  t.builtin_ = true;
  t.rehash();
  return t;
}

PCanonicalTable PCanonicalTable::unchecked(std::shared_ptr<const ParabolicModules> P, BasisKind basis,
                                           std::optional<long> p, std::map<ExtElem, Column> cols) {
  PCanonicalTable t;
  t.P_ = std::move(P);
  t.basis_ = basis;
  t.p_ = p;
  t.cols_ = std::move(cols);
  t.rehash();
  return t;
}

PCanonicalTable PCanonicalTable::from_columns(std::shared_ptr<const ParabolicModules> P, BasisKind basis,
                                              std::optional<long> p, std::map<ExtElem, Column> cols) {
  PCanonicalTable t = unchecked(std::move(P), basis, p, std::move(cols));
  t.validate();
  return t;
}

std::string PCanonicalTable::name() const { return builtin_ ? "builtin" : "p=" + p_text() + "/" + to_string(basis_); }

bool PCanonicalTable::has_column(const ExtElem& w) const {
  if (builtin_ || cols_.count(w)) return true;
  const auto& W = P_->weyl();
  return !W.in_W(w) && cols_.count(W.omega_decompose_right(w).first);
}

std::vector<ExtElem> PCanonicalTable::keys() const {
  std::vector<ExtElem> k;
  for (const auto& kv : cols_) k.push_back(kv.first);
  P_->weyl().sort_canonical(k);
  return k;
}

template <class Tag>
LinComb<Tag> PCanonicalTable::column(const ExtElem& w) const {
  const auto& W = P_->weyl();
  LinComb<Tag> r;
  if (auto it = cols_.find(w); it != cols_.end()) {
    for (const auto& [y, f] : it->second) r.add(y, f);
    return r;
  }
  if (!W.in_W(w)) {
    auto [base, om] = W.omega_decompose_right(w);
    if (auto it = cols_.find(base); it != cols_.end()) {
      for (const auto& [y, f] : it->second) r.add(W.mul(y, om), f);
      return r;
    }
  }
  throw InputError("table " + name() + " has no column for " + W.to_text(w));
}

HeckeElem PCanonicalTable::column_H(const ExtElem& w) const {
  if (builtin_) return *P_->hecke().kl_basis(w);
  if (basis_ != BasisKind::H) throw InputError("table has no H-columns");
  return column<HTag>(w);
}

AsphElem PCanonicalTable::column_N(const ExtElem& w) const {
  if (builtin_) return P_->kl_N(w);
  if (basis_ != BasisKind::N) throw InputError("table has no N-columns");
  return column<NTag>(w);
}

SphElem PCanonicalTable::column_M(const ExtElem& w) const {
  if (builtin_) return P_->kl_M(w);
  if (basis_ != BasisKind::M) throw InputError("table has no M-columns");
  return column<MTag>(w);
}

namespace {

// Coefficients of c in a KL basis, by peeling off the top term; stops at the
// first negative coefficient and returns its label.
template <class Tag, class KL>
std::optional<std::pair<ExtElem, LaurentPoly>> first_negative(const ExtendedWeyl& W, LinComb<Tag> c, KL kl) {
  while (!c.is_zero()) {
    const ExtElem y = c.top(W);
    const LaurentPoly a = c.coeff(y);
    if (!a.nonnegative()) return std::pair{y, a};
    c.add_scaled(kl(y), -a);
  }
  return std::nullopt;
}

template <class Tag, class Bar, class KL>
void validate_column(const ExtendedWeyl& W, const ExtElem& w, const LinComb<Tag>& c, Bar bar, KL kl) {
  if (!c.coeff(w).is_one())
    throw TableValidationError("unitriangularity", W.to_text(w), W.to_text(w),
                               "diagonal entry is " + c.coeff(w).to_string() + ", expected 1");
  for (const auto& [y, f] : c.sorted(W))
    if (y != w && W.bruhat(y, w) != Order::Less)
      throw TableValidationError("unitriangularity", W.to_text(y), W.to_text(w), "entry outside the Bruhat interval");
  const LinComb<Tag> b = bar(c);
  if (b != c) {
    const ExtElem y = (b - c).sorted(W).front().first;
    throw TableValidationError("self-duality", W.to_text(y), W.to_text(w),
                               "coefficient " + c.coeff(y).to_string() + " but its dual gives " + b.coeff(y).to_string());
  }
  if (auto neg = first_negative(W, c, kl))
    throw TableValidationError("KL-positivity", W.to_text(neg->first), W.to_text(w),
                               "coefficient " + neg->second.to_string() + " in the KL basis");
}

}  // namespace

void PCanonicalTable::validate() const {
  if (builtin_) return;
  const auto& W = P_->weyl();
  const auto& H = P_->hecke();
  for (const auto& w : keys()) {
    switch (basis_) {
      case BasisKind::H:
        validate_column(
            W, w, column<HTag>(w), [&](const HeckeElem& c) { return H.bar(c); },
            [&](const ExtElem& y) { return *H.kl_basis(y); });
        break;
      case BasisKind::N:
        validate_column(
            W, w, column<NTag>(w), [&](const AsphElem& c) { return P_->asph_bar(c); },
            [&](const ExtElem& y) { return P_->kl_N(y); });
        break;
      case BasisKind::M:
        validate_column(
            W, w, column<MTag>(w), [&](const SphElem& c) { return P_->sph_bar(c); },
            [&](const ExtElem& y) { return P_->kl_M(y); });
        break;
    }
  }
}

void PCanonicalTable::rehash() {
  if (builtin_) {
    hash_ = fnv1a("builtin-kl:" + P_->weyl().datum().hash_hex());
    return;
  }
  hash_ = fnv1a(to_json());
}

std::string PCanonicalTable::hash_hex() const { return hex64(hash_); }

std::string PCanonicalTable::to_json() const {
  const auto& W = P_->weyl();
  json j;
  j["schema"] = 1;
  j["datum"] = {{"label", W.datum().label()}, {"hash", W.datum().hash_hex()}};
  if (p_)
    j["p"] = *p_;
  else
    j["p"] = "infinity";
  j["basis"] = to_string(basis_);
  json entries = json::object();
  for (const auto& w : keys()) {
    json col = json::object();
    for (const auto& [y, f] : column<HTag>(w).sorted(W)) {
      json poly = json::array();
      for (const auto& [e, c] : f.to_pairs()) {
        // small coefficients as numbers, large ones as decimal strings
        if (c.size() < 16)
          poly.push_back({e, std::stoll(c)});
        else
          poly.push_back({e, c});
      }
      col[W.to_text(y)] = poly;
    }
    entries[W.to_text(w)] = col;
  }
  j["entries"] = entries;
  return j.dump(1);
}

PCanonicalTable PCanonicalTable::from_json_text(const std::string& text, std::shared_ptr<const ParabolicModules> P) {
  const auto& W = P->weyl();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("table is not valid JSON: ") + e.what());
  }
  auto fail = [](const std::string& m) { throw InputError("table schema: " + m); };
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("schema") || j["schema"] != 1) fail("\"schema\" must be 1");
  if (!j.contains("datum") || !j["datum"].is_object()) fail("\"datum\" must be an object with label and hash");
  const auto& d = j["datum"];
  if (!d.contains("hash") || !d["hash"].is_string()) fail("\"datum.hash\" missing");
  if (d["hash"].get<std::string>() != W.datum().hash_hex())
    fail("datum hash " + d["hash"].get<std::string>() + " does not match the selected datum " + W.datum().hash_hex());
  std::optional<long> p;
  if (!j.contains("p")) fail("\"p\" missing");
  if (j["p"].is_string()) {
    if (j["p"] != "infinity") fail("\"p\" must be an integer or \"infinity\"");
  } else if (j["p"].is_number_integer()) {
    p = j["p"].get<long>();
    if (*p < 2) fail("\"p\" must be at least 2");
  } else {
    fail("\"p\" must be an integer or \"infinity\"");
  }
  if (!j.contains("basis") || !j["basis"].is_string()) fail("\"basis\" missing");
  const std::string b = j["basis"];
  BasisKind basis;
  if (b == "H")
    basis = BasisKind::H;
  else if (b == "N")
    basis = BasisKind::N;
  else if (b == "M")
    basis = BasisKind::M;
  else
    fail("\"basis\" must be H, N or M");
  if (!j.contains("entries") || !j["entries"].is_object()) fail("\"entries\" must be an object");

  auto elem = [&](const std::string& s) {
    ExtElem x = W.parse(s);
    if (basis != BasisKind::H && !W.is_fWext(x)) fail("\"" + s + "\" is not minimal in its W_f-coset");
    return x;
  };
  std::map<ExtElem, Column> cols;
  for (const auto& [wk, col] : j["entries"].items()) {
    const ExtElem w = elem(wk);
    if (!col.is_object()) fail("column " + wk + " must be an object");
    Column c;
    for (const auto& [yk, poly] : col.items()) {
      const ExtElem y = elem(yk);
      if (!poly.is_array()) fail("entry (" + yk + ", " + wk + ") must be a list of [exp, coeff] pairs");
      std::vector<LaurentPoly::Term> terms;
      for (const auto& t : poly) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
          fail("entry (" + yk + ", " + wk + ") has a malformed term");
        Integer c0;
        if (t[1].is_number_integer())
          c0 = Integer(t[1].get<long long>());
        else if (t[1].is_string())
          try {
            c0 = Integer(t[1].get<std::string>());
          } catch (const std::exception&) {
            fail("entry (" + yk + ", " + wk + ") has a malformed coefficient");
          }
        else
          fail("entry (" + yk + ", " + wk + ") has a malformed coefficient");
        terms.emplace_back(t[0].get<int>(), c0);
      }
      c.emplace_back(y, LaurentPoly::from_terms(std::move(terms)));
    }
    if (!cols.emplace(w, std::move(c)).second) fail("duplicate column " + wk);
  }
  return from_columns(std::move(P), basis, p, std::move(cols));
}

PCanonicalTable PCanonicalTable::load(const std::filesystem::path& path, std::shared_ptr<const ParabolicModules> P) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), std::move(P));
}

}  // namespace affkl
