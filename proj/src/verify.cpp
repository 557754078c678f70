#include "affkl/verify.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace affkl {

using json = nlohmann::json;

Session Session::make(std::shared_ptr<const RootDatum> d, const std::filesystem::path& cache_dir) {
  Session s;
  s.datum = std::move(d);
  s.weyl = std::make_shared<ExtendedWeyl>(s.datum);
  auto h = std::make_shared<HeckeAlgebra>(s.weyl);
  if (!cache_dir.empty()) h->load_cache(cache_dir);
  s.hecke = h;
  s.modules = std::make_shared<ParabolicModules>(s.hecke);
  s.periodic = std::make_shared<PeriodicModule>(s.modules);
  s.characters = std::make_shared<Characters>(s.periodic);
  return s;
}

Session Session::from_type(const std::string& type, const std::filesystem::path& cache_dir) {
  std::string t = type;
  std::erase(t, '~');
  return make(RootDatum::from_type(t), cache_dir);
}

Session Session::from_file(const std::filesystem::path& path, const std::filesystem::path& cache_dir) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open datum file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return make(RootDatum::from_json_text(ss.str()), cache_dir);
}

PCanonicalTable load_table(const Session& s, const std::string& source) {
  if (source.empty() || source == "builtin") return PCanonicalTable::builtin(s.modules);
  return PCanonicalTable::load(source, s.modules);
}

int default_max_len(const Session& s) {
  const auto n = s.weyl->finite().size();
  return n <= 6 ? 8 : n <= 12 ? 6 : 4;
}

int default_window(const Session& s) { return s.weyl->finite().size() <= 2 ? 10 : 6; }

json report_meta(const Session& s, const PCanonicalTable* t) {
  json m;
  m["tool"] = "affkl";
  m["version"] = kToolVersion;
  m["schema"] = kReportSchema;
  m["datum"] = {{"label", s.datum->label()}, {"hash", s.datum->hash_hex()}};
  if (t)
    m["table"] = {{"name", t->name()}, {"hash", t->hash_hex()}, {"p", t->p_text()}, {"basis", to_string(t->basis())}};
  return m;
}

namespace {

constexpr std::size_t kMaxFailures = 25;

struct Check {
  std::string name;
  std::size_t passed = 0, failed = 0, skipped = 0;
  json failures = json::array();
  json rows;
  json info;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Check(std::string n) : name(std::move(n)) {}
  void pass() { ++passed; }
  void fail(json detail) {
    ++failed;
    if (failures.size() < kMaxFailures) failures.push_back(std::move(detail));
  }
  void record(bool ok, json detail) { ok ? pass() : fail(std::move(detail)); }
  json to_json(bool timing) const {
    json j;
    j["name"] = name;
    j["status"] = failed ? "fail" : "pass";
    j["passed"] = passed;
    j["failed"] = failed;
    if (skipped) j["skipped"] = skipped;
    if (!failures.empty()) j["failures"] = failures;
    if (!rows.is_null()) j["rows"] = rows;
    if (!info.is_null()) j["info"] = info;
    if (timing)
      j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return j;
  }
};

template <class Tag>
json diff_json(const LinComb<Tag>& a, const LinComb<Tag>& b, const ExtendedWeyl& W) {
  json d = json::array();
  for (const auto& [x, f] : (a - b).sorted(W))
    d.push_back({{"key", W.to_text(x)}, {"lhs", a.coeff(x).to_string()}, {"rhs", b.coeff(x).to_string()}});
  return d;
}

std::vector<ExtElem> fWext_window(const Session& s, int L) {
  const auto& W = *s.weyl;
  if (W.omega_finite()) return W.enumerate_fWext(L);
  std::vector<ExtElem> r;
  for (const auto& x : W.enumerate_W(L))
    if (W.is_fWext(x)) r.push_back(x);
  return r;
}

std::vector<ExtElem> Wext_window(const Session& s, int L) {
  return s.weyl->omega_finite() ? s.weyl->enumerate_Wext(L) : s.weyl->enumerate_W(L);
}

Weight random_weight(const RootDatum& d, std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> u(-r, r);
  Weight w(d.lattice_rank());
  for (int i = 0; i < d.lattice_rank(); ++i) w[i] = u(rng);
  return w;
}

json suite_lemma_rho(const Session& s, const VerifyOptions& o) {
  const auto& W = *s.weyl;
  Check c("lemma_rho");
  std::vector<ExtElem> oms = W.omega_finite() ? W.omegas() : std::vector<ExtElem>{W.identity()};
  const auto reps = parallel_map(oms.size(), o.jobs, [&](std::size_t i) { return s.modules->lemma_rho(oms[i]); });
  c.rows = json::array();
  for (const auto& r : reps) {
    json row = {{"omega", W.to_text(r.omega)},
                {"in_fWext", r.in_fWext},
                {"sum_formula", r.sum_formula},
                {"absorption", r.absorption},
                {"terms", r.terms},
                {"status", r.ok() ? "pass" : "fail"}};
    c.rows.push_back(row);
    c.record(r.ok(), row);
  }
  return json::array({c.to_json(o.timing)});
}

json suite_main(const Session& s, const PCanonicalTable& t, const VerifyOptions& o) {
  const auto& W = *s.weyl;
  const auto& P = *s.modules;
  const auto& H = *s.hecke;
  const int L = o.max_len >= 0 ? o.max_len : default_max_len(s);
  json out = json::array();
  const auto fw = fWext_window(s, L);

  {
    Check c("phi_kl");
    c.info = {{"max_len", L}};
    const auto res = parallel_map(fw.size(), o.jobs, [&](std::size_t i) { return verify_main(t, fw[i]); });
    c.rows = json::array();
    for (const auto& m : res) {
      json row = {{"w", W.to_text(m.w)}, {"status", m.ok ? "pass" : "fail"}};
      if (!m.ok) {
        row["lhs"] = to_text(m.lhs, W);
        row["rhs"] = to_text(m.rhs, W);
        row["diff"] = diff_json(m.lhs, m.rhs, W);
      }
      c.rows.push_back(row);
      c.record(m.ok, row);
    }
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("xi_case_formula");
    const auto all = Wext_window(s, L);
    const auto res = parallel_map(all.size(), o.jobs, [&](std::size_t i) {
      const ExtElem& w = all[i];
      const AsphElem x = P.xi(*H.kl_basis(w));
      return W.is_fWext(w) ? x == P.kl_N_recursive(w) : x.is_zero();
    });
    for (std::size_t i = 0; i < all.size(); ++i) c.record(res[i], {{"w", W.to_text(all[i])}});
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("zeta_kl");
    const auto res = parallel_map(fw.size(), o.jobs, [&](std::size_t i) {
      return P.zeta(P.kl_M_recursive(fw[i])) == *H.kl_basis(W.mul(W.longest_finite(), fw[i]));
    });
    for (std::size_t i = 0; i < fw.size(); ++i) c.record(res[i], {{"w", W.to_text(fw[i])}});
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("zeta_standard");
    const auto& F = W.finite();
    const int lf = F.length(F.longest());
    for (const auto& w : fw) {
      HeckeElem expect;
      for (std::uint32_t z = 0; z < F.size(); ++z)
        expect.add(W.mul(W.finite_elem(z), w), LaurentPoly::monomial(lf - F.length(z)));
      c.record(P.zeta(SphElem::basis(w)) == expect, {{"w", W.to_text(w)}});
    }
    out.push_back(c.to_json(o.timing));
  }
  return out;
}

json suite_periodic(const Session& s, const PCanonicalTable& t, const VerifyOptions& o) {
  const auto& W = *s.weyl;
  const auto& M = *s.periodic;
  const auto& al = M.alcoves();
  const auto& d = *s.datum;
  const int L = o.window >= 0 ? o.window : default_window(s);
  std::vector<ExtElem> window;
  for (const auto& a : al.window(L)) window.push_back(a.elem);
  json out = json::array();
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);

  {
    Check c("division_exact");
    c.info = {{"window", L}, {"alcoves", window.size()}};
    const auto res = parallel_map(window.size(), o.jobs, [&](std::size_t i) -> int {
      try {
        M.p_canonical_P(t, window[i]);
        return 1;
      } catch (const ConsistencyError&) {
        return 0;
      } catch (const InputError&) {
        return -1;  // table gap
      }
    });
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (res[i] < 0)
        ++c.skipped;
      else
        c.record(res[i] == 1, {{"alcove", W.to_text(window[i])}});
    }
    out.push_back(c.to_json(o.timing));
  }

  struct Trans {
    ExtElem A;
    Weight mu;
  };
  std::vector<Trans> tr;
  for (int k = 0; k < o.samples; ++k) {
    const ExtElem A = window[pick(rng)];
    tr.push_back({A, random_weight(d, rng, 3)});
  }
  auto shifted = [&](const Trans& x) { return al.normalize(W.mul(W.translation(x.mu), x.A)); };
  {
    Check c("translation_P");
    const auto res = parallel_map(tr.size(), o.jobs, [&](std::size_t i) {
      return M.canonical_P(shifted(tr[i])) == M.translate(M.canonical_P(tr[i].A), tr[i].mu);
    });
    for (std::size_t i = 0; i < tr.size(); ++i)
      c.record(res[i], {{"alcove", W.to_text(tr[i].A)}, {"mu", tr[i].mu.to_string()}});
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("translation_pP");
    const auto res = parallel_map(tr.size(), o.jobs, [&](std::size_t i) -> int {
      try {
        return M.p_canonical_P(t, shifted(tr[i])) == M.translate(M.p_canonical_P(t, tr[i].A), tr[i].mu) ? 1 : 0;
      } catch (const InputError&) {
        return -1;
      }
    });
    for (std::size_t i = 0; i < tr.size(); ++i) {
      if (res[i] < 0)
        ++c.skipped;
      else
        c.record(res[i] == 1, {{"alcove", W.to_text(tr[i].A)}, {"mu", tr[i].mu.to_string()}});
    }
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("trans_action");
    struct Triple {
      PeriodicElem R;
      HeckeElem h;
      Weight mu;
      std::string text;
    };
    std::vector<Triple> tri;
    std::uniform_int_distribution<int> nterms(1, 5), wl(1, 4), gen(0, W.num_generators() - 1), coef(-3, 3);
    for (int k = 0; k < o.samples; ++k) {
      Triple x;
      const int n = nterms(rng);
      for (int j = 0; j < n; ++j) {
        const ExtElem A = window[pick(rng)];
        x.R.add(A, LaurentPoly::monomial(coef(rng)) * LaurentPoly(static_cast<long>(coef(rng) | 1)));
      }
      x.h = s.hecke->standard(W.identity());
      const int len = wl(rng);
      std::string word;
      for (int j = 0; j < len; ++j) {
        const int g = gen(rng);
        x.h = s.hecke->mul_right_gen(x.h, g);
        word += (word.empty() ? "" : " ") + W.generator_name(g);
      }
      x.mu = random_weight(d, rng, 2);
      x.text = word;
      tri.push_back(std::move(x));
    }
    const auto res = parallel_map(tri.size(), o.jobs, [&](std::size_t i) {
      const auto& x = tri[i];
      return M.translate(M.act(x.R, x.h), x.mu) == M.act(M.translate(x.R, x.mu), M.tau(x.mu, x.h));
    });
    for (std::size_t i = 0; i < tri.size(); ++i)
      c.record(res[i], {{"R", to_text(tri[i].R, W)}, {"word", tri[i].text}, {"mu", tri[i].mu.to_string()}});
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("positivity");
    const auto res = parallel_map(window.size(), o.jobs, [&](std::size_t i) -> std::optional<PositivityReport> {
      try {
        return M.positivity_check(t, {window[i]});
      } catch (const InputError&) {
        return std::nullopt;
      }
    });
    std::size_t offdiag = 0;
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (!res[i]) {
        ++c.skipped;
        continue;
      }
      offdiag += res[i]->entries.size();
      if (res[i]->ok()) {
        c.pass();
        continue;
      }
      for (const auto& e : res[i]->negatives)
        c.fail({{"A", W.to_text(e.A)}, {"B", W.to_text(e.B)}, {"coeff", e.coeff.to_string()}});
    }
    c.info = {{"off_diagonal_terms", offdiag}};
    out.push_back(c.to_json(o.timing));
  }
  return out;
}

json suite_orders(const Session& s, const VerifyOptions& o) {
  const auto& W = *s.weyl;
  const auto& al = s.periodic->alcoves();
  const auto& d = *s.datum;
  const int L = o.max_len >= 0 ? o.max_len : 10;
  json out = json::array();
  std::mt19937_64 rng(o.seed + 1);

  {
    // breadth-first search in the Cayley graph against the length formula
    Check c("length_formula");
    c.info = {{"max_len", L}};
    std::unordered_map<ExtElem, int, ExtElemHash> dist{{W.identity(), 0}};
    std::vector<ExtElem> layer{W.identity()};
    for (int k = 0; k < L; ++k) {
      std::vector<ExtElem> next;
      for (const auto& x : layer)
        for (int g = 0; g < W.num_generators(); ++g) {
          const ExtElem y = W.right_gen(x, g);
          if (dist.emplace(y, k + 1).second) next.push_back(y);
        }
      layer = std::move(next);
    }
    std::vector<ExtElem> all;
    for (const auto& kv : dist) all.push_back(kv.first);
    W.sort_canonical(all);
    for (const auto& x : all) {
      const int l = W.length(x);
      c.record(l == dist[x], {{"x", W.to_text(x)}, {"formula", l}, {"bfs", dist[x]}});
    }
    c.info["elements"] = all.size();
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("generic_order_dominant");
    std::vector<ExtElem> dom;
    for (const auto& x : W.enumerate_W(std::min(L, 6)))
      if (W.is_fWext(x)) dom.push_back(x);
    for (const auto& x : dom)
      for (const auto& y : dom) {
        const Order g = al.generic_order(al.from_weyl(x), al.from_weyl(y));
        const Order b = W.bruhat(x, y);
        c.record(g == b, {{"x", W.to_text(x)}, {"y", W.to_text(y)}, {"generic", to_string(g)}, {"bruhat", to_string(b)}});
      }
    out.push_back(c.to_json(o.timing));
  }
  const auto win = al.window(std::min(L, 6));
  {
    Check c("generic_order_translation");
    std::uniform_int_distribution<std::size_t> pick(0, win.size() - 1);
    for (int k = 0; k < o.samples; ++k) {
      const Alcove a = win[pick(rng)], b = win[pick(rng)];
      const Weight mu = random_weight(d, rng, 3);
      const Order g0 = al.generic_order(a, b);
      const Order g1 = al.generic_order(al.translate(a, mu), al.translate(b, mu));
      c.record(g0 == g1, {{"A", W.to_text(a.elem)}, {"B", W.to_text(b.elem)}, {"mu", mu.to_string()}});
    }
    out.push_back(c.to_json(o.timing));
  }
  {
    Check c("hat_check");
    for (const auto& a : win) {
      const Alcove h = al.hat(a);
      const bool ok = al.check(h) == a && al.box_rep_above(h) == al.box_rep_below(a);
      c.record(ok, {{"A", W.to_text(a.elem)}});
    }
    out.push_back(c.to_json(o.timing));
  }
  if (d.semisimple()) {
    Check c("complexity_bounds");
    const ComplexityBounds b = complexity_bounds(d);
    const int lf = W.length(W.longest_finite());
    const int lo = W.length(W.translation(d.two_rho())) / 2;  // l(t_rho) = 2<rho^vee, rho>
    const bool ok = b.lo == lo && b.hi == 2 * lo - lf && b.improved == lo - lf;
    c.info = {{"lo", b.lo}, {"hi", b.hi}, {"improved", b.improved}, {"l_t_rho", lo}, {"l_wf", lf}};
    c.record(ok, c.info);
    out.push_back(c.to_json(o.timing));
  }
  return out;
}

}  // namespace

json run_suite(const std::string& suite, const Session& s, const PCanonicalTable& t, const VerifyOptions& o) {
  json r = report_meta(s, &t);
  r["suite"] = suite;
  const auto start = std::chrono::steady_clock::now();
  auto one = [&](const std::string& name) -> json {
    if (name == "lemma-rho") return suite_lemma_rho(s, o);
    if (name == "main") return suite_main(s, t, o);
    if (name == "periodic") return suite_periodic(s, t, o);
    if (name == "orders") return suite_orders(s, o);
    throw InputError("unknown suite '" + name + "' (lemma-rho, main, periodic, orders, all)");
  };
  if (suite == "all") {
    json parts = json::array();
    for (const char* name : {"lemma-rho", "main", "periodic", "orders"}) {
      json p = {{"suite", name}, {"checks", one(name)}};
      parts.push_back(p);
    }
    r["suites"] = parts;
  } else {
    r["suites"] = json::array({{{"suite", suite}, {"checks", one(suite)}}});
  }
  bool ok = true;
  for (const auto& p : r["suites"])
    for (const auto& c : p["checks"]) ok = ok && c["status"] == "pass";
  r["status"] = ok ? "pass" : "fail";
  if (o.timing) r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool report_passed(const json& report) { return report.value("status", "fail") == "pass"; }

}  // namespace affkl
