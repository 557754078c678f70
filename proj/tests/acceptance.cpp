// One PASS/FAIL line per acceptance criterion. argv[1] is the path of the affkl CLI.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <unistd.h>

#include "affkl/verify.hpp"

using namespace affkl;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

const json& checks_of(const json& report, const std::string& suite) {
  for (const auto& p : report["suites"])
    if (p["suite"] == suite) return p["checks"];
  throw std::runtime_error("suite missing: " + suite);
}

const json* find_check(const json& report, const std::string& suite, const std::string& name) {
  for (const auto& c : checks_of(report, suite))
    if (c["name"] == name) return &c;
  return nullptr;
}

// 1. length formula against breadth-first search in the Cayley graph
Outcome length_formula() {
  Outcome o;
  std::size_t n = 0;
  for (const char* t : {"A1", "A2", "C2"}) {
    const ExtendedWeyl W(RootDatum::from_type(t));
    std::map<ExtElem, int> dist{{W.identity(), 0}};
    std::vector<ExtElem> layer{W.identity()};
    for (int k = 1; k <= 10; ++k) {
      std::vector<ExtElem> next;
      for (const auto& x : layer)
        for (int g = 0; g < W.num_generators(); ++g) {
          const ExtElem y = W.mul(x, W.generator(g));
          if (dist.emplace(y, k).second) next.push_back(y);
        }
      layer = std::move(next);
    }
    for (const auto& [x, l] : dist) {
      o.require(W.length(x) == l, std::string(t) + ": length mismatch at " + W.to_text(x));
      ++n;
    }
    o.require(W.enumerate_W(10).size() == dist.size(), std::string(t) + ": enumeration size");
  }
  o.note = o.ok ? std::to_string(n) + " elements" : o.note;
  return o;
}

// 2. infinite dihedral KL basis against a triangular bar-invariance solve and the all-ones closed form
Outcome dihedral_oracle() {
  Outcome o;
  auto W = std::make_shared<ExtendedWeyl>(RootDatum::from_type("A1"));
  HeckeAlgebra H(W);
  const auto elems = W->enumerate_W(14);
  std::map<ExtElem, HeckeElem> bars;
  for (const auto& z : elems) bars.emplace(z, H.bar_standard(z));
  for (const auto& w : elems) {
    const int lw = W->length(w);
    std::vector<ExtElem> below;
    for (const auto& y : elems)
      if (W->length(y) < lw) below.push_back(y);  // Bruhat interval in the infinite dihedral group
    std::reverse(below.begin(), below.end());
    std::map<ExtElem, LaurentPoly> p{{w, LaurentPoly(1)}};
    for (const auto& y : below) {
      // p_y - bar(p_y) = sum_{z > y} bar(p_z) R_{y,z}
      LaurentPoly q;
      for (const auto& [z, pz] : p) q += pz.bar() * bars.at(z).coeff(y);
      LaurentPoly py;
      for (const auto& [e, c] : q.terms())
        if (e > 0) py += LaurentPoly::monomial(e, c);
      o.require(py - py.bar() == q, "no bar-invariant solution at " + W->to_text(y));
      p[y] = py;
    }
    HeckeElem solved, closed;
    for (const auto& [y, f] : p) solved.add(y, f);
    for (const auto& y : elems)
      if (y == w || W->length(y) < lw) closed.add(y, LaurentPoly::monomial(lw - W->length(y)));
    const HeckeElem got = *H.kl_basis(w);
    o.require(got == solved, "solve differs at " + W->to_text(w));
    o.require(got == closed, "closed form differs at " + W->to_text(w));
  }
  if (o.ok) o.note = std::to_string(elems.size()) + " elements";
  return o;
}

Outcome lemma_rho() {
  Outcome o;
  int n = 0;
  for (const char* t : {"A1", "A2", "C2"}) {
    const Session s = Session::from_type(t);
    for (const auto& om : s.weyl->omegas()) {
      const LemmaRhoReport r = s.modules->lemma_rho(om);
      o.require(r.ok(), std::string(t) + ": fails at omega " + s.weyl->to_text(om));
      ++n;
    }
  }
  if (o.ok) o.note = std::to_string(n) + " omegas";
  return o;
}

struct MainRuns {
  std::map<std::string, json> reports;
};

MainRuns run_main() {
  MainRuns m;
  const std::map<std::string, int> windows{{"A1", 8}, {"A2", 8}, {"C2", 6}};
  for (const auto& [t, L] : windows) {
    const Session s = Session::from_type(t);
    VerifyOptions vo;
    vo.max_len = L;
    vo.jobs = std::max(1u, std::thread::hardware_concurrency());
    m.reports[t] = run_suite("main", s, load_table(s, "builtin"), vo);
  }
  return m;
}

Outcome phi_kl(const MainRuns& m) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [t, r] : m.reports) {
    const json* c = find_check(r, "main", "phi_kl");
    o.require(c && (*c)["status"] == "pass", t + ": phi_kl");
    if (c) n += (*c)["passed"].get<std::size_t>();
  }
  if (o.ok) o.note = std::to_string(n) + " elements w";
  return o;
}

Outcome xi_zeta(const MainRuns& m) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [t, r] : m.reports)
    for (const char* name : {"xi_case_formula", "zeta_kl", "zeta_standard"}) {
      const json* c = find_check(r, "main", name);
      o.require(c && (*c)["status"] == "pass" && (*c)["passed"].get<int>() > 0, t + ": " + name);
      if (c) n += (*c)["passed"].get<std::size_t>();
    }
  if (o.ok) o.note = std::to_string(n) + " checks";
  return o;
}

Outcome periodic_laws() {
  Outcome o;
  for (const auto& [t, L] : std::map<std::string, int>{{"A1", 10}, {"C2", 6}}) {
    const Session s = Session::from_type(t);
    VerifyOptions vo;
    vo.window = L;
    vo.jobs = std::max(1u, std::thread::hardware_concurrency());
    const json r = run_suite("periodic", s, load_table(s, "builtin"), vo);
    const std::size_t alcoves = s.periodic->alcoves().window(L).size();
    for (const char* name : {"division_exact", "translation_P", "translation_pP", "trans_action", "positivity"}) {
      const json* c = find_check(r, "periodic", name);
      o.require(c && (*c)["status"] == "pass" && !c->contains("skipped"), t + ": " + name);
      if (!c) continue;
      const std::size_t want = std::string(name) == "division_exact" || std::string(name) == "positivity" ? alcoves : 100;
      o.require((*c)["passed"].get<std::size_t>() == want, t + ": " + name + " sample count");
    }
  }
  if (o.ok) o.note = "A1 window 10, C2 window 6, 100 samples each";
  return o;
}

Outcome q_routes() {
  Outcome o;
  std::string note;
  for (const auto& [t, L, need] : std::vector<std::tuple<std::string, int, std::size_t>>{{"A1", 12, 20}, {"C2", 4, 12}}) {
    const Session s = Session::from_type(t);
    const auto& W = *s.weyl;
    const auto& al = s.periodic->alcoves();
    const PCanonicalTable tb = load_table(s, "builtin");
    std::size_t n = 0, cols = 0;
    std::set<ExtElem> used;
    for (const auto& a : al.window(L)) {
      o.require(s.characters->q_of_alcove(tb, a.elem) == s.characters->q_via_coset_sum(tb, a.elem),
                t + ": routes differ at " + W.to_text(a.elem));
      const Weight mu = al.box_rep_below(a);
      const ExtElem x = al.normalize(W.mul(W.translation(-mu), a.elem));
      used.insert(W.mul(W.longest_finite(), x));
      ++n;
    }
    for (const auto& w : used) {
      o.require(s.characters->coset_constancy(tb, w), t + ": coset constancy fails for " + W.to_text(w));
      ++cols;
    }
    o.require(n >= need, t + ": too few alcoves");
    note += t + " " + std::to_string(n) + " alcoves / " + std::to_string(cols) + " columns; ";
  }
  if (o.ok) o.note = note;
  return o;
}

Outcome sp4_numbers() {
  Outcome o;
  const auto d = RootDatum::from_type("C2");
  const ExtendedWeyl W(d);
  const ComplexityBounds b = complexity_bounds(*d);
  o.require(b.lo == 7 && b.hi == 10 && b.improved == 3, "bounds are not (7, 10, 3)");
  std::int64_t heights = 0;
  for (int k = 0; k < d->num_positive_roots(); ++k) heights += d->root_height(k);
  const int lf = W.length(W.longest_finite());
  o.require(b.lo == heights, "lo differs from the sum of root heights");
  o.require(2 * b.lo == W.length(W.translation(d->two_rho())), "lo differs from l(t_rho)");
  o.require(b.hi == 2 * heights - lf && b.improved == heights - lf, "hi / improved inconsistent");
  if (o.ok) o.note = std::to_string(b.lo) + " / " + std::to_string(b.hi) + " / " + std::to_string(b.improved);
  return o;
}

Outcome sl2_characters() {
  Outcome o;
  const Session s = Session::from_type("A1");
  const PCanonicalTable tb = load_table(s, "builtin");
  for (std::int64_t p : {5, 7})
    for (std::int64_t l = 0; l < p; ++l) {
      FormalCharacter expect;
      for (std::int64_t m = l; m >= 0; m -= 2) expect.add(Weight{m}, 1);
      o.require(s.characters->simple_character(tb, Weight{l}, p) == expect,
                "L(" + std::to_string(l) + ") at p = " + std::to_string(p));
    }
  std::size_t masses = 0;
  for (const char* t : {"A1", "A2", "C2", "G2"}) {
    const Session r = Session::from_type(t);
    const int rk = r.datum->lattice_rank();
    Integer expect = 1;
    for (std::int64_t p : {5, 7}) {
      expect = 1;
      for (int k = 0; k < r.datum->num_positive_roots(); ++k) expect *= p;
      for (std::int64_t a = -2; a <= 2 * p; a += 3) {
        Weight lam(rk);
        for (int i = 0; i < rk; ++i) lam[i] = a + i;
        o.require(r.characters->baby_verma_character(lam, p).mass() == expect,
                  std::string(t) + ": baby Verma mass at " + lam.to_string());
        ++masses;
      }
    }
  }
  if (o.ok) o.note = "12 simple characters, " + std::to_string(masses) + " baby Verma masses";
  return o;
}

Outcome steinberg() {
  Outcome o;
  for (const auto& [t, p] : std::vector<std::pair<std::string, std::int64_t>>{{"A1", 5}, {"A2", 5}, {"C2", 5}, {"G2", 7}}) {
    const Session s = Session::from_type(t);
    const Weight st = (p - 1) * s.datum->varsigma();
    const ProjectiveRow r = s.characters->row_for_weight(load_table(s, "builtin"), st, p);
    o.require(r.steinberg, t + ": not recognised as Steinberg");
    o.require(r.entries.size() == 1 && r.entries[0].first == st && r.entries[0].second == 1,
              t + ": row is not the single entry Z((p-1)varsigma)");
  }
  if (o.ok) o.note = "A1, A2, C2 at p = 5; G2 at p = 7";
  return o;
}

template <class Tag>
PCanonicalTable::Column to_column(const LinComb<Tag>& c) {
  return PCanonicalTable::Column(c.terms().begin(), c.terms().end());
}

Outcome fault_injection() {
  Outcome o;
  const Session s = Session::from_type("C2");
  const auto& W = *s.weyl;
  const auto& H = *s.hecke;
  const auto tmp = std::filesystem::temp_directory_path() / ("affkl_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);

  std::map<ExtElem, PCanonicalTable::Column> good;
  for (const auto& w : W.enumerate_W(5)) good[w] = to_column(*H.kl_basis(w));
  const ExtElem w = W.enumerate_W(5).back();
  const HeckeElem col = *H.kl_basis(w);
  // first off-diagonal term in canonical order
  ExtElem y = w;
  for (const auto& [z, f] : col.sorted(W))
    if (z != w) {
      y = z;
      break;
    }

  auto load_and_catch = [&](std::map<ExtElem, PCanonicalTable::Column> cols, const std::string& file,
                            const std::string& kind, const std::string& want_y) {
    const auto path = tmp / file;
    std::ofstream(path) << PCanonicalTable::unchecked(s.modules, BasisKind::H, 3, std::move(cols)).to_json();
    try {
      PCanonicalTable::load(path, s.modules);
      o.require(false, file + " was accepted");
    } catch (const TableValidationError& e) {
      o.require(e.kind == kind, file + ": reported " + e.kind + " instead of " + kind);
      o.require(e.w == W.to_text(w), file + ": wrong column named");
      o.require(e.y == want_y, file + ": wrong row named (" + e.y + ")");
      const std::string msg = e.what();
      o.require(msg.find(W.to_text(w)) != std::string::npos, file + ": message lacks the pair");
    }
  };

  {
    auto cols = good;
    HeckeElem c = col;
    c.add(y, -2 * c.coeff(y));
    cols[w] = to_column(c);
    load_and_catch(cols, "sign_flip.json", "self-duality", W.to_text(y));
  }
  {
    auto cols = good;
    HeckeElem c = col;
    c.add(w, 1);
    cols[w] = to_column(c);
    load_and_catch(cols, "diagonal.json", "unitriangularity", W.to_text(w));
  }
  {
    // a term outside the Bruhat interval
    ExtElem out = w;
    for (const auto& z : W.enumerate_W(6))
      if (W.length(z) > W.length(w)) {
        out = z;
        break;
      }
    auto cols = good;
    HeckeElem c = col;
    c.add(out, LaurentPoly::v());
    cols[w] = to_column(c);
    load_and_catch(cols, "interval.json", "unitriangularity", W.to_text(out));
  }
  o.require(PCanonicalTable::from_json_text(PCanonicalTable::from_columns(s.modules, BasisKind::H, 3, good).to_json(),
                                            s.modules)
                .hash_hex()
                .size() == 16,
            "the untouched table is rejected");

  // positivity localizes an injected negative in the box of varsigma
  const auto& M = *s.periodic;
  const auto& al = M.alcoves();
  const Weight vs = s.datum->varsigma();
  std::vector<ExtElem> box;
  for (const auto& a : al.window(10))
    if (al.box_rep_above(a) == vs) box.push_back(a.elem);
  W.sort_canonical(box);
  auto index = [&](const ExtElem& A) {
    const auto [om, x] = W.omega_of_weight(vs);
    return W.mul(W.mul(W.mul(om, W.longest_finite()), W.translation(-vs)), A);
  };
  const ExtElem A = box.back();
  const ExtElem yA = index(A);
  std::optional<ExtElem> B;
  for (const auto& b : box)
    if (b != A && W.bruhat(index(b), yA) == Order::Less) B = b;
  o.require(B.has_value(), "no comparable alcove in the box");
  if (B) {
    const HeckeElem bad = *H.kl_basis(yA) - *H.kl_basis(index(*B));
    const PCanonicalTable faulty =
        PCanonicalTable::unchecked(s.modules, BasisKind::H, 3, std::map<ExtElem, PCanonicalTable::Column>{{yA, to_column(bad)}});
    const PositivityReport rep = M.positivity_check(faulty, {A});
    o.require(rep.negatives.size() == 1 && rep.negatives[0].A == A && rep.negatives[0].B == *B &&
                  rep.negatives[0].coeff == LaurentPoly(-1),
              "positivity did not localize the negative");
  }
  std::filesystem::remove_all(tmp);
  if (o.ok) o.note = "sign flip, diagonal, interval; negative at (A, B)";
  return o;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty() || !std::filesystem::exists(cli)) {
    o.require(false, "CLI binary not given");
    return o;
  }
  const auto tmp = std::filesystem::temp_directory_path() / ("affkl_determinism_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  const unsigned jobs = std::max(2u, std::thread::hardware_concurrency());
  auto command = [&](int k) {
    return "\"" + cli + "\" verify all --type C2 --jobs " + std::to_string(jobs) + " > \"" +
           (tmp / ("run" + std::to_string(k) + ".json")).string() + "\" 2> /dev/null";
  };
  int rc[2] = {-1, -1};
  std::thread a([&] { rc[0] = std::system(command(0).c_str()); });
  std::thread b([&] { rc[1] = std::system(command(1).c_str()); });
  a.join();
  b.join();
  auto slurp = [&](int k) {
    std::ifstream in(tmp / ("run" + std::to_string(k) + ".json"), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string r0 = slurp(0), r1 = slurp(1);
  o.require(rc[0] == 0 && rc[1] == 0, "a run did not exit with 0");
  o.require(!r0.empty() && r0 == r1, "reports differ");
  std::filesystem::remove_all(tmp);
  if (o.ok) o.note = std::to_string(r0.size()) + " identical bytes, --jobs " + std::to_string(jobs);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  std::optional<MainRuns> main_runs;
  auto mains = [&]() -> const MainRuns& {
    if (!main_runs) main_runs = run_main();
    return *main_runs;
  };
  const std::vector<Criterion> all{
      {1, "length formula vs BFS (A1, A2, C2; l <= 10)", 10, length_formula},
      {2, "infinite dihedral KL oracle (l <= 14)", 5, dihedral_oracle},
      {3, "lemma rho + A_fund (A1, A2, C2)", 30, lemma_rho},
      {4, "phi(M_w) = N_{t_varsigma w} (A1, A2 l <= 8; C2 l <= 6)", 600, [&] { return phi_kl(mains()); }},
      {5, "xi / zeta laws on the same windows", 600, [&] { return xi_zeta(mains()); }},
      {6, "periodic module laws", 600, periodic_laws},
      {7, "q_of_alcove = q_via_coset_sum, coset constancy", 600, q_routes},
      {8, "complexity bounds for C2 = (7, 10, 3)", 10, sp4_numbers},
      {9, "SL2 simple characters (p = 5, 7) and baby Verma masses", 10, sl2_characters},
      {10, "Steinberg row is a single entry", 60, steinberg},
      {11, "fault injection: load rejects, positivity localizes", 60, fault_injection},
      {12, "two parallel `verify all --type C2` runs are byte-identical", 600, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget) {
      o.ok = false;
      o.note += " (over the time budget)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << timing << "]"
              << (o.note.empty() ? "" : "  " + o.note) << "\n";
    std::cout.flush();
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (all.size() - failed) << "/" << all.size() << "\n";
  return failed ? 1 : 0;
}
