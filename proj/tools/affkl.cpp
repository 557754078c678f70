#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affkl/draw.hpp"
#include "affkl/verify.hpp"

using namespace affkl;
using json = nlohmann::json;

namespace {

struct RunConfig {
  std::string type;
  std::string datum_file;
  std::string table = "builtin";
  int max_len = -1;
  int window = -1;
  std::string format;
  std::string cache_dir;
  unsigned jobs = 1;
  bool timing = false;

  std::string elem, alcove, weight, region = "dominant", shade;
  long p = 0;
  std::string suite, kind, cache_action;
};

std::filesystem::path cache_dir_of(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  return default_cache_dir();
}

Session open_session(const RunConfig& c) {
  if (c.type.empty() == c.datum_file.empty()) throw InputError("give exactly one of --type or --datum");
  return c.type.empty() ? Session::from_file(c.datum_file, cache_dir_of(c)) : Session::from_type(c.type, cache_dir_of(c));
}

void save_cache(const Session& s, const RunConfig& c) {
  const auto dir = cache_dir_of(c);
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  s.hecke->save_cache(dir);
}

void log_run(const Session& s, const PCanonicalTable* t) {
  std::cerr << "affkl " << kToolVersion << ": datum " << s.datum->label() << " hash " << s.datum->hash_hex();
  if (t) std::cerr << ", table " << t->name() << " hash " << t->hash_hex() << " p " << t->p_text();
  std::cerr << "\n";
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InputError("format '" + f + "' not available here (" + list + ")");
}

json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

Weight parse_weight(const Session& s, const std::string& text) {
  if (text.empty()) throw InputError("--weight is required");
  std::vector<std::int64_t> c;
  std::string inner = text;
  if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("bad weight coordinate '" + tok + "'");
    }
  }
  if (static_cast<int>(c.size()) != s.datum->lattice_rank())
    throw InputError("weight needs " + std::to_string(s.datum->lattice_rank()) + " coordinates");
  return Weight::from_vector(c);
}

ExtElem parse_elem(const Session& s, const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  return s.weyl->parse(text);
}

ExtElem parse_alcove(const Session& s, const std::string& text) {
  const ExtElem x = s.periodic->alcoves().normalize(parse_elem(s, text, "--alcove"));
  if (!s.weyl->in_W(x)) throw InputError("alcove labels must lie in W");
  return x;
}

std::int64_t require_p(const RunConfig& c) {
  if (c.p <= 1) throw InputError("--p must be a prime > 1");
  return c.p;
}

// Output of a list of (label, value) pairs in the requested format.
struct Listing {
  std::string kind;
  std::string subject;
  std::vector<std::pair<std::string, json>> rows;
  json extra = json::object();

  void emit(const Session& s, const PCanonicalTable* t, const std::string& fmt) const {
    if (fmt == "json") {
      json j = report_meta(s, t);
      j["kind"] = kind;
      if (!subject.empty()) j["subject"] = subject;
      json terms = json::array();
      for (const auto& [k, v] : rows) terms.push_back({{"key", k}, {"value", v}});
      j["terms"] = terms;
      for (const auto& [k, v] : extra.items()) j[k] = v;
      std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
      std::cout << "key,value\n";
      for (const auto& [k, v] : rows)
        std::cout << csv_quote(k) << "," << csv_quote(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      if (!subject.empty()) std::cout << kind << " " << subject << "\n";
      for (const auto& [k, v] : rows)
        std::cout << "  " << k << "  " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      for (const auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
};

template <class Tag>
Listing from_lincomb(const LinComb<Tag>& a, const ExtendedWeyl& W) {
  Listing l;
  for (const auto& [x, f] : a.sorted(W)) l.rows.emplace_back(W.to_text(x), f.to_string());
  return l;
}

Listing from_intmap(const IntMap& m, const ExtendedWeyl& W) {
  Listing l;
  for (const auto& [x, c] : m) l.rows.emplace_back(W.to_text(x), int_json(c));
  return l;
}

Listing from_character(const FormalCharacter& ch) {
  Listing l;
  for (const auto& [mu, c] : ch.mult) l.rows.emplace_back(mu.to_string(), int_json(c));
  l.extra["mass"] = int_json(ch.mass());
  return l;
}

void print_report_text(const json& r) {
  std::cout << "suite " << r["suite"].get<std::string>() << ": " << r["status"].get<std::string>() << "\n";
  std::cout << "datum " << r["datum"]["label"].get<std::string>() << " (" << r["datum"]["hash"].get<std::string>()
            << "), table " << r["table"]["name"].get<std::string>() << " (" << r["table"]["hash"].get<std::string>()
            << ")\n";
  for (const auto& part : r["suites"]) {
    for (const auto& c : part["checks"]) {
      std::cout << "  " << part["suite"].get<std::string>() << "/" << c["name"].get<std::string>() << "  "
                << c["status"].get<std::string>() << "  passed " << c["passed"] << " failed " << c["failed"];
      if (c.contains("skipped")) std::cout << " skipped " << c["skipped"];
      std::cout << "\n";
      if (c["name"] == "phi_kl" && c.contains("rows"))
        for (const auto& row : c["rows"])
          std::cout << "    " << row["status"].get<std::string>() << "  " << row["w"].get<std::string>() << "\n";
      if (c.contains("failures"))
        for (const auto& f : c["failures"]) std::cout << "    failure " << f.dump() << "\n";
    }
  }
}

int cmd_verify(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  require_format(fmt, {"json", "text"});
  Session s = open_session(c);
  const PCanonicalTable t = load_table(s, c.table);
  log_run(s, &t);
  VerifyOptions o;
  o.max_len = c.max_len;
  o.window = c.window;
  o.jobs = c.jobs;
  o.timing = c.timing;
  const json r = run_suite(c.suite, s, t, o);
  if (fmt == "json")
    std::cout << r.dump(2) << "\n";
  else
    print_report_text(r);
  save_cache(s, c);
  return report_passed(r) ? 0 : 1;
}

int cmd_compute(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "text" : c.format;
  require_format(fmt, {"json", "csv", "text"});
  Session s = open_session(c);
  const auto& W = *s.weyl;
  Listing out;
  if (c.kind == "bounds") {
    log_run(s, nullptr);
    const ComplexityBounds b = complexity_bounds(*s.datum);
    if (fmt == "text") {
      std::cout << b.lo << " / " << b.hi << " / " << b.improved << "  (lo / hi / improved)\n";
      return 0;
    }
    out.rows = {{"lo", b.lo}, {"hi", b.hi}, {"improved", b.improved}};
    out.kind = "bounds";
    out.emit(s, nullptr, fmt);
    return 0;
  }
  const PCanonicalTable t = load_table(s, c.table);
  log_run(s, &t);
  if (c.kind == "kl") {
    const ExtElem x = parse_elem(s, c.elem, "--elem");
    out = from_lincomb(p_H(t, x), W);
    out.subject = W.to_text(x);
  } else if (c.kind == "asph") {
    const ExtElem x = parse_elem(s, c.elem, "--elem");
    out = from_lincomb(p_N(t, x), W);
    out.subject = W.to_text(x);
  } else if (c.kind == "sph") {
    const ExtElem x = parse_elem(s, c.elem, "--elem");
    out = from_lincomb(p_M(t, x), W);
    out.subject = W.to_text(x);
  } else if (c.kind == "periodic") {
    const ExtElem A = parse_alcove(s, c.alcove);
    out = from_lincomb(t.is_builtin() ? s.periodic->canonical_P(A) : s.periodic->p_canonical_P(t, A), W);
    out.subject = W.to_text(A);
  } else if (c.kind == "qa") {
    const ExtElem A = parse_alcove(s, c.alcove);
    out = from_intmap(s.characters->q_of_alcove(t, A), W);
    out.subject = W.to_text(A);
  } else if (c.kind == "simplechar") {
    const Weight lambda = parse_weight(s, c.weight);
    out = from_character(s.characters->simple_character(t, lambda, require_p(c)));
    out.subject = lambda.to_string();
  } else if (c.kind == "babyverma") {
    const Weight lambda = parse_weight(s, c.weight);
    out = from_character(s.characters->baby_verma_character(lambda, require_p(c)));
    out.subject = lambda.to_string();
  } else if (c.kind == "projmult") {
    if (!c.weight.empty()) {
      const ProjectiveRow row = s.characters->row_for_weight(t, parse_weight(s, c.weight), require_p(c));
      for (const auto& [mu, m] : row.entries) out.rows.emplace_back(mu.to_string(), int_json(m));
      out.subject = row.lambda.to_string();
      out.extra["index"] = W.to_text(row.w);
      out.extra["steinberg"] = row.steinberg;
    } else {
      const ExtElem w = parse_elem(s, c.elem, "--elem or --weight");
      out = from_intmap(s.characters->projective_row(t, w), W);
      out.subject = W.to_text(w);
    }
  } else {
    throw InputError("unknown compute kind '" + c.kind + "'");
  }
  out.kind = c.kind;
  out.emit(s, &t, fmt);
  save_cache(s, c);
  return 0;
}

int cmd_draw(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "svg" : c.format;
  require_format(fmt, {"svg", "tikz"});
  Session s = open_session(c);
  DrawOptions o;
  o.region = c.region;
  o.bound = c.window > 0 ? c.window : 4;
  o.shade = c.shade;
  o.format = fmt == "svg" ? DrawFormat::Svg : DrawFormat::Tikz;
  if (!c.alcove.empty()) {
    // inscribe the (p-)canonical element of this alcove
    const PCanonicalTable t = load_table(s, c.table);
    log_run(s, &t);
    const ExtElem A = parse_alcove(s, c.alcove);
    const PeriodicElem P = t.is_builtin() ? s.periodic->canonical_P(A) : s.periodic->p_canonical_P(t, A);
    for (const auto& [x, f] : P.terms()) o.inscriptions[x] = f.to_string();
  } else {
    log_run(s, nullptr);
  }
  std::cout << draw_alcoves(s.periodic->alcoves(), o);
  return 0;
}

int cmd_cache(const RunConfig& c) {
  Session s = open_session(c);
  const auto dir = cache_dir_of(c);
  if (dir.empty()) throw InputError("no cache directory (use --cache-dir or AFFKL_CACHE_DIR)");
  log_run(s, nullptr);
  if (c.cache_action == "info") {
    std::cout << "file " << s.hecke->cache_file(dir).string() << "\n";
    std::cout << "entries " << s.hecke->cache_size() << "\n";
    return 0;
  }
  const int L = c.max_len >= 0 ? c.max_len : default_max_len(s);
  const auto elems = s.weyl->enumerate_W(L);
  parallel_map(elems.size(), c.jobs, [&](std::size_t i) { return s.hecke->kl_basis(elems[i]) != nullptr; });
  save_cache(s, c);
  std::cout << "entries " << s.hecke->cache_size() << "\n";
  return 0;
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--type", c.type, "Cartan type, e.g. A1, A2~, C2, G2, A1xA1");
  cmd->add_option("--datum", c.datum_file, "root datum JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--table", c.table, "p-canonical table: builtin or a JSON file");
  cmd->add_option("--max-len", c.max_len, "length bound (default depends on the datum)");
  cmd->add_option("--window", c.window, "alcove window: length bound, or the pairing bound for draw");
  cmd->add_option("--format", c.format, "json | csv | text | svg | tikz");
  cmd->add_option("--cache-dir", c.cache_dir, "KL cache directory (default $AFFKL_CACHE_DIR)");
  cmd->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  cmd->add_flag("--timing", c.timing, "include timings in reports (breaks byte-identity)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Kazhdan-Lusztig and p-canonical basis toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  RunConfig c;

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 pass, 1 falsified, 2 error");
  verify->add_option("suite", c.suite, "lemma-rho | main | periodic | orders | all")
      ->required()
      ->check(CLI::IsMember({"lemma-rho", "main", "periodic", "orders", "all"}));
  add_common(verify, c);

  auto* compute = app.add_subcommand("compute", "compute one basis element, row or character");
  compute->add_option("kind", c.kind, "kl | asph | sph | periodic | qa | simplechar | projmult | babyverma | bounds")
      ->required()
      ->check(CLI::IsMember({"kl", "asph", "sph", "periodic", "qa", "simplechar", "projmult", "babyverma", "bounds"}));
  add_common(compute, c);
  compute->add_option("--elem", c.elem, "element as a word, e.g. \"s0 s1\" or \"w: s1 | omega: 1\"");
  compute->add_option("--alcove", c.alcove, "alcove x(A_fund) given by x");
  compute->add_option("--weight", c.weight, "weight coordinates, comma separated");
  compute->add_option("--p", c.p, "characteristic");

  auto* draw = app.add_subcommand("draw", "rank 2 alcove picture (svg or tikz)");
  add_common(draw, c);
  draw->add_option("--region", c.region, "dominant | all")->check(CLI::IsMember({"dominant", "all"}));
  draw->add_option("--shade", c.shade, "restricted + fW-window(n) + box(a,b) + list(A=word;D=word)");
  draw->add_option("--alcove", c.alcove, "inscribe the coefficients of the canonical element of this alcove");

  auto* cache = app.add_subcommand("cache", "persistent KL cache");
  cache->add_option("action", c.cache_action, "warm | info")->required()->check(CLI::IsMember({"warm", "info"}));
  add_common(cache, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(c);
    if (*compute) return cmd_compute(c);
    if (*draw) return cmd_draw(c);
    if (*cache) return cmd_cache(c);
  } catch (const ConsistencyError& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
