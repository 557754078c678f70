#include "affkl/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "affkl/intlinalg.hpp"

namespace affkl {

namespace {

constexpr int kMaxPositiveRoots = 200;

IntMatrix simple_type_cartan(char letter, int n) {
  auto fail = [&] { throw InputError(std::string("unsupported Cartan type ") + letter + std::to_string(n)); };
  if (n < 1) fail();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) fail();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) fail();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 3) fail();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) fail();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) fail();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case 'G':
      if (n != 2) fail();
      link(0, 1);
      c[0][1] = -3;
      break;
    default:
      fail();
  }
  return c;
}

std::string normalize_type(std::string t) {
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (!t.empty() && t.back() == '~') t.pop_back();
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return t;
}

IntMatrix parse_matrix(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError(std::string(what) + " entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
  return h;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) { return fnv1a(s.data(), s.size(), h); }

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

IntMatrix cartan_matrix_of_type(const std::string& type) {
  const std::string t = normalize_type(type);
  if (t.empty()) throw InputError("empty Cartan type");
  std::vector<std::pair<char, int>> parts;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == 'X' || t[pos] == '+') {
      ++pos;
      continue;
    }
    const char letter = t[pos++];
    std::size_t end = pos;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    if (end == pos) throw InputError("malformed Cartan type '" + type + "'");
    parts.emplace_back(letter, std::stoi(t.substr(pos, end - pos)));
    pos = end;
  }
  int total = 0;
  for (auto [l, n] : parts) total += n;
  IntMatrix c(total, std::vector<std::int64_t>(total, 0));
  int off = 0;
  for (auto [l, n] : parts) {
    auto b = simple_type_cartan(l, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[off + i][off + j] = b[i][j];
    off += n;
  }
  return c;
}

std::shared_ptr<const RootDatum> RootDatum::from_type(const std::string& type) {
  DatumConfig cfg;
  cfg.type = type;
  return build(cfg);
}

std::shared_ptr<const RootDatum> RootDatum::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("datum config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("datum config must be a JSON object");
  if (!j.contains("schema") || j["schema"] != 1) throw InputError("datum config: unsupported or missing schema (expected 1)");
  DatumConfig cfg;
  if (j.contains("type") && !j["type"].is_null()) {
    if (!j["type"].is_string()) throw InputError("datum config: type must be a string");
    cfg.type = j["type"].get<std::string>();
  }
  if (j.contains("cartan") && !j["cartan"].is_null()) cfg.cartan = parse_matrix(j["cartan"], "cartan");
  if (cfg.type.empty() && !cfg.cartan) throw InputError("datum config needs a type or a cartan matrix");
  if (j.contains("lattice") && !j["lattice"].is_null()) {
    const auto& l = j["lattice"];
    if (l.is_string()) {
      if (l.get<std::string>() != "simply_connected") throw InputError("datum config: unknown lattice '" + l.get<std::string>() + "'");
    } else if (l.is_object()) {
      if (!l.contains("embedding") || !l.contains("coroots"))
        throw InputError("datum config: explicit lattice needs 'embedding' and 'coroots'");
      cfg.embedding = parse_matrix(l["embedding"], "embedding");
      cfg.coroots = parse_matrix(l["coroots"], "coroots");
    } else {
      throw InputError("datum config: lattice must be a string or an object");
    }
  }
  if (j.contains("label") && j["label"].is_string()) cfg.label = j["label"].get<std::string>();
  return build(cfg);
}

std::shared_ptr<const RootDatum> RootDatum::build(const DatumConfig& cfg) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  IntMatrix c = cfg.cartan ? *cfg.cartan : cartan_matrix_of_type(cfg.type);
  if (cfg.cartan && !cfg.type.empty() && cartan_matrix_of_type(cfg.type) != c)
    throw InputError("Cartan matrix does not match type " + cfg.type);
  const int n = static_cast<int>(c.size());
  if (n == 0 || n > kMaxLatticeRank) throw InputError("rank must be between 1 and 8");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) throw InputError("Cartan matrix is not square");
    if (c[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (c[i][j] > 0 || ((c[i][j] == 0) != (c[j][i] == 0))))
        throw InputError("inconsistent Cartan data at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  d->cartan_ = c;
  d->rank_ = n;

  if (cfg.embedding || cfg.coroots) {
    if (!cfg.embedding || !cfg.coroots) throw InputError("explicit lattice needs both embedding and coroots");
    const auto& e = *cfg.embedding;
    const auto& cv = *cfg.coroots;
    if (static_cast<int>(e.size()) != n || static_cast<int>(cv.size()) != n)
      throw InputError("lattice data must list one simple root and one simple coroot per Cartan row");
    const int m = static_cast<int>(e[0].size());
    if (m < n || m > kMaxLatticeRank) throw InputError("lattice rank must be between rank and 8");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(e[i].size()) != m || static_cast<int>(cv[i].size()) != m)
        throw InputError("lattice vectors have inconsistent lengths");
      d->simple_roots_.push_back(Weight::from_vector(e[i]));
      d->simple_coroots_.push_back(Weight::from_vector(cv[i]));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d->simple_roots_[i].dot(d->simple_coroots_[j]) != c[j][i])
          throw InputError("pairing mismatch: <alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) +
                           "^vee> != cartan[" + std::to_string(j) + "][" + std::to_string(i) + "]");
    d->lattice_rank_ = m;
  } else {
    d->lattice_rank_ = n;
    for (int j = 0; j < n; ++j) {
      Weight a(n), cv(n);
      for (int i = 0; i < n; ++i) a[i] = c[i][j];
      cv[j] = 1;
      d->simple_roots_.push_back(a);
      d->simple_coroots_.push_back(cv);
    }
  }

  if (!cfg.label.empty())
    d->label_ = cfg.label;
  else if (!cfg.type.empty())
    d->label_ = normalize_type(cfg.type);
  else
    d->label_ = "cartan";
  if (cfg.embedding) d->label_ += "/lattice";

  d->finish();
  return d;
}

void RootDatum::finish() {
  const int n = rank_;
  // Closure of the simple roots (with their coroots) under simple reflections.
  using Coords = std::vector<std::int64_t>;
  std::map<Coords, Coords> found;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords r(n, 0);
    r[i] = 1;
    found[r] = r;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Coords r = queue.front();
    queue.pop_front();
    const Coords rv = found[r];
    for (int j = 0; j < n; ++j) {
      std::int64_t a = 0, b = 0;  // <r, alpha_j^vee>, <alpha_j, r^vee>
      for (int i = 0; i < n; ++i) {
        a += r[i] * cartan_[j][i];
        b += rv[i] * cartan_[i][j];
      }
      Coords r2 = r, rv2 = rv;
      r2[j] -= a;
      rv2[j] -= b;
      if (std::any_of(r2.begin(), r2.end(), [](std::int64_t x) { return x < 0; })) continue;
      if (found.count(r2)) continue;
      found[r2] = rv2;
      if (static_cast<int>(found.size()) > kMaxPositiveRoots) throw InputError("Cartan matrix is not of finite type");
      queue.push_back(r2);
    }
  }
  std::vector<std::pair<Coords, Coords>> roots(found.begin(), found.end());
  auto height = [](const Coords& x) {
    std::int64_t h = 0;
    for (auto v : x) h += v;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
    const auto hx = height(x.first), hy = height(y.first);
    if (hx != hy) return hx < hy;
    return x.first < y.first;
  });
  for (const auto& [r, rv] : roots) {
    Weight w(lattice_rank_), wv(lattice_rank_);
    for (int i = 0; i < n; ++i) {
      w += r[i] * simple_roots_[i];
      wv += rv[i] * simple_coroots_[i];
    }
    if (w.dot(wv) != 2) throw InputError("inconsistent Cartan data: root/coroot pairing is not 2");
    pos_roots_.push_back(w);
    pos_coroots_.push_back(wv);
    root_coords_.push_back(r);
    coroot_coords_.push_back(rv);
    root_heights_.push_back(static_cast<int>(height(r)));
    coroot_heights_.push_back(static_cast<int>(height(rv)));
  }
  for (int k = 0; k < num_positive_roots(); ++k) {
    root_lookup_.emplace_back(pos_roots_[k], k + 1);
    root_lookup_.emplace_back(-pos_roots_[k], -(k + 1));
  }
  std::sort(root_lookup_.begin(), root_lookup_.end());

  two_rho_ = Weight(lattice_rank_);
  for (const auto& r : pos_roots_) two_rho_ += r;

  // Dynkin components
  std::vector<int> comp(n, -1);
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::vector<int> stack{i};
    comp[i] = id;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      components_[id].push_back(a);
      for (int b = 0; b < n; ++b)
        if (b != a && cartan_[a][b] != 0 && comp[b] < 0) {
          comp[b] = id;
          stack.push_back(b);
        }
    }
    std::sort(components_[id].begin(), components_[id].end());
  }
  for (std::size_t cidx = 0; cidx < components_.size(); ++cidx) {
    int best = -1, best_root_h = 0;
    for (int k = 0; k < num_positive_roots(); ++k) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (root_coords_[k][i] != 0 && comp[i] != static_cast<int>(cidx)) inside = false;
      if (!inside) continue;
      if (best < 0 || coroot_heights_[k] > coroot_heights_[best]) best = k;
      best_root_h = std::max(best_root_h, root_heights_[k]);
    }
    affine_roots_.push_back(best);
    component_coxeter_.push_back(best_root_h + 1);
    coxeter_ = std::max(coxeter_, best_root_h + 1);
  }

  // Fundamental weights and varsigma: integer solutions of <x, alpha_i^vee> = b_i.
  IntMatrix k(n, std::vector<std::int64_t>(lattice_rank_));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < lattice_rank_; ++j) k[i][j] = simple_coroots_[i][j];
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> b(n, 0);
    b[i] = 1;
    auto x = canonical_integer_solution(k, b);
    if (!x) throw InputError("derived subgroup is not simply connected: no fundamental weight for alpha_" + std::to_string(i + 1));
    fund_weights_.push_back(Weight::from_vector(*x));
  }
  auto vs = canonical_integer_solution(k, std::vector<std::int64_t>(n, 1));
  if (!vs) throw InputError("no weight varsigma with <varsigma, alpha^vee> = 1 in the lattice");
  varsigma_ = Weight::from_vector(*vs);

  root_matrix_.assign(lattice_rank_, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < lattice_rank_; ++j) root_matrix_[j][i] = simple_roots_[i][j];

  std::uint64_t h = fnv1a("affkl-datum-v1");
  auto mix = [&](std::int64_t x) { h = fnv1a(&x, sizeof x, h); };
  mix(rank_);
  mix(lattice_rank_);
  for (const auto& row : cartan_)
    for (auto x : row) mix(x);
  for (const auto& r : simple_roots_)
    for (int i = 0; i < lattice_rank_; ++i) mix(r[i]);
  for (const auto& r : simple_coroots_)
    for (int i = 0; i < lattice_rank_; ++i) mix(r[i]);
  hash_ = h;
}

int RootDatum::root_index(const Weight& r) const {
  auto it = std::lower_bound(root_lookup_.begin(), root_lookup_.end(), std::make_pair(r, INT32_MIN));
  if (it != root_lookup_.end() && it->first == r) return it->second;
  return 0;
}

Weight RootDatum::reflect(const Weight& lambda, int k) const {
  return lambda - lambda.dot(pos_coroots_[k]) * pos_roots_[k];
}

std::optional<Weight> RootDatum::rho() const {
  Weight r = two_rho_;
  for (int i = 0; i < lattice_rank_; ++i) {
    if (r[i] % 2 != 0) return std::nullopt;
    r[i] /= 2;
  }
  return r;
}

Weight RootDatum::weight_with_pairings(const std::vector<std::int64_t>& pairings) const {
  Weight w(lattice_rank_);
  for (int i = 0; i < rank_; ++i) w += pairings[i] * fund_weights_[i];
  return w;
}

std::optional<std::vector<std::int64_t>> RootDatum::root_lattice_coords(const Weight& lambda) const {
  auto sol = solve_integer(root_matrix_, lambda.to_vector());
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::string RootDatum::hash_hex() const { return hex64(hash_); }

ComplexityBounds complexity_bounds(const RootDatum& d) {
  std::int64_t sum_ht = 0;
  for (int k = 0; k < d.num_positive_roots(); ++k) sum_ht += d.root_height(k);
  const std::int64_t lwf = d.num_positive_roots();
  return {sum_ht, 2 * sum_ht - lwf, sum_ht - lwf};
}

}  // namespace affkl
