#include "affkl/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace affkl {

namespace {

constexpr std::size_t kMaxFiniteWeyl = 60000;
constexpr std::size_t kFullTableLimit = 1200;

using Mat = std::vector<std::int64_t>;

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "less-equal";
    case Order::Greater: return "greater-equal";
    case Order::Equal: return "equal";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

std::size_t FiniteWeyl::VecHash::operator()(const std::vector<std::int64_t>& v) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ull;
  return h;
}

FiniteWeyl::FiniteWeyl(const RootDatum& d) : rank_(d.rank()), lat_(d.lattice_rank()), npos_(d.num_positive_roots()) {
  const int n = lat_;
  std::vector<Mat> simple_mats;
  for (int i = 0; i < rank_; ++i) {
    Mat m(n * n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r * n + c] = (r == c ? 1 : 0) - d.simple_roots()[i][r] * d.simple_coroots()[i][c];
    simple_mats.push_back(std::move(m));
  }
  Mat id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;

  // BFS by right multiplication gives lengths.
  std::vector<Mat> mats{id};
  std::vector<int> lens{0};
  std::unordered_map<Mat, std::uint32_t, VecHash> idx{{id, 0}};
  for (std::size_t k = 0; k < mats.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      Mat m = mat_mul(mats[k], simple_mats[i], n);
      if (idx.count(m)) continue;
      if (mats.size() >= kMaxFiniteWeyl) throw InputError("finite Weyl group too large for this tool");
      idx.emplace(m, static_cast<std::uint32_t>(mats.size()));
      mats.push_back(std::move(m));
      lens.push_back(lens[k] + 1);
    }
  }
  const std::size_t size = mats.size();
  std::vector<std::uint32_t> left(size * rank_);
  for (std::size_t k = 0; k < size; ++k)
    for (int i = 0; i < rank_; ++i) left[k * rank_ + i] = idx.at(mat_mul(simple_mats[i], mats[k], n));
  // lexicographically minimal reduced words via smallest left descent
  std::vector<std::vector<int>> words(size);
  std::vector<std::uint32_t> order(size);
  for (std::size_t k = 0; k < size; ++k) order[k] = static_cast<std::uint32_t>(k);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lens[a] < lens[b]; });
  for (auto k : order) {
    if (lens[k] == 0) continue;
    for (int i = 0; i < rank_; ++i) {
      auto prev = left[k * rank_ + i];
      if (lens[prev] < lens[k]) {
        words[k].push_back(i);
        words[k].insert(words[k].end(), words[prev].begin(), words[prev].end());
        break;
      }
    }
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (lens[a] != lens[b]) return lens[a] < lens[b];
    return words[a] < words[b];
  });
  std::vector<std::uint32_t> renum(size);
  for (std::size_t k = 0; k < size; ++k) renum[order[k]] = static_cast<std::uint32_t>(k);

  length_.resize(size);
  matrices_.resize(size);
  words_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    const auto o = order[k];
    length_[k] = lens[o];
    matrices_[k] = std::move(mats[o]);
    words_[k] = std::move(words[o]);
  }
  for (std::size_t k = 0; k < size; ++k) index_.emplace(matrices_[k], static_cast<std::uint32_t>(k));
  left_.resize(size * rank_);
  right_.resize(size * rank_);
  for (std::size_t k = 0; k < size; ++k)
    for (int i = 0; i < rank_; ++i) {
      left_[k * rank_ + i] = renum[left[order[k] * rank_ + i]];
      right_[k * rank_ + i] = index_.at(mat_mul(matrices_[k], simple_mats[i], n));
    }
  inverse_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    std::uint32_t x = 0;
    for (int i : words_[k]) x = left_simple(i, x);
    inverse_[k] = x;
  }
  for (std::size_t k = 0; k < size; ++k)
    if (length_[k] > length_[longest_]) longest_ = static_cast<std::uint32_t>(k);
  if (length_[longest_] != npos_) throw ConsistencyError("length of w_f differs from the number of positive roots");

  root_image_.resize(size * npos_);
  for (std::size_t k = 0; k < size; ++k)
    for (int r = 0; r < npos_; ++r) {
      int ri = d.root_index(act(static_cast<std::uint32_t>(k), d.positive_roots()[r]));
      if (ri == 0) throw ConsistencyError("Weyl group does not permute the roots");
      root_image_[k * npos_ + r] = ri;
    }
  for (int r = 0; r < npos_; ++r) {
    Mat m(n * n, 0);
    const auto& a = d.positive_roots()[r];
    const auto& av = d.positive_coroots()[r];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1 : 0) - a[i] * av[j];
    reflection_.push_back(index_.at(m));
  }
  if (size <= kFullTableLimit) {
    table_.resize(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        std::uint32_t x = static_cast<std::uint32_t>(a);
        for (int i : words_[b]) x = right_simple(x, i);
        table_[a * size + b] = x;
      }
  }
}

std::uint32_t FiniteWeyl::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[a * size() + b];
  for (int i : words_[b]) a = right_simple(a, i);
  return a;
}

std::uint32_t FiniteWeyl::longest_of(std::uint32_t mask) const {
  std::uint32_t u = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < rank_; ++i) {
      if (!(mask >> i & 1u)) continue;
      auto x = right_simple(u, i);
      if (length_[x] > length_[u]) {
        u = x;
        grew = true;
      }
    }
  }
  return u;
}

Weight FiniteWeyl::act(std::uint32_t u, const Weight& lambda) const {
  const auto& m = matrices_[u];
  Weight out(lat_);
  for (int i = 0; i < lat_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < lat_; ++j) s += m[i * lat_ + j] * lambda[j];
    out[i] = s;
  }
  return out;
}

Weight FiniteWeyl::act_dual(std::uint32_t u, const Weight& c) const {
  // c' = M_{u^{-1}}^T c
  const auto& m = matrices_[inverse_[u]];
  Weight out(lat_);
  for (int j = 0; j < lat_; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < lat_; ++i) s += m[i * lat_ + j] * c[i];
    out[j] = s;
  }
  return out;
}

std::uint32_t FiniteWeyl::find(const std::vector<std::int64_t>& matrix) const {
  auto it = index_.find(matrix);
  if (it == index_.end()) throw InputError("matrix is not an element of the finite Weyl group");
  return it->second;
}

// ---------------------------------------------------------------------------

ExtendedWeyl::ExtendedWeyl(std::shared_ptr<const RootDatum> d) : datum_(std::move(d)), fin_(*datum_) {
  const auto& dd = *datum_;
  num_affine_ = static_cast<int>(dd.components().size());
  for (int c = 0; c < num_affine_; ++c) {
    const int k = dd.affine_root(c);
    gens_.push_back(ExtElem{fin_.reflection(k), -dd.positive_roots()[k]});
    gen_names_.push_back(c == 0 ? "s0" : "s0_" + std::to_string(c + 1));
  }
  for (int i = 0; i < dd.rank(); ++i) {
    gens_.push_back(ExtElem{fin_.simple(i), Weight(dd.lattice_rank())});
    gen_names_.push_back("s" + std::to_string(i + 1));
  }
  for (int g = 0; g < num_generators(); ++g)
    if (length(gens_[g]) != 1) throw ConsistencyError("generator " + gen_names_[g] + " does not have length 1");

  if (dd.semisimple()) {
    std::vector<ExtElem> gens;
    for (const auto& w : dd.fundamental_weights()) gens.push_back(omega_of_weight(w).first);
    omegas_.push_back(identity());
    for (std::size_t k = 0; k < omegas_.size(); ++k) {
      for (const auto& g : gens) {
        ExtElem x = mul(omegas_[k], g);
        if (std::find(omegas_.begin(), omegas_.end(), x) == omegas_.end()) omegas_.push_back(x);
      }
      if (omegas_.size() > 4096) throw ConsistencyError("Omega unexpectedly large");
    }
  }
}

int ExtendedWeyl::generator_index(const std::string& name) const {
  for (int g = 0; g < num_generators(); ++g)
    if (gen_names_[g] == name) return g;
  return -1;
}

std::uint32_t ExtendedWeyl::finite_mask() const {
  std::uint32_t m = 0;
  for (int g = num_affine_; g < num_generators(); ++g) m |= 1u << g;
  return m;
}

ExtElem ExtendedWeyl::identity() const { return ExtElem{0, Weight(datum_->lattice_rank())}; }
ExtElem ExtendedWeyl::translation(const Weight& lambda) const { return ExtElem{0, lambda}; }
ExtElem ExtendedWeyl::finite_elem(std::uint32_t u) const { return ExtElem{u, Weight(datum_->lattice_rank())}; }

ExtElem ExtendedWeyl::mul(const ExtElem& a, const ExtElem& b) const {
  // (w t_l)(w' t_m) = w w' t_{w'^{-1} l + m}
  return ExtElem{fin_.mul(a.fin, b.fin), fin_.act(fin_.inverse(b.fin), a.trans) + b.trans};
}

ExtElem ExtendedWeyl::inverse(const ExtElem& a) const { return ExtElem{fin_.inverse(a.fin), -fin_.act(a.fin, a.trans)}; }

int ExtendedWeyl::length(const ExtElem& a) const {
  const auto& d = *datum_;
  int len = 0;
  for (int k = 0; k < d.num_positive_roots(); ++k) {
    std::int64_t x = a.trans.dot(d.positive_coroots()[k]);
    if (fin_.sends_negative(a.fin, k)) x += 1;
    len += static_cast<int>(x < 0 ? -x : x);
  }
  return len;
}

ExtElem ExtendedWeyl::right_gen(const ExtElem& a, int g) const {
  const ExtElem& s = gens_[g];
  // s is an involution, so s^{-1} = s on the finite part
  return ExtElem{fin_.mul(a.fin, s.fin), fin_.act(s.fin, a.trans) + s.trans};
}

ExtElem ExtendedWeyl::left_gen(int g, const ExtElem& a) const {
  const ExtElem& s = gens_[g];
  if (g >= num_affine_) return ExtElem{fin_.left_simple(g - num_affine_, a.fin), a.trans};
  return ExtElem{fin_.mul(s.fin, a.fin), fin_.act(fin_.inverse(a.fin), s.trans) + a.trans};
}

int ExtendedWeyl::first_right_descent(const ExtElem& a) const {
  const int l = length(a);
  for (int g = 0; g < num_generators(); ++g)
    if (length(right_gen(a, g)) < l) return g;
  return -1;
}

ExtElem ExtendedWeyl::from_word(const std::vector<int>& word) const {
  ExtElem x = identity();
  for (int g : word) x = right_gen(x, g);
  return x;
}

Weight ExtendedWeyl::act(const ExtElem& x, const Weight& lambda) const { return fin_.act(x.fin, lambda + x.trans); }

Weight ExtendedWeyl::act_scaled(const ExtElem& x, const Weight& num, std::int64_t den) const {
  return fin_.act(x.fin, num + den * x.trans);
}

Weight ExtendedWeyl::dot_p(const ExtElem& x, const Weight& lambda, std::int64_t p) const {
  const auto& vs = datum_->varsigma();
  return fin_.act(x.fin, lambda + p * x.trans + vs) - vs;
}

std::pair<ExtElem, ExtElem> ExtendedWeyl::omega_decompose(const ExtElem& x) const {
  ExtElem y = x;
  int l = length(y);
  while (l > 0) {
    bool moved = false;
    for (int g = 0; g < num_generators(); ++g) {
      ExtElem z = right_gen(y, g);
      if (length(z) < l) {
        y = z;
        --l;
        moved = true;
        break;
      }
    }
    if (!moved) throw ConsistencyError("no descent for an element of positive length");
  }
  return {y, mul(inverse(y), x)};
}

std::pair<ExtElem, ExtElem> ExtendedWeyl::omega_decompose_right(const ExtElem& x) const {
  ExtElem y = x;
  int l = length(y);
  while (l > 0) {
    bool moved = false;
    for (int g = 0; g < num_generators(); ++g) {
      ExtElem z = left_gen(g, y);
      if (length(z) < l) {
        y = z;
        --l;
        moved = true;
        break;
      }
    }
    if (!moved) throw ConsistencyError("no descent for an element of positive length");
  }
  return {mul(x, inverse(y)), y};
}

std::pair<ExtElem, ExtElem> ExtendedWeyl::omega_of_weight(const Weight& lambda) const {
  auto [x, omega] = omega_decompose_right(translation(lambda));
  return {omega, x};
}

ExtElem ExtendedWeyl::tau(const Weight& lambda, const ExtElem& w) const {
  if (!in_W(w)) throw InputError("tau: element is not in W");
  ExtElem om = omega_of_weight(lambda).first;
  return mul(mul(om, w), inverse(om));
}

std::vector<int> ExtendedWeyl::reduced_word(const ExtElem& x) const {
  std::vector<int> word;
  ExtElem y = x;
  int l = length(y);
  word.reserve(l);
  while (l > 0) {
    bool moved = false;
    for (int g = 0; g < num_generators(); ++g) {
      ExtElem z = left_gen(g, y);
      if (length(z) < l) {
        word.push_back(g);
        y = z;
        --l;
        moved = true;
        break;
      }
    }
    if (!moved) throw ConsistencyError("no descent for an element of positive length");
  }
  return word;
}

Order ExtendedWeyl::bruhat(const ExtElem& x, const ExtElem& y) const {
  if (x == y) return Order::Equal;
  if (bruhat_leq(x, y)) return Order::Less;
  if (bruhat_leq(y, x)) return Order::Greater;
  return Order::Incomparable;
}

bool ExtendedWeyl::bruhat_leq(const ExtElem& x0, const ExtElem& y0) const {
  if (!datum_->in_root_lattice(y0.trans - x0.trans)) return false;
  ExtElem x = x0, y = y0;
  int lx = length(x), ly = length(y);
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    if (lx == ly) return x == y;
    int g = -1;
    ExtElem ys;
    for (int h = 0; h < num_generators(); ++h) {
      ys = right_gen(y, h);
      if (length(ys) < ly) {
        g = h;
        break;
      }
    }
    ExtElem xs = right_gen(x, g);
    const int lxs = length(xs);
    if (lxs < lx) {
      x = xs;
      lx = lxs;
    }
    y = ys;
    --ly;
  }
}

bool ExtendedWeyl::is_min_in_coset(const ExtElem& x, std::uint32_t mask) const {
  const int l = length(x);
  for (int g = 0; g < num_generators(); ++g)
    if ((mask >> g & 1u) && length(left_gen(g, x)) < l) return false;
  return true;
}

bool ExtendedWeyl::is_fWext(const ExtElem& x) const {
  const auto& d = *datum_;
  const Weight b = act_scaled(x, d.two_rho(), 2 * d.coxeter_number());
  for (int i = 0; i < d.rank(); ++i)
    if (d.pair_simple(b, i) <= 0) return false;
  return true;
}

std::pair<std::uint32_t, ExtElem> ExtendedWeyl::finite_coset_decompose(const ExtElem& x) const {
  // y = v t_lambda with v the minimal element making lambda dominant-leaning; x = (w v^{-1}) y
  const auto& d = *datum_;
  std::uint32_t v = 0;
  Weight mu = x.trans;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.rank(); ++i) {
      const auto a = d.pair_simple(mu, i);
      if (a < 0) {
        mu -= a * d.simple_roots()[i];
        v = fin_.left_simple(i, v);
        moved = true;
        break;
      }
    }
  }
  ExtElem y{v, x.trans};
  return {fin_.mul(x.fin, fin_.inverse(v)), y};
}

bool ExtendedWeyl::is_restricted(const ExtElem& x) const {
  const auto& d = *datum_;
  const std::int64_t p0 = 2 * d.coxeter_number() + 1;
  const Weight nu = dot_p(x, Weight(d.lattice_rank()), p0);
  for (int i = 0; i < d.rank(); ++i) {
    const auto a = d.pair_simple(nu, i);
    if (a < 0 || a > p0 - 1) return false;
  }
  return true;
}

int ExtendedWeyl::omega_index(const ExtElem& omega) const {
  for (std::size_t k = 0; k < omegas_.size(); ++k)
    if (omegas_[k] == omega) return static_cast<int>(k);
  return -1;
}

std::vector<ExtElem> ExtendedWeyl::enumerate_W(int max_len) const {
  std::vector<ExtElem> out{identity()};
  std::unordered_set<ExtElem, ExtElemHash> seen{identity()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    std::vector<ExtElem> next;
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (int g = 0; g < num_generators(); ++g) {
        ExtElem y = right_gen(out[k], g);
        if (seen.count(y)) continue;
        if (length(y) != len) continue;
        seen.insert(y);
        next.push_back(y);
      }
    sort_canonical(next);
    level_begin = out.size();
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

std::vector<ExtElem> ExtendedWeyl::enumerate_fWext(int max_len) const {
  if (!omega_finite()) throw InputError("enumeration of fW_ext needs finite Omega (semisimple datum)");
  std::vector<ExtElem> fw{identity()};
  std::unordered_set<ExtElem, ExtElemHash> seen{identity()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = fw.size();
    std::vector<ExtElem> next;
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (int g = 0; g < num_generators(); ++g) {
        ExtElem y = right_gen(fw[k], g);
        if (seen.count(y) || length(y) != len || !is_fWext(y)) continue;
        seen.insert(y);
        next.push_back(y);
      }
    level_begin = fw.size();
    fw.insert(fw.end(), next.begin(), next.end());
  }
  std::vector<ExtElem> out;
  for (const auto& w : fw)
    for (const auto& om : omegas_) out.push_back(mul(w, om));
  sort_canonical(out);
  return out;
}

std::vector<ExtElem> ExtendedWeyl::enumerate_Wext(int max_len) const {
  if (!omega_finite()) throw InputError("enumeration of W_ext needs finite Omega (semisimple datum)");
  std::vector<ExtElem> out;
  for (const auto& w : enumerate_W(max_len))
    for (const auto& om : omegas_) out.push_back(mul(w, om));
  sort_canonical(out);
  return out;
}

bool ExtendedWeyl::canonical_less(const ExtElem& a, const ExtElem& b) const {
  const int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  auto [wa, oa] = omega_decompose_right(a);
  auto [wb, ob] = omega_decompose_right(b);
  if (oa != ob) {
    const int ia = omega_index(oa), ib = omega_index(ob);
    if (ia >= 0 && ib >= 0) return ia < ib;
    return oa < ob;
  }
  return reduced_word(a) < reduced_word(b);
}

void ExtendedWeyl::sort_canonical(std::vector<ExtElem>& v) const {
  struct Key {
    int len;
    int om;
    ExtElem omega;
    std::vector<int> word;
    std::size_t pos;
  };
  std::vector<Key> keys;
  keys.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto [w, om] = omega_decompose_right(v[k]);
    keys.push_back(Key{length(v[k]), omega_index(om), om, reduced_word(v[k]), k});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.om != b.om) return a.om < b.om;
    if (a.omega != b.omega) return a.omega < b.omega;
    return a.word < b.word;
  });
  std::vector<ExtElem> out;
  out.reserve(v.size());
  for (const auto& k : keys) out.push_back(v[k.pos]);
  v = std::move(out);
}

std::string ExtendedWeyl::word_text(const std::vector<int>& word) const {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += " ";
    s += gen_names_[word[k]];
  }
  return s;
}

std::string ExtendedWeyl::to_text(const ExtElem& x) const {
  auto [w, om] = omega_decompose_right(x);
  if (om == identity()) return "w: " + word_text(reduced_word(w));
  if (omega_finite()) {
    const int k = omega_index(om);
    if (k < 0) throw ConsistencyError("length-zero element missing from Omega");
    return "w: " + word_text(reduced_word(w)) + " | omega: " + std::to_string(k);
  }
  std::vector<int> fword;
  for (int i : fin_.word(x.fin)) fword.push_back(finite_generator(i));
  return "w: " + word_text(fword) + " | t: " + x.trans.to_string();
}

ExtElem ExtendedWeyl::parse(const std::string& text) const {
  ExtElem word_part = identity();
  ExtElem t_part = identity();
  ExtElem om_part = identity();
  std::stringstream ss(text);
  std::string field;
  bool any = false;
  while (std::getline(ss, field, '|')) {
    field = trim(field);
    if (field.empty()) continue;
    any = true;
    std::string key = "w", value = field;
    auto colon = field.find(':');
    if (colon != std::string::npos) {
      key = trim(field.substr(0, colon));
      value = trim(field.substr(colon + 1));
    }
    if (key == "w") {
      std::stringstream ws(value);
      std::string tok;
      std::vector<int> word;
      while (ws >> tok) {
        if (tok == "e") continue;
        const int g = generator_index(tok);
        if (g < 0) throw InputError("unknown generator '" + tok + "' in element text");
        word.push_back(g);
      }
      word_part = from_word(word);
    } else if (key == "t") {
      std::string v = value;
      for (auto& ch : v)
        if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
      std::stringstream ts(v);
      std::vector<std::int64_t> xs;
      std::int64_t a;
      while (ts >> a) xs.push_back(a);
      if (!ts.eof()) throw InputError("malformed translation in element text: " + value);
      if (static_cast<int>(xs.size()) != datum_->lattice_rank()) throw InputError("translation has wrong lattice rank: " + value);
      t_part = translation(Weight::from_vector(xs));
    } else if (key == "omega") {
      int k = -1;
      try {
        k = std::stoi(value);
      } catch (...) {
        throw InputError("malformed omega index: " + value);
      }
      if (k < 0 || k >= static_cast<int>(omegas_.size())) throw InputError("omega index out of range: " + value);
      om_part = omegas_[k];
    } else {
      throw InputError("unknown field '" + key + "' in element text");
    }
  }
  if (!any) throw InputError("empty element text");
  return mul(mul(word_part, t_part), om_part);
}

}  // namespace affkl
