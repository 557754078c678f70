// On-disk KL cache, one file per datum: kl-<datum hash hex>.bin
//
//   header   8 bytes  "AFFKLKLC"
//            u32      format version (1)
//            u64      datum hash
//   record   u32      payload length in bytes
//            u64      FNV-1a of the payload
//            payload  elem key, u32 term count, then per term: elem, u32 poly size,
//                     per poly term: i32 exponent, u32 digit count, signed decimal digits
//   elem     u32 finite index, u8 lattice rank n, n x i64 translation
//
// All integers are little endian. Records failing the checksum or the parse are
// skipped and recomputed on demand; a truncated tail ends the scan.

#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>

#include "affkl/hecke.hpp"

namespace affkl {

namespace {

constexpr char kMagic[8] = {'A', 'F', 'F', 'K', 'L', 'K', 'L', 'C'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::string& out, T v) {
  using U = std::make_unsigned_t<T>;
  U u = static_cast<U>(v);
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

struct Reader {
  const std::string& s;
  std::size_t pos = 0;
  bool ok = true;

  template <class T>
  T get() {
    using U = std::make_unsigned_t<T>;
    if (pos + sizeof(T) > s.size()) {
      ok = false;
      return T{};
    }
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<U>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
    pos += sizeof(T);
    return static_cast<T>(u);
  }
  std::string bytes(std::size_t n) {
    if (pos + n > s.size()) {
      ok = false;
      return {};
    }
    std::string r = s.substr(pos, n);
    pos += n;
    return r;
  }
};

void put_elem(std::string& out, const ExtElem& x) {
  put<std::uint32_t>(out, x.fin);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(x.trans.size()));
  for (int i = 0; i < x.trans.size(); ++i) put<std::int64_t>(out, x.trans[i]);
}

ExtElem get_elem(Reader& r, int lattice_rank) {
  ExtElem x;
  x.fin = r.get<std::uint32_t>();
  const int n = r.get<std::uint8_t>();
  if (n != lattice_rank) {
    r.ok = false;
    return x;
  }
  x.trans = Weight(n);
  for (int i = 0; i < n; ++i) x.trans[i] = r.get<std::int64_t>();
  return x;
}

std::string encode(const ExtElem& key, const HeckeElem& h) {
  std::string p;
  put_elem(p, key);
  put<std::uint32_t>(p, static_cast<std::uint32_t>(h.size()));
  std::vector<std::pair<ExtElem, LaurentPoly>> terms(h.terms().begin(), h.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [y, f] : terms) {
    put_elem(p, y);
    put<std::uint32_t>(p, static_cast<std::uint32_t>(f.size()));
    for (const auto& [e, c] : f.terms()) {
      put<std::int32_t>(p, e);
      const std::string digits = c.str();
      put<std::uint32_t>(p, static_cast<std::uint32_t>(digits.size()));
      p += digits;
    }
  }
  return p;
}

bool decode(const std::string& payload, const ExtendedWeyl& W, ExtElem& key, HeckeElem& h) {
  Reader r{payload};
  const int n = W.datum().lattice_rank();
  key = get_elem(r, n);
  const auto nterms = r.get<std::uint32_t>();
  if (!r.ok || key.fin >= W.finite().size() || nterms > payload.size()) return false;
  for (std::uint32_t k = 0; k < nterms && r.ok; ++k) {
    ExtElem y = get_elem(r, n);
    const auto np = r.get<std::uint32_t>();
    if (!r.ok || y.fin >= W.finite().size() || np > payload.size()) return false;
    std::vector<LaurentPoly::Term> pt;
    for (std::uint32_t j = 0; j < np && r.ok; ++j) {
      const auto e = r.get<std::int32_t>();
      const auto len = r.get<std::uint32_t>();
      const std::string digits = r.bytes(len);
      if (!r.ok || digits.empty()) return false;
      for (std::size_t i = 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])) && !(i == 0 && digits[i] == '-' && digits.size() > 1))
          return false;
      pt.emplace_back(e, Integer(digits));
    }
    h.add(y, LaurentPoly::from_terms(std::move(pt)));
  }
  // cheap sanity: unitriangular with the key on top and inside W
  return r.ok && r.pos == payload.size() && W.in_W(key) && h.coeff(key).is_one();
}

}  // namespace

std::filesystem::path HeckeAlgebra::cache_file(const std::filesystem::path& dir) const {
  return dir / ("kl-" + w_->datum().hash_hex() + ".bin");
}

std::size_t HeckeAlgebra::load_cache(const std::filesystem::path& dir) {
  std::ifstream in(cache_file(dir), std::ios::binary);
  if (!in) return 0;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  Reader r{data};
  if (r.bytes(8) != std::string(kMagic, 8)) return 0;
  if (r.get<std::uint32_t>() != kVersion) return 0;
  if (r.get<std::uint64_t>() != w_->datum().hash() || !r.ok) return 0;
  std::size_t accepted = 0;
  while (r.pos < data.size()) {
    const auto len = r.get<std::uint32_t>();
    const auto sum = r.get<std::uint64_t>();
    const std::string payload = r.bytes(len);
    if (!r.ok) break;
    if (fnv1a(payload) != sum) continue;
    ExtElem key;
    HeckeElem h;
    if (!decode(payload, *w_, key, h)) continue;
    insert(key, std::move(h));
    ++accepted;
  }
  return accepted;
}

void HeckeAlgebra::save_cache(const std::filesystem::path& dir) const {
  std::vector<std::pair<ExtElem, std::shared_ptr<const HeckeElem>>> entries;
  {
    std::shared_lock lock(mu_);
    for (const auto& kv : cache_)
      if (w_->in_W(kv.first)) entries.push_back(kv);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out(kMagic, 8);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, w_->datum().hash());
  for (const auto& [key, h] : entries) {
    const std::string payload = encode(key, *h);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(payload.size()));
    put<std::uint64_t>(out, fnv1a(payload));
    out += payload;
  }
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir);
  // write-then-rename so concurrent runs never observe a partial file
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write cache file " + tmp.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace affkl
