#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace affkl {

inline constexpr int kMaxLatticeRank = 8;

// Integer vector in the character lattice X, stored inline.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxLatticeRank) throw std::invalid_argument("lattice rank out of range");
  }
  Weight(std::initializer_list<std::int64_t> xs) : Weight(static_cast<int>(xs.size())) {
    int i = 0;
    for (auto x : xs) c_[i++] = x;
  }
  static Weight from_vector(const std::vector<std::int64_t>& xs) {
    Weight w(static_cast<int>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) w.c_[i] = xs[i];
    return w;
  }

  int size() const { return n_; }
  std::int64_t& operator[](int i) { return c_[i]; }
  std::int64_t operator[](int i) const { return c_[i]; }
  std::vector<std::int64_t> to_vector() const { return {c_.begin(), c_.begin() + n_}; }
  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(std::int64_t k) {
    for (int i = 0; i < n_; ++i) c_[i] *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  Weight operator-() const {
    Weight w = *this;
    for (int i = 0; i < n_; ++i) w.c_[i] = -w.c_[i];
    return w;
  }

  // Pairing with a covector written in dual coordinates.
  std::int64_t dot(const Weight& covector) const {
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) s += c_[i] * covector.c_[i];
    return s;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (int i = 0; i < a.n_; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < n_; ++i) h = (h ^ static_cast<std::uint64_t>(c_[i])) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::array<std::int64_t, kMaxLatticeRank> c_{};
  std::uint8_t n_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

}  // namespace affkl
