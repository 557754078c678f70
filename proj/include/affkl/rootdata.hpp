#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affkl/weight.hpp"

namespace affkl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed datum, table, element text, violated preconditions.
struct InputError : Error {
  using Error::Error;
};

// A computed identity failed; this is never expected to happen.
struct ConsistencyError : Error {
  using Error::Error;
};

// Datum description before validation. Either `type` ("C2", "A1xA2", ...) or `cartan`.
// Without explicit lattice data the simply connected lattice (fundamental weight
// coordinates) is used.
struct DatumConfig {
  std::string type;
  std::optional<IntMatrix> cartan;
  std::optional<IntMatrix> embedding;  // simple roots, one row per root, lattice coordinates
  std::optional<IntMatrix> coroots;    // simple coroots, one row per coroot, dual coordinates
  std::string label;
};

// Cartan matrix convention: cartan[i][j] = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix_of_type(const std::string& type);

class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> build(const DatumConfig& cfg);
  static std::shared_ptr<const RootDatum> from_type(const std::string& type);
  // Parses the versioned JSON configuration.
  static std::shared_ptr<const RootDatum> from_json_text(const std::string& text);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int lattice_rank() const { return lattice_rank_; }
  bool semisimple() const { return rank_ == lattice_rank_; }
  const IntMatrix& cartan() const { return cartan_; }

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const std::vector<Weight>& positive_coroots() const { return pos_coroots_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  // coordinates of positive roots / coroots in the simple (co)root basis
  const std::vector<std::vector<std::int64_t>>& root_coordinates() const { return root_coords_; }
  const std::vector<std::vector<std::int64_t>>& coroot_coordinates() const { return coroot_coords_; }
  int root_height(int k) const { return root_heights_[k]; }
  int coroot_height(int k) const { return coroot_heights_[k]; }
  // index in positive_roots() of a simple root
  int simple_index(int i) const { return i; }
  // Index of a root (sign encoded: +k+1 or -(k+1)), 0 if not a root.
  int root_index(const Weight& r) const;

  std::int64_t pair(const Weight& lambda, const Weight& covector) const { return lambda.dot(covector); }
  std::int64_t pair_coroot(const Weight& lambda, int k) const { return lambda.dot(pos_coroots_[k]); }
  std::int64_t pair_simple(const Weight& lambda, int i) const { return lambda.dot(simple_coroots_[i]); }
  Weight reflect(const Weight& lambda, int k) const;

  const Weight& two_rho() const { return two_rho_; }
  std::optional<Weight> rho() const;
  const Weight& varsigma() const { return varsigma_; }
  const std::vector<Weight>& fundamental_weights() const { return fund_weights_; }
  // Weight with prescribed pairings against the simple coroots, in the span of the
  // chosen fundamental weights.
  Weight weight_with_pairings(const std::vector<std::int64_t>& pairings) const;

  // Dynkin components as lists of simple indices, ordered by smallest member.
  const std::vector<std::vector<int>>& components() const { return components_; }
  // Positive root alpha_0 of component c whose coroot is the highest coroot.
  int affine_root(int c) const { return affine_roots_[c]; }
  int coxeter_number() const { return coxeter_; }
  int component_coxeter_number(int c) const { return component_coxeter_[c]; }

  // Root lattice membership and coordinates in the simple roots.
  std::optional<std::vector<std::int64_t>> root_lattice_coords(const Weight& lambda) const;
  bool in_root_lattice(const Weight& lambda) const { return root_lattice_coords(lambda).has_value(); }

  std::uint64_t hash() const { return hash_; }
  std::string hash_hex() const;

 private:
  RootDatum() = default;
  void finish();

  std::string label_;
  int rank_ = 0;
  int lattice_rank_ = 0;
  IntMatrix cartan_;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::vector<Weight> pos_roots_, pos_coroots_;
  std::vector<std::vector<std::int64_t>> root_coords_, coroot_coords_;
  std::vector<int> root_heights_, coroot_heights_;
  Weight two_rho_;
  Weight varsigma_;
  std::vector<Weight> fund_weights_;
  std::vector<std::vector<int>> components_;
  std::vector<int> affine_roots_;
  std::vector<int> component_coxeter_;
  int coxeter_ = 0;
  std::uint64_t hash_ = 0;
  IntMatrix root_matrix_;  // lattice_rank x rank, columns are simple roots
  std::vector<std::pair<Weight, int>> root_lookup_;
};

struct ComplexityBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t improved = 0;
};

// lo = 2<rho^vee, rho>, hi = 4<rho^vee, rho> - l(w_f), improved = 2<rho^vee, rho> - l(w_f)
ComplexityBounds complexity_bounds(const RootDatum& d);

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull);
std::string hex64(std::uint64_t h);

}  // namespace affkl
