#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "affkl/characters.hpp"

namespace affkl {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kReportSchema = 1;

// Everything built on one datum.
struct Session {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const ExtendedWeyl> weyl;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const ParabolicModules> modules;
  std::shared_ptr<const PeriodicModule> periodic;
  std::shared_ptr<const Characters> characters;

  // A non-empty cache_dir preloads the persistent KL cache from there.
  static Session make(std::shared_ptr<const RootDatum> d, const std::filesystem::path& cache_dir = {});
  // "A1", "A1~", "C2", "A1xA2" ...
  static Session from_type(const std::string& type, const std::filesystem::path& cache_dir = {});
  static Session from_file(const std::filesystem::path& path, const std::filesystem::path& cache_dir = {});
};

// "builtin" or a JSON file.
PCanonicalTable load_table(const Session& s, const std::string& source);

struct VerifyOptions {
  int max_len = -1;  // -1: per-datum default
  int window = -1;
  unsigned jobs = 1;
  bool timing = false;
  std::uint64_t seed = 20240611;
  int samples = 100;
};

int default_max_len(const Session& s);
int default_window(const Session& s);

// Suites: lemma-rho, main, periodic, orders, all. The report is deterministic unless timing is on.
nlohmann::json run_suite(const std::string& suite, const Session& s, const PCanonicalTable& t, const VerifyOptions& o);
bool report_passed(const nlohmann::json& report);
// Header shared by all machine-readable outputs.
nlohmann::json report_meta(const Session& s, const PCanonicalTable* t);

// Runs f(i) for i < n on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))>;

}  // namespace affkl

#include "affkl/parallel.inl"
