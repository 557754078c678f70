#include <doctest.h>

#include <atomic>

#include "affkl/verify.hpp"

using namespace affkl;
using json = nlohmann::json;

namespace {

const json& checks_of(const json& report, const std::string& suite) {
  for (const auto& p : report["suites"])
    if (p["suite"] == suite) return p["checks"];
  throw std::runtime_error("suite missing: " + suite);
}

}  // namespace

TEST_CASE("parallel_map keeps index order and rethrows") {
  const auto r = parallel_map(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  REQUIRE(r.size() == 100);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == static_cast<int>(i * i));
  CHECK(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
  CHECK_THROWS_AS(parallel_map(50, 3,
                               [](std::size_t i) {
                                 if (i == 17) throw InputError("boom");
                                 return 0;
                               }),
                  InputError);
}

TEST_CASE("session construction") {
  const Session a = Session::from_type("A1~");
  const Session b = Session::from_type("A1");
  CHECK(a.datum->hash() == b.datum->hash());
  CHECK_THROWS_AS(Session::from_type("Q7"), InputError);
  CHECK_THROWS_AS(Session::from_file("/nonexistent/datum.json"), InputError);
  CHECK(default_max_len(Session::from_type("A2")) == 8);
  CHECK(default_max_len(Session::from_type("C2")) == 6);
  CHECK(default_window(a) == 10);
  CHECK(default_window(Session::from_type("C2")) == 6);
}

TEST_CASE("lemma-rho and orders suites pass on C2 and carry the metadata") {
  const Session s = Session::from_type("C2");
  const PCanonicalTable t = load_table(s, "builtin");
  VerifyOptions o;
  const json r = run_suite("lemma-rho", s, t, o);
  CHECK(report_passed(r));
  CHECK(r["tool"] == "affkl");
  CHECK(r["version"] == kToolVersion);
  CHECK(r["schema"] == kReportSchema);
  CHECK(r["datum"]["hash"] == s.datum->hash_hex());
  CHECK(r["table"]["hash"] == t.hash_hex());
  CHECK_FALSE(r.contains("seconds"));

  o.max_len = 8;
  const json ord = run_suite("orders", s, t, o);
  CHECK(report_passed(ord));
  bool bounds_seen = false;
  for (const auto& c : checks_of(ord, "orders"))
    if (c["name"] == "complexity_bounds") {
      bounds_seen = true;
      CHECK(c["info"]["lo"] == 7);
      CHECK(c["info"]["hi"] == 10);
      CHECK(c["info"]["improved"] == 3);
    }
  CHECK(bounds_seen);
}

TEST_CASE("main suite: per-w rows, independent of the thread count") {
  const Session s = Session::from_type("A2");
  const PCanonicalTable t = load_table(s, "builtin");
  VerifyOptions o;
  o.max_len = 5;
  const json r1 = run_suite("main", s, t, o);
  o.jobs = 4;
  const json r4 = run_suite("main", s, t, o);
  CHECK(r1.dump() == r4.dump());
  CHECK(report_passed(r1));
  const auto& main = checks_of(r1, "main")[0];
  CHECK(main["name"] == "phi_kl");
  CHECK(main["rows"].size() == main["passed"].get<std::size_t>());
  CHECK(main["rows"][0]["status"] == "pass");
}

TEST_CASE("periodic suite on A1 with a small window") {
  const Session s = Session::from_type("A1");
  const PCanonicalTable t = load_table(s, "builtin");
  VerifyOptions o;
  o.window = 6;
  o.samples = 20;
  o.jobs = 2;
  const json r = run_suite("periodic", s, t, o);
  CHECK(report_passed(r));
  for (const auto& c : checks_of(r, "periodic")) {
    CHECK(c["failed"] == 0);
    CHECK(c["passed"].get<int>() > 0);
  }
}

TEST_CASE("timing is opt-in and unknown suites are input errors") {
  const Session s = Session::from_type("A1");
  const PCanonicalTable t = load_table(s, "builtin");
  VerifyOptions o;
  o.timing = true;
  const json r = run_suite("lemma-rho", s, t, o);
  CHECK(r.contains("seconds"));
  CHECK(checks_of(r, "lemma-rho")[0].contains("seconds"));
  CHECK_THROWS_AS(run_suite("everything", s, t, o), InputError);
  CHECK_THROWS_AS(load_table(s, "/nonexistent/table.json"), InputError);
}
