#include <doctest.h>

#include <algorithm>

#include "affkl/rootdata.hpp"

using namespace affkl;

TEST_CASE("A1 simply connected") {
  auto d = RootDatum::from_type("A1");
  CHECK(d->rank() == 1);
  CHECK(d->num_positive_roots() == 1);
  CHECK(d->varsigma() == Weight{1});
  CHECK(*d->rho() == Weight{1});
  CHECK(d->pair_simple(d->varsigma(), 0) == 1);
  CHECK(d->pair_simple(Weight{0}, 0) == 0);
  CHECK(d->coxeter_number() == 2);
}

TEST_CASE("C2 roots and heights") {
  auto d = RootDatum::from_type("C2");
  REQUIRE(d->num_positive_roots() == 4);
  std::vector<int> h;
  for (int k = 0; k < 4; ++k) h.push_back(d->root_height(k));
  CHECK(h == std::vector<int>{1, 1, 2, 3});
  CHECK(d->coxeter_number() == 4);
  for (int i = 0; i < 2; ++i) CHECK(d->pair_simple(*d->rho(), i) == 1);
  // <rho, theta^vee> for the highest coroot
  const int k = d->affine_root(0);
  CHECK(d->pair_coroot(*d->rho(), k) == 3);
  CHECK(d->coroot_height(k) == 3);
}

TEST_CASE("pairing of rho with coroots is the coroot height") {
  for (auto t : {"A2", "B3", "C3", "G2", "D4", "F4", "A1xA2"}) {
    auto d = RootDatum::from_type(t);
    for (int k = 0; k < d->num_positive_roots(); ++k) {
      CHECK(d->pair(d->two_rho(), d->positive_coroots()[k]) == 2 * d->coroot_height(k));
    }
  }
}

TEST_CASE("simple reflections permute positive roots other than the simple one") {
  for (auto t : {"A3", "B2", "C3", "G2", "E6"}) {
    auto d = RootDatum::from_type(t);
    for (int i = 0; i < d->rank(); ++i) {
      for (int k = 0; k < d->num_positive_roots(); ++k) {
        if (k == i) continue;
        Weight r = d->reflect(d->positive_roots()[k], i);
        CHECK(d->root_index(r) > 0);
      }
    }
  }
}

TEST_CASE("root counts of the classical and exceptional types") {
  CHECK(RootDatum::from_type("E8")->num_positive_roots() == 120);
  CHECK(RootDatum::from_type("F4")->num_positive_roots() == 24);
  CHECK(RootDatum::from_type("D5")->num_positive_roots() == 20);
  CHECK(RootDatum::from_type("G2")->coxeter_number() == 6);
  CHECK(RootDatum::from_type("E8")->coxeter_number() == 30);
}

TEST_CASE("complexity bounds") {
  auto b = complexity_bounds(*RootDatum::from_type("A1"));
  CHECK(b.lo == 1);
  CHECK(b.hi == 1);
  CHECK(b.improved == 0);
  b = complexity_bounds(*RootDatum::from_type("C2"));
  CHECK(b.lo == 7);
  CHECK(b.hi == 10);
  CHECK(b.improved == 3);
  b = complexity_bounds(*RootDatum::from_type("A2"));
  CHECK(b.lo == 4);
  CHECK(b.hi == 5);
  CHECK(b.improved == 1);
}

TEST_CASE("pair mismatch in explicit lattice data is rejected") {
  DatumConfig cfg;
  cfg.cartan = IntMatrix{{2}};
  cfg.embedding = IntMatrix{{1, -1}};
  cfg.coroots = IntMatrix{{1, 0}};
  CHECK_THROWS_AS(RootDatum::build(cfg), InputError);
}

TEST_CASE("inconsistent and infinite Cartan data are rejected") {
  DatumConfig cfg;
  cfg.cartan = IntMatrix{{2, -1}, {0, 2}};
  CHECK_THROWS_AS(RootDatum::build(cfg), InputError);
  cfg.cartan = IntMatrix{{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(RootDatum::build(cfg), InputError);
}

TEST_CASE("GL2-type datum: varsigma is the lexicographic minimum of the smallest box") {
  // X = Z^2, alpha = (1,-1), alpha^vee = (1,-1)
  DatumConfig cfg;
  cfg.cartan = IntMatrix{{2}};
  cfg.embedding = IntMatrix{{1, -1}};
  cfg.coroots = IntMatrix{{1, -1}};
  auto d = RootDatum::build(cfg);
  CHECK(d->lattice_rank() == 2);
  CHECK_FALSE(d->semisimple());
  // solutions (a, a-1); sup-norm 1 gives (0,-1) and (1,0); lex min is (0,-1)
  CHECK(d->varsigma() == Weight{0, -1});
  CHECK(d->pair_simple(d->varsigma(), 0) == 1);
}

TEST_CASE("adjoint PGL2 is rejected") {
  DatumConfig cfg;
  cfg.cartan = IntMatrix{{2}};
  cfg.embedding = IntMatrix{{1}};
  cfg.coroots = IntMatrix{{2}};
  CHECK_THROWS_AS(RootDatum::build(cfg), InputError);
}

TEST_CASE("JSON configuration") {
  auto d = RootDatum::from_json_text(R"({"schema":1,"type":"C2","cartan":null,"lattice":"simply_connected"})");
  CHECK(d->num_positive_roots() == 4);
  auto e = RootDatum::from_json_text(R"({"schema":1,"type":null,"cartan":[[2,-1],[-1,2]],"lattice":"simply_connected"})");
  CHECK(e->num_positive_roots() == 3);
  CHECK_THROWS_AS(RootDatum::from_json_text(R"({"schema":2,"type":"A1"})"), InputError);
  CHECK_THROWS_AS(RootDatum::from_json_text("not json"), InputError);
  CHECK(d->hash() == RootDatum::from_type("C2~")->hash());
  CHECK(d->hash() != e->hash());
}

TEST_CASE("root lattice membership") {
  auto d = RootDatum::from_type("A1");
  CHECK(d->in_root_lattice(Weight{2}));
  CHECK_FALSE(d->in_root_lattice(Weight{1}));
  auto c = RootDatum::from_type("C2");
  CHECK(c->in_root_lattice(c->simple_roots()[0] + c->simple_roots()[1]));
}
