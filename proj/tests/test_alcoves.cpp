#include <doctest.h>

#include <random>
#include <set>

#include "affkl/alcoves.hpp"
#include "affkl/intlinalg.hpp"

using namespace affkl;

namespace {

AlcoveModel model(const char* t) {
  return AlcoveModel(std::make_shared<ExtendedWeyl>(RootDatum::from_type(t)));
}

// A <= As iff A lies on the negative side of the wall separating the two alcoves.
bool hyperplane_rule(const AlcoveModel& M, const Alcove& a, const Alcove& b) {
  const auto& d = M.weyl().datum();
  const auto D = M.denominator();
  int walls = 0;
  bool below = false;
  for (int k = 0; k < d.num_positive_roots(); ++k) {
    const auto pa = d.pair_coroot(a.bary, k), pb = d.pair_coroot(b.bary, k);
    if (floor_div(pa, D) != floor_div(pb, D)) {
      ++walls;
      below = pa < pb;
    }
  }
  REQUIRE(walls == 1);
  return below;
}

}  // namespace

TEST_CASE("bijection with W and the right action") {
  auto M = model("A1");
  const auto& W = M.weyl();
  CHECK(M.fundamental().elem == W.identity());
  CHECK(M.fundamental().bary == Weight{2});  // rho/h = 1/2 over denominator 4
  for (const auto& x : W.enumerate_W(6)) CHECK(M.act_right(M.fundamental(), x) == M.from_weyl(x));
  CHECK_THROWS_AS(M.from_weyl(W.translation(Weight{1})), InputError);
  auto [om, xr] = W.omega_of_weight(Weight{1});
  CHECK(M.translate(M.fundamental(), Weight{1}) == M.act_left(xr, M.fundamental()));
  CHECK(M.translate(M.fundamental(), Weight{1}).bary == Weight{2 + 4});
}

TEST_CASE("dominance") {
  auto M = model("A1");
  const auto& W = M.weyl();
  CHECK(M.is_dominant(M.fundamental()));
  CHECK_FALSE(M.is_dominant(M.from_weyl(W.generator(1))));
  CHECK(M.is_dominant(M.from_weyl(W.generator(0))));
  for (auto t : {"A1", "A2", "C2"}) {
    auto N = model(t);
    for (const auto& x : N.weyl().enumerate_W(10))
      CHECK(N.is_dominant(N.from_weyl(x)) == N.weyl().is_min_in_coset(x, N.weyl().finite_mask()));
  }
}

TEST_CASE("box representatives") {
  auto M = model("A1");
  const auto& W = M.weyl();
  CHECK(M.box_rep_above(M.fundamental()) == Weight{0});
  CHECK(M.box_rep_below(M.fundamental()) == Weight{1});
  const Alcove a = M.from_weyl(W.generator(0));
  CHECK(M.box_rep_below(a) == Weight{2});
  CHECK(M.box_rep_above(a) == Weight{1});
  auto C = model("C2");
  std::mt19937 rng(11);
  auto xs = C.weyl().enumerate_W(8);
  for (int k = 0; k < 100; ++k) {
    const Alcove b = C.from_weyl(xs[rng() % xs.size()]);
    const Weight nu{static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3};
    CHECK(C.box_rep_below(C.translate(b, nu)) == C.box_rep_below(b) + nu);
    CHECK(C.box_rep_above(C.translate(b, nu)) == C.box_rep_above(b) + nu);
    const Weight mu = C.box_rep_below(b);
    for (int i = 0; i < 2; ++i) {
      const auto D = C.denominator();
      const auto pb = C.pair_bary(b, i);
      const auto pm = C.weyl().datum().pair_simple(mu, i) * D;
      CHECK(pm - D < pb);
      CHECK(pb <= pm);
    }
  }
}

TEST_CASE("hat and check") {
  auto M = model("A1");
  const auto& W = M.weyl();
  CHECK(M.hat(M.from_weyl(W.generator(1))) == M.fundamental());
  for (auto t : {"A1", "A2", "C2"}) {
    auto N = model(t);
    std::mt19937 rng(7);
    auto xs = N.weyl().enumerate_W(8);
    std::set<ExtElem> images;
    for (const auto& x : xs) {
      const Alcove a = N.from_weyl(x);
      const Alcove h = N.hat(a);
      CHECK(N.check(h) == a);
      images.insert(h.elem);
      // hat lands in the upper box of the lower-box representative
      CHECK(N.box_rep_above(h) == N.box_rep_below(a));
    }
    CHECK(images.size() == xs.size());
    const int r = N.weyl().datum().rank();
    for (int k = 0; k < 200; ++k) {
      const Alcove a = N.from_weyl(xs[rng() % xs.size()]);
      Weight nu(r);
      for (int i = 0; i < r; ++i) nu[i] = static_cast<std::int64_t>(rng() % 9) - 4;
      CHECK(N.check(N.hat(a)) == a);
      CHECK(N.hat(N.translate(a, nu)) == N.translate(N.hat(a), nu));
    }
  }
}

TEST_CASE("generic order examples") {
  auto M = model("A1");
  const auto& W = M.weyl();
  const Alcove f = M.fundamental();
  CHECK(M.generic_order(f, f) == Order::Equal);
  CHECK(M.generic_order(f, M.from_weyl(W.generator(0))) == Order::Less);
  CHECK(M.generic_order(M.from_weyl(W.generator(1)), f) == Order::Less);
}

TEST_CASE("generic order on dominant alcoves is the Bruhat order") {
  for (auto t : {"A1", "A2", "C2"}) {
    auto N = model(t);
    std::vector<ExtElem> dom;
    for (const auto& x : N.weyl().enumerate_W(8))
      if (N.weyl().is_fWext(x)) dom.push_back(x);
    for (const auto& x : dom)
      for (const auto& y : dom)
        CHECK(N.generic_order(N.from_weyl(x), N.from_weyl(y)) == N.weyl().bruhat(x, y));
  }
}

TEST_CASE("generic order is translation invariant") {
  auto N = model("C2");
  std::mt19937 rng(5);
  auto xs = N.weyl().enumerate_W(7);
  for (int k = 0; k < 100; ++k) {
    const Alcove a = N.from_weyl(xs[rng() % xs.size()]);
    const Alcove b = N.from_weyl(xs[rng() % xs.size()]);
    const Weight nu{static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4};
    CHECK(N.generic_order(a, b) == N.generic_order(N.translate(a, nu), N.translate(b, nu)));
  }
}

TEST_CASE("wall neighbours follow the hyperplane rule") {
  for (auto t : {"A1", "A2", "C2", "G2"}) {
    auto N = model(t);
    const auto& W = N.weyl();
    for (const auto& x : W.enumerate_W(7))
      for (int g = 0; g < W.num_generators(); ++g) {
        const Alcove a = N.from_weyl(x), b = N.from_weyl(W.right_gen(x, g));
        const bool up = N.below_wall_neighbor(x, g);
        CHECK(up == hyperplane_rule(N, a, b));
        CHECK(up == (N.generic_order(a, b) == Order::Less));
      }
  }
}

TEST_CASE("dot action") {
  auto M = model("A1");
  const auto& W = M.weyl();
  CHECK(W.dot_p(W.identity(), Weight{3}, 5) == Weight{3});
  CHECK(W.dot_p(W.generator(1), Weight{0}, 5) == Weight{-2});
  CHECK(W.dot_p(W.translation(Weight{3}), Weight{0}, 5) == Weight{15});
}
