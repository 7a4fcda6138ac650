#include "thetap/strongforms.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace thetap;
using namespace thetap::testutil;

namespace {

TorusTorsion torsion(std::initializer_list<int> exps) {
  TorusTorsion x;
  x.exps = std::vector<int>(exps);
  return x;
}

// Independent oracle: the orbit by full W closure.
std::set<std::vector<int>> orbit_of(const BasedRootDatum& d, const TorusTorsion& x) {
  std::set<std::vector<int>> orbit;
  enumerate_weyl(d, [&](const WeylElement& w) {
    orbit.insert(act_on_torus(w, x).exps);
  });
  return orbit;
}

}  // namespace

TEST_CASE("central_invariant") {
  CHECK(central_invariant(torsion({3, 3})) == CentralInv::MinusI);
  CHECK(central_invariant(torsion({0, 2})) == CentralInv::PlusI);
  CHECK(central_invariant(torsion({1, 0})) == CentralInv::Mixed);
}

TEST_CASE("basepoints") {
  const auto sp2 = build_datum(GroupId::sp(2));
  CHECK(basepoint(sp2) == torsion({3, 3}));  // (-i, -i)

  const auto o42 = build_datum(GroupId::o(4, 2));
  CHECK(basepoint(o42) == torsion({0, 0, 2}));  // (1, 1, -1)

  for (int n = 1; n <= 6; ++n)
    CHECK(central_invariant(basepoint(build_datum(GroupId::sp(n)))) ==
          CentralInv::MinusI);
  for (int p0 = 1; p0 <= 3; ++p0)
    for (int q0 = 0; q0 <= 3; ++q0)
      if (p0 + q0 >= 2)
        CHECK(central_invariant(basepoint(build_datum(GroupId::o(2 * p0, 2 * q0)))) ==
              CentralInv::PlusI);
}

TEST_CASE("is_generic_point") {
  const auto d = build_datum(GroupId::sp(2));
  CHECK(is_generic_point(d, basepoint(d)));
  // (i,i): both Delta_* simples evaluate to -1 (it is the basepoint of the
  // opposite Whittaker datum), while (1,1) evaluates everything to +1.
  CHECK(is_generic_point(d, torsion({1, 1})));
  CHECK_FALSE(is_generic_point(d, torsion({0, 0})));
  CHECK_FALSE(is_generic_point(d, torsion({1, 3})));  // (i, -i)
  CHECK_THROWS_WITH_AS(is_generic_point(d, torsion({1, 0})),
                       doctest::Contains("NONCENTRAL_SQUARE"), DomainError);

  // basepoints are generic for every datum up to rank 8
  std::vector<GroupId> gs;
  for (int n = 1; n <= 8; ++n) gs.push_back(GroupId::sp(n));
  for (int p0 = 0; p0 <= 4; ++p0)
    for (int q0 = 0; q0 <= 4; ++q0)
      if (p0 + q0 >= 2 && p0 + q0 <= 8 && std::abs(p0 - q0) <= 1)
        gs.push_back(GroupId::o(2 * p0, 2 * q0));
  for (const GroupId& g : gs) {
    CAPTURE(g.str());
    const auto d = build_datum(g);
    CHECK(is_generic_point(d, basepoint(d)));
  }
}

TEST_CASE("strong form counts and labels for C_2") {
  const auto d = build_datum(GroupId::sp(2));
  const auto plus = enumerate_strong_forms(d, CentralInv::PlusI);
  REQUIRE(plus.size() == 3);
  CHECK(plus[0].label == "Sp(2,0)");
  CHECK(plus[1].label == "Sp(1,1)");
  CHECK(plus[1].rep == torsion({0, 2}));
  CHECK(plus[2].label == "Sp(0,2)");

  const auto minus = enumerate_strong_forms(d, CentralInv::MinusI);
  REQUIRE(minus.size() == 1);
  CHECK(minus[0].label == "Sp_4(R)");
}

TEST_CASE("strong form counts and labels for D_3") {
  const auto d = build_datum(GroupId::o(4, 2));
  const auto plus = enumerate_strong_forms(d, CentralInv::PlusI);
  REQUIRE(plus.size() == 4);
  CHECK(plus[0].label == "SO(6,0)");
  CHECK(plus[1].label == "SO(4,2)");
  CHECK(plus[2].label == "SO(2,4)");
  CHECK(plus[3].label == "SO(0,6)");

  const auto minus = enumerate_strong_forms(d, CentralInv::MinusI);
  REQUIRE(minus.size() == 2);
  CHECK(minus[0].label == "SO*(6)");
  CHECK(minus[1].label == "SO*(6)");
  CHECK(minus[0].tag != minus[1].tag);
}

TEST_CASE("canonical reps agree with brute-force orbits") {
  for (const GroupId& g : {GroupId::sp(3), GroupId::o(4, 2), GroupId::o(2, 2)}) {
    const auto d = build_datum(g);
    for (int lo : {0, 1}) {
      for (std::uint64_t bits = 0; bits < (1ull << d.rank); ++bits) {
        TorusTorsion x;
        for (int i = 0; i < d.rank; ++i)
          x.exps.push_back((bits >> i) & 1 ? lo + 2 : lo);
        const auto orbit = orbit_of(d, x);
        CHECK(canonical_orbit_rep(d, x).exps == *orbit.begin());
      }
    }
  }
}

TEST_CASE("orbit sizes partition the torsion cube") {
  for (const GroupId& g : {GroupId::sp(3), GroupId::sp(4), GroupId::o(4, 2),
                           GroupId::o(4, 4)}) {
    const auto d = build_datum(g);
    for (auto z : {CentralInv::PlusI, CentralInv::MinusI}) {
      std::uint64_t total = 0;
      for (const auto& c : enumerate_strong_forms(d, z))
        total += orbit_of(d, c.rep).size();
      CHECK(total == (1ull << d.rank));
    }
  }
}

TEST_CASE("strong form class counts, ranks up to 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto d = build_datum(GroupId::sp(n));
    CHECK(enumerate_strong_forms(d, CentralInv::PlusI).size() ==
          static_cast<std::size_t>(n + 1));
    CHECK(enumerate_strong_forms(d, CentralInv::MinusI).size() == 1);
  }
  for (int m = 2; m <= 6; ++m) {
    const auto d = build_datum(GroupId::o(2 * (m / 2), 2 * (m - m / 2)));
    CHECK(enumerate_strong_forms(d, CentralInv::PlusI).size() ==
          static_cast<std::size_t>(m + 1));
    CHECK(enumerate_strong_forms(d, CentralInv::MinusI).size() == 2);
  }
}

TEST_CASE("split class representative of C_2 is (i,i)") {
  const auto d = build_datum(GroupId::sp(2));
  const auto minus = enumerate_strong_forms(d, CentralInv::MinusI);
  REQUIRE(minus.size() == 1);
  CHECK(minus[0].rep == torsion({1, 1}));
  CHECK(real_form_label(d, minus[0]) == "Sp_4(R)");
}
