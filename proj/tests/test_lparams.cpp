#include "thetap/lparams.hpp"

#include "doctest.h"

using namespace thetap;

namespace {

LParameter sp_param(std::vector<std::pair<int, int>> blocks, int triv) {
  LParameter phi;
  phi.group = GroupKind::Sp;
  phi.blocks = std::move(blocks);
  phi.trivial_mult = triv;
  return phi;
}

LParameter o_param(std::vector<std::pair<int, int>> blocks, int triv) {
  LParameter phi;
  phi.group = GroupKind::O;
  phi.blocks = std::move(blocks);
  phi.trivial_mult = triv;
  return phi;
}

WRSummand chi(int eps, Rat s) {
  WRSummand w;
  w.two_dim = false;
  w.eps = eps;
  w.s = s;
  return w;
}

}  // namespace

TEST_CASE("classify") {
  CHECK(classify(sp_param({{3, 1}, {1, 1}}, 1)) == ParamClass::Discrete);
  CHECK(classify(sp_param({{3, 2}}, 1)) == ParamClass::LimitOfDiscrete);
  CHECK(classify(sp_param({{3, 1}}, 3)) == ParamClass::LimitOfDiscrete);
  CHECK(classify(o_param({{3, 1}, {1, 1}}, 2)) == ParamClass::Discrete);
  CHECK(classify(o_param({{3, 1}}, 4)) == ParamClass::LimitOfDiscrete);

  auto gen = sp_param({}, 1);
  gen.other = {chi(1, Rat(1, 2)), chi(1, Rat(-1, 2))};
  CHECK(classify(gen) == ParamClass::General);
  gen.other = {chi(1, Rat(0))};
  CHECK_THROWS_WITH_AS(classify(gen), doctest::Contains("MALFORMED"), DomainError);

  auto temp = sp_param({{2, 1}}, 1);
  WRSummand rho;  // rho_{m,s} pair member with s = 0 is self-dual, use s != 0
  rho.two_dim = true;
  rho.m = 4;
  rho.s = Rat(0);
  temp.other = {rho};
  CHECK_THROWS_AS(classify(temp), DomainError);  // self-dual belongs in blocks
  temp.other.clear();
  CHECK(classify(temp) == ParamClass::Discrete);

  CHECK_THROWS_AS(classify(sp_param({{1, 1}, {3, 1}}, 1)), DomainError);
  CHECK_THROWS_AS(classify(sp_param({{3, 1}}, 2)), DomainError);  // parity
  CHECK_THROWS_AS(classify(o_param({{3, 1}}, 3)), DomainError);
}

TEST_CASE("component_group") {
  auto g = component_group(sp_param({{3, 1}, {1, 1}}, 1));
  CHECK(g.k == 2);
  CHECK_FALSE(g.has_b);

  g = component_group(sp_param({{3, 1}}, 3));
  CHECK(g.k == 1);
  CHECK(g.has_b);

  g = component_group(o_param({{3, 1}, {1, 1}}, 2));
  CHECK(g.k == 2);
  CHECK(g.has_b);

  g = component_group(o_param({{3, 1}, {1, 1}}, 0));
  CHECK_FALSE(g.has_b);
}

TEST_CASE("character count is 2^(k + has_b)") {
  CHECK(all_characters(sp_param({{3, 1}, {1, 1}}, 1)).size() == 4);
  CHECK(all_characters(sp_param({{3, 1}}, 3)).size() == 4);
  CHECK(all_characters(sp_param({{5, 1}, {3, 1}, {1, 1}}, 1)).size() == 8);
  CHECK(all_characters(o_param({{3, 1}, {1, 1}}, 2)).size() == 8);
}

TEST_CASE("regularize") {
  auto r = regularize(sp_param({{3, 2}}, 1));
  CHECK(r.r == 2);
  CHECK(r.z == 0);
  REQUIRE(r.a_slots.size() == 1);
  CHECK(r.a_slots[0] == std::vector<int>{0, 1});

  r = regularize(sp_param({{3, 1}}, 3));
  CHECK(r.r == 1);
  CHECK(r.z == 1);

  r = regularize(sp_param({}, 1));
  CHECK(r.r == 0);
  CHECK(r.z == 0);

  auto gen = sp_param({}, 1);
  gen.other = {chi(1, Rat(1, 2)), chi(1, Rat(-1, 2))};
  CHECK_THROWS_WITH_AS(regularize(gen), doctest::Contains("NOT_LDS"), DomainError);
}

TEST_CASE("refined characters collapse to block-constant vectors") {
  const auto phi = sp_param({{3, 2}, {1, 1}}, 3);
  EtaCharacter eta;
  eta.a_vals = {-1, 1};
  eta.b_val = -1;
  const auto refined = refine_eta(phi, eta);
  CHECK(refined == std::vector<int>{-1, -1, 1, -1});
}

TEST_CASE("restrict_character") {
  const auto phi_o = o_param({{3, 1}, {1, 1}}, 2);
  const auto phi_sp = sp_param({{3, 1}, {1, 1}}, 1);
  EtaCharacter eta;
  eta.a_vals = {1, -1};
  eta.b_val = 1;

  auto r = restrict_character(eta, phi_o, phi_sp);
  CHECK(r.a_vals == std::vector<int>{1, -1});
  CHECK(r.b_val == 0);  // Sp side with z = 0 has no b

  const auto phi_sp_b = sp_param({{3, 1}}, 3);
  const auto phi_o_b = o_param({{3, 1}}, 4);
  EtaCharacter eta2;
  eta2.a_vals = {-1};
  eta2.b_val = -1;
  r = restrict_character(eta2, phi_o_b, phi_sp_b);
  CHECK(r.a_vals == std::vector<int>{-1});
  CHECK(r.b_val == -1);

  CHECK_THROWS_WITH_AS(restrict_character(eta, phi_o, sp_param({{5, 1}, {1, 1}}, 1)),
                       doctest::Contains("GENERATOR_MISMATCH"), DomainError);
}

TEST_CASE("infinitesimal_character") {
  auto mult = infinitesimal_character(sp_param({{3, 1}, {1, 1}}, 1));
  CHECK(mult == std::vector<Rat>{Rat(3), Rat(1)});
  mult = infinitesimal_character(sp_param({{3, 2}}, 1));
  CHECK(mult == std::vector<Rat>{Rat(3), Rat(3)});
  mult = infinitesimal_character(sp_param({}, 3));
  CHECK(mult == std::vector<Rat>{Rat(0)});
}

TEST_CASE("parity lint") {
  CHECK_FALSE(mixed_parity(sp_param({{3, 1}, {1, 1}}, 1)));
  CHECK(mixed_parity(sp_param({{4, 1}, {1, 1}}, 1)));
  CHECK_FALSE(mixed_parity(sp_param({{4, 1}, {2, 1}}, 1)));
}

TEST_CASE("dimension bookkeeping") {
  CHECK(sp_param({{3, 1}, {1, 1}}, 1).dim() == 5);  // SO_5 target for Sp(2)
  CHECK(sp_param({{3, 1}, {1, 1}}, 1).rank() == 2);
  CHECK(o_param({{3, 1}, {1, 1}}, 2).dim() == 6);
  CHECK(o_param({{3, 1}, {1, 1}}, 2).rank() == 3);
}

TEST_CASE("characters biject with block-constant refined vectors") {
  const auto phi = sp_param({{5, 2}, {3, 1}}, 5);  // r = 3, z = 2
  const auto chars = all_characters(phi);
  std::vector<std::vector<int>> refined;
  for (const auto& eta : chars) refined.push_back(refine_eta(phi, eta));
  // distinct characters give distinct refined vectors
  for (std::size_t i = 0; i < refined.size(); ++i)
    for (std::size_t j = i + 1; j < refined.size(); ++j)
      CHECK(refined[i] != refined[j]);
  // every refined vector is block-constant
  const auto reg = regularize(phi);
  for (const auto& r : refined) {
    for (const auto& slots : reg.a_slots)
      for (int s : slots) CHECK(r[s] == r[slots[0]]);
    for (int jz = 0; jz < reg.z; ++jz) CHECK(r[reg.r + jz] == r[reg.r]);
  }
  CHECK(chars.size() == 8);  // 2^(k + has_b) = 2^3
}
