#include "thetap/theta.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace thetap;
using namespace thetap::testutil;

namespace {

LParameter sp_param(std::vector<std::pair<int, int>> blocks, int triv) {
  LParameter phi;
  phi.group = GroupKind::Sp;
  phi.blocks = std::move(blocks);
  phi.trivial_mult = triv;
  return phi;
}

EtaCharacter eta_of(const LParameter& phi, std::vector<int> a_vals, int b_val = 0) {
  EtaCharacter e;
  e.a_vals = std::move(a_vals);
  e.b_val = component_group(phi).has_b ? b_val : 0;
  return e;
}

HCParam hc(const BasedRootDatum& d, Weight lam, std::vector<Root> psi) {
  HCParam h;
  h.group = d.group;
  h.lambda = std::move(lam);
  sort_roots(psi);
  h.psi = std::move(psi);
  return h;
}

const ThetaCandidate* find_sig(const std::vector<ThetaCandidate>& cs, int p, int q) {
  for (const auto& c : cs)
    if (c.p == p && c.q == q) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("theta candidates for the generic Sp(2) parameter") {
  const auto d = build_datum(GroupId::sp(2));
  const auto cands = theta_hc_candidates(d, hc(d, wt({3, -1}), d.psi_star));
  CHECK(cands.size() == 3);

  const auto* down = find_sig(cands, 2, 2);
  REQUIRE(down != nullptr);
  CHECK(down->param.lambda == wt({3, 1}));  // (3;1)
  CHECK_FALSE(down->level_up);

  const auto* left = find_sig(cands, 4, 2);
  REQUIRE(left != nullptr);
  CHECK(left->param.lambda == wt({3, 0, 1}));  // (3,0;1)
  CHECK(left->level_up);
  // the lift of the generic parameter is the O(4,2) basepoint parameter
  const auto od = build_datum(GroupId::o(4, 2));
  CHECK(left->param.psi == od.psi_star);

  const auto* right = find_sig(cands, 2, 4);
  REQUIRE(right != nullptr);
  CHECK(right->param.lambda == wt({3, 1, 0}));  // (3;1,0)
}

TEST_CASE("theta candidates for Sp(1)") {
  const auto d = build_datum(GroupId::sp(1));
  const auto cands = theta_hc_candidates(d, hc(d, wt({1}), d.psi_star));
  CHECK(cands.size() == 3);
  CHECK(find_sig(cands, 2, 0) != nullptr);
  CHECK(find_sig(cands, 4, 0) != nullptr);
  CHECK(find_sig(cands, 2, 2) != nullptr);
}

TEST_CASE("theta candidates in the odd-zero case") {
  const auto d = build_datum(GroupId::sp(2));
  // blocks [(1,1,0)], z = 1; psi determines the one-sided branch
  const auto psi_plus = chamber_system(d, wt2({4, 1}));   // contains 2e2
  const auto psi_minus = chamber_system(d, wt2({4, -1}));  // contains -2e2
  REQUIRE(hc_valid(d, hc(d, wt({1, 0}), psi_plus)));
  REQUIRE(hc_valid(d, hc(d, wt({1, 0}), psi_minus)));

  auto cands = theta_hc_candidates(d, hc(d, wt({1, 0}), psi_plus));
  CHECK(cands.size() == 2);
  const auto* both = find_sig(cands, 4, 2);
  REQUIRE(both != nullptr);
  CHECK(both->param.lambda == wt({1, 0, 0}));  // (1,0;0)
  CHECK(both->level_up);
  CHECK(find_sig(cands, 4, 0) != nullptr);  // one-sided, level 2n

  cands = theta_hc_candidates(d, hc(d, wt({1, 0}), psi_minus));
  CHECK(find_sig(cands, 4, 2) != nullptr);
  CHECK(find_sig(cands, 2, 2) != nullptr);  // lambda_{0,1} reading
}

TEST_CASE("select_lds_lift picks the proposition signatures") {
  const auto d2 = build_datum(GroupId::sp(2));
  auto sel = select_lds_lift(2, theta_hc_candidates(d2, hc(d2, wt({3, -1}), d2.psi_star)));
  CHECK(sel.p == 4);
  CHECK(sel.q == 2);

  const auto d3 = build_datum(GroupId::sp(3));
  const auto h3 = hc(d3, wt({5, 1, -3}), d3.psi_star);
  REQUIRE(hc_valid(d3, h3));
  sel = select_lds_lift(3, theta_hc_candidates(d3, h3));
  CHECK(sel.p == 4);
  CHECK(sel.q == 4);

  const auto d1 = build_datum(GroupId::sp(1));
  sel = select_lds_lift(1, theta_hc_candidates(d1, hc(d1, wt({1}), d1.psi_star)));
  CHECK(sel.p == 2);
  CHECK(sel.q == 2);

  CHECK_THROWS_WITH_AS(select_lds_lift(2, {}),
                       doctest::Contains("SELECTOR_NOT_UNIQUE"), DomainError);
}

TEST_CASE("theta_hc_inverse") {
  const auto od = build_datum(GroupId::o(4, 2));
  const auto sp = build_datum(GroupId::sp(2));
  const auto back = theta_hc_inverse(4, 2, hc(od, wt({3, 0, 1}), od.psi_star));
  CHECK(back.lambda == wt({3, -1}));
  CHECK(back.psi == sp.psi_star);

  const auto o22 = build_datum(GroupId::o(2, 2));
  CHECK_THROWS_WITH_AS(
      theta_hc_inverse(2, 2, hc(o22, wt({3, 1}), o22.psi_star)),
      doctest::Contains("NO_PREIMAGE"), DomainError);
}

TEST_CASE("theta_hc_inverse round trip over all LDS parameters, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto d = build_datum(GroupId::sp(n));
    for (const auto& phi : all_lds_params(GroupKind::Sp, n)) {
      for (const auto& eta : all_characters(phi)) {
        const auto h = lv_to_hc(d, {phi, eta});
        const auto sel = select_lds_lift(n, theta_hc_candidates(d, h));
        const auto back = theta_hc_inverse(sel.p, sel.q, sel.param);
        CAPTURE(phi.trivial_mult);
        CHECK(back == h);
      }
    }
  }
}

TEST_CASE("theta_lv on the generic Sp(2) parameter") {
  const auto phi = sp_param({{3, 1}, {1, 1}}, 1);
  const auto [sig, lifted] = theta_lv({phi, trivial_eta(phi)});
  CHECK(sig == Signature{4, 2});
  CHECK(lifted.phi.group == GroupKind::O);
  CHECK(lifted.phi.blocks == phi.blocks);
  CHECK(lifted.phi.trivial_mult == 2);
  CHECK(lifted.eta == trivial_eta(lifted.phi));
}

TEST_CASE("theta_lv dimension bookkeeping and restriction") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& phi : all_lds_params(GroupKind::Sp, n)) {
      for (const auto& eta : all_characters(phi)) {
        const auto [sig, lifted] = theta_lv({phi, eta});
        CHECK(sig.p % 2 == 0);
        CHECK(sig.q % 2 == 0);
        CHECK(sig.p + sig.q == 2 * n + 2);
        CHECK(lifted.phi.dim() == phi.dim() + 1);
        CHECK(lifted.phi.blocks == phi.blocks);
        const auto restricted = restrict_character(lifted.eta, lifted.phi, phi);
        CHECK(restricted == eta);
      }
    }
  }
}

TEST_CASE("theta_lv eta example") {
  const auto phi = sp_param({{3, 1}, {1, 1}}, 1);
  const auto [sig, lifted] = theta_lv({phi, eta_of(phi, {1, -1})});
  CHECK(lifted.eta.a_vals == std::vector<int>{1, -1});
}

TEST_CASE("theta_lv_inverse undoes theta_lv") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& phi : all_lds_params(GroupKind::Sp, n)) {
      for (const auto& eta : all_characters(phi)) {
        const LVParam lv{phi, eta};
        const auto [sig, lifted] = theta_lv(lv);
        const auto back = theta_lv_inverse(sig, lifted);
        CHECK(back == lv);
      }
    }
  }

  LVParam no_triv;
  no_triv.phi.group = GroupKind::O;
  no_triv.phi.blocks = {{3, 1}, {1, 1}};
  no_triv.phi.trivial_mult = 0;
  no_triv.eta = trivial_eta(no_triv.phi);
  CHECK_THROWS_WITH_AS(theta_lv_inverse(Signature{4, 2}, no_triv),
                       doctest::Contains("NO_TRIVIAL_TO_REMOVE"), DomainError);
}

TEST_CASE("commuting square: translate . theta_lv = theta_hc . translate") {
  for (int n = 1; n <= 3; ++n) {
    const auto d = build_datum(GroupId::sp(n));
    for (const auto& phi : all_lds_params(GroupKind::Sp, n)) {
      for (const auto& eta : all_characters(phi)) {
        const LVParam lv{phi, eta};
        const auto h = lv_to_hc(d, lv);
        const auto sel = select_lds_lift(n, theta_hc_candidates(d, h));
        const auto [sig, lifted] = theta_lv(lv);
        const auto h2 = lv_to_hc(quasi_split_datum(lifted.phi), lifted);
        CHECK(sig == Signature{sel.p, sel.q});
        CHECK(h2 == sel.param);
      }
    }
  }
}

TEST_CASE("theta output sign is always +1") {
  const auto d = build_datum(GroupId::sp(2));
  for (const auto& phi : all_lds_params(GroupKind::Sp, 2))
    for (const auto& eta : all_characters(phi)) {
      const auto h = lv_to_hc(d, {phi, eta});
      for (const auto& c : theta_hc_candidates(d, h)) CHECK(c.param.xi == 1);
    }
}

TEST_CASE("theta_tempered") {
  const auto phi = sp_param({{3, 1}, {1, 1}}, 1);
  TemperedParam tp;
  tp.core = {phi, trivial_eta(phi)};

  // s = t = 0 reduces to theta_lv
  auto [sig, lifted] = theta_tempered(tp);
  const auto [sig0, core0] = theta_lv(tp.core);
  CHECK(sig == sig0);
  CHECK(lifted.core == core0);
  CHECK(lifted.gl1.empty());
  CHECK(lifted.gl2.empty());

  // one GL1 factor over the Sp(2) core: (p'-q')/2 = 1, so the sign flips
  tp.gl1 = {{1, Rat(0)}};
  std::tie(sig, lifted) = theta_tempered(tp);
  CHECK(sig == Signature{5, 3});
  REQUIRE(lifted.gl1.size() == 1);
  CHECK(lifted.gl1[0].first == -1);

  // Sp(3) core lands on (4,4): no twist
  const auto phi3 = sp_param({{5, 1}, {3, 1}, {1, 1}}, 1);
  TemperedParam tp3;
  tp3.core = {phi3, trivial_eta(phi3)};
  tp3.gl1 = {{1, Rat(0)}, {-1, Rat(0)}};
  tp3.gl2 = {{4, Rat(0)}};
  std::tie(sig, lifted) = theta_tempered(tp3);
  CHECK(sig == Signature{4 + 2 + 2, 4 + 2 + 2});
  CHECK(lifted.gl1[0].first == 1);
  CHECK(lifted.gl1[1].first == -1);
  CHECK(lifted.gl2 == tp3.gl2);

  tp3.gl1 = {{1, Rat(1, 2)}};
  CHECK_THROWS_WITH_AS(theta_tempered(tp3), doctest::Contains("NONUNITARY_FACTOR"),
                       DomainError);
}
