#pragma once

#include <string>
#include <vector>

#include "thetap/types.hpp"

namespace thetap {

// One irreducible summand of a Weil-group parameter that is not part of the
// self-dual block/trivial bookkeeping: chi_{eps,s} or rho_{m,s}.
struct WRSummand {
  bool two_dim = false;
  int eps = 1;    // one-dim only
  int m = 0;      // two-dim only, normalized m >= 0
  Rat s;          // exponent

  bool self_dual() const { return s.is_zero(); }
  int dim() const { return two_dim ? 2 : 1; }
};

// Formal sum c_1 rho_{l_1} + ... + c_k rho_{l_k} + trivial_mult * 1 + other.
// Sp parameters have odd trivial_mult (target SO_{2n+1}), O parameters even.
struct LParameter {
  GroupKind group = GroupKind::Sp;
  std::vector<std::pair<int, int>> blocks;  // (lambda_i, c_i), lambda strictly decreasing
  int trivial_mult = 0;
  std::vector<WRSummand> other;

  int dim() const {
    int t = trivial_mult;
    for (auto& [l, c] : blocks) t += 2 * c;
    for (auto& w : other) t += w.dim();
    return t;
  }
  // Number of 1-summands beyond the parity baseline: trivial_mult = 2z+1 (Sp)
  // or 2z (O).
  int z() const {
    return group == GroupKind::Sp ? (trivial_mult - 1) / 2 : trivial_mult / 2;
  }
  // Rank of the group the parameter belongs to.
  int rank() const {
    return group == GroupKind::Sp ? (dim() - 1) / 2 : dim() / 2;
  }
  friend bool operator==(const LParameter& a, const LParameter& b) {
    return a.group == b.group && a.blocks == b.blocks &&
           a.trivial_mult == b.trivial_mult;
  }
};

enum class ParamClass { Discrete, LimitOfDiscrete, Tempered, General };
std::string param_class_str(ParamClass c);

void check_lparam(const LParameter& phi);  // MALFORMED on bad invariants
ParamClass classify(const LParameter& phi);

struct ComponentGroup {
  int k = 0;        // one a-generator per block
  bool has_b = false;
};
ComponentGroup component_group(const LParameter& phi);

// Character of A_phi. b_val is 0 when b is absent. refined, when non-empty,
// lists the r+z signs of the regularized parameter (block-constant).
struct EtaCharacter {
  std::vector<int> a_vals;
  int b_val = 0;
  std::vector<int> refined;

  friend bool operator==(const EtaCharacter& a, const EtaCharacter& b) {
    return a.a_vals == b.a_vals && a.b_val == b.b_val;
  }
};

EtaCharacter trivial_eta(const LParameter& phi);
// The block-constant refined vector of length r+z.
std::vector<int> refine_eta(const LParameter& phi, const EtaCharacter& eta);

struct Regularized {
  int r = 0, z = 0;
  std::vector<std::vector<int>> a_slots;  // refined slot indices per block (0-based)
};
Regularized regularize(const LParameter& phi);

// Restriction along A_phi -> A_phi' for phi' = phi plus extra trivials.
EtaCharacter restrict_character(const EtaCharacter& eta_src,
                                const LParameter& phi_src,
                                const LParameter& phi_dst);

// Multiset {lambda_i ^ c_i} u {0 ^ z}, sorted descending.
std::vector<Rat> infinitesimal_character(const LParameter& phi);

// Block lambdas occur with either parity convention in the wild; mixed
// parity within one parameter is only linted, never rejected.
bool mixed_parity(const LParameter& phi);

std::vector<EtaCharacter> all_characters(const LParameter& phi);

}  // namespace thetap
