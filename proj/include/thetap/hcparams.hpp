#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetap/weyl.hpp"

namespace thetap {

// Harish-Chandra parameter (lambda, Psi) for Sp, (lambda, xi, Psi) for O.
// lambda is integral in the e/f basis; Psi a positive system choice.
struct HCParam {
  GroupId group;
  Weight lambda;
  std::vector<Root> psi;  // kept sorted
  int xi = 1;

  friend bool operator==(const HCParam& a, const HCParam& b) {
    return a.group == b.group && a.lambda == b.lambda && a.psi == b.psi &&
           a.xi == b.xi;
  }
};

struct Block {
  int value = 0;  // lambda_i
  int p = 0;      // plus-side (Sp) / e-side (O) multiplicity
  int q = 0;
  friend bool operator==(const Block& a, const Block& b) {
    return a.value == b.value && a.p == b.p && a.q == b.q;
  }
};

struct BlockStructure {
  std::vector<Block> blocks;  // decreasing values
  int z = 0;    // Sp: zero count; O: e-side zero count
  int z2 = 0;   // O: f-side zero count; Sp: always 0
  int p0() const { int s = 0; for (auto& b : blocks) s += b.p; return s; }
  int q0() const { int s = 0; for (auto& b : blocks) s += b.q; return s; }
};

// Extracts (lambda_i, p_i, q_i) and zero counts; MALFORMED_SHAPE when lambda
// does not have the admissible block pattern (shape only, not |p-q| bounds).
BlockStructure block_structure(const Weight& lambda, const GroupId& g);

struct HCViolation {
  std::string what;
  std::optional<Root> root;
};

// Conditions: (a) compact positives contained, (b) dominance, (c) zero-pairing
// simples non-compact, plus the block-shape bounds.
std::vector<HCViolation> validate_hc(const BasedRootDatum& d, const HCParam& h);
bool hc_valid(const BasedRootDatum& d, const HCParam& h);

// mu = lambda + rho(Psi) - 2 rho_c; INVALID_PARAM when validate_hc fails.
Weight minimal_ktype(const BasedRootDatum& d, const HCParam& h);

// L-packet of a regular dominant lambda at a strong involution x: one
// parameter (w^-1 lambda, w^-1 psi_star) per canonical coset of W/W(T,K).
std::vector<HCParam> enumerate_packet(const BasedRootDatum& d,
                                      const TorusTorsion& x, const Weight& lambda,
                                      int max_rank = 8);

}  // namespace thetap
