#pragma once

#include "thetap/hcparams.hpp"
#include "thetap/lparams.hpp"
#include "thetap/strongforms.hpp"

namespace thetap {

struct LVParam {
  LParameter phi;
  EtaCharacter eta;

  friend bool operator==(const LVParam& a, const LVParam& b) {
    return a.phi == b.phi && a.eta == b.eta;
  }
};

// Quasi-split datum of the parameter's inner class: Sp(n) itself, or the
// even orthogonal group of rank m with signature (m,m) / (m+1,m-1).
GroupId quasi_split_group(GroupKind kind, int rank);
BasedRootDatum quasi_split_datum(const LParameter& phi);

// Generic parameter at the basepoint: the infinitesimal character interleaved
// into the alternating slot pattern, with psi_star.
HCParam basepoint_hc(const BasedRootDatum& d, const LParameter& phi);

// x_eta = t . x_b, t = -1 exactly at the coordinates of refined -1 slots.
TorusTorsion eta_to_point(const BasedRootDatum& d, const LParameter& phi,
                          const EtaCharacter& eta);

// All valid parameters equivalent to h: images under value-preserving block
// permutations, plus even zero-coordinate flips for O. Contains h itself.
std::vector<HCParam> hc_equivalent_forms(const BasedRootDatum& d, const HCParam& h);

// Deterministic normal form within the equivalence class above.
HCParam normalize_hc(const BasedRootDatum& d, const HCParam& h);

// Langlands-Vogan -> Harish-Chandra. For O the returned parameter's group
// carries the signature selected by eta.
HCParam lv_to_hc(const BasedRootDatum& d, const LVParam& lv, int max_rank = 8);

// Inverse direction; INVALID_HC when the parameter matches no character.
LVParam hc_to_lv(const HCParam& h, int max_rank = 8);

}  // namespace thetap
