#pragma once

#include "thetap/translate.hpp"

namespace thetap {

struct ThetaCandidate {
  int p = 0, q = 0;
  HCParam param;
  std::string case_tag;
  bool level_up = false;       // p + q == 2n + 2
  bool bit_preferred = false;  // which case-3 branch the zero-boundary bit picks
};

// Theorem-level case analysis on a Harish-Chandra parameter of Sp(n).
std::vector<ThetaCandidate> theta_hc_candidates(const BasedRootDatum& d,
                                                const HCParam& h);

// Unique limit-of-discrete-series lift at p + q = 2n + 2.
ThetaCandidate select_lds_lift(int n, const std::vector<ThetaCandidate>& cands);

// Going-down inverse on parameters: O(p,q), p+q = 2n+2 -> Sp(n).
HCParam theta_hc_inverse(int p, int q, const HCParam& h);

struct Signature {
  int p = 0, q = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q;
  }
};

// (phi, eta) -> (signature, (phi + 1, eta')) through the HC route.
std::pair<Signature, LVParam> theta_lv(const LVParam& lv, int max_rank = 8);
LVParam theta_lv_inverse(const Signature& sig, const LVParam& lvp);

struct TemperedParam {
  LVParam core;                           // LDS part
  std::vector<std::pair<int, Rat>> gl2;   // (m_i, s_i)
  std::vector<std::pair<int, Rat>> gl1;   // (eps_i, kappa_i)

  friend bool operator==(const TemperedParam& a, const TemperedParam& b) {
    return a.core == b.core && a.gl2 == b.gl2 && a.gl1 == b.gl1;
  }
};

std::pair<Signature, TemperedParam> theta_tempered(const TemperedParam& tp,
                                                   int max_rank = 8);

}  // namespace thetap
