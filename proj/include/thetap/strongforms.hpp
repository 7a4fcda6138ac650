#pragma once

#include <string>
#include <vector>

#include "thetap/weyl.hpp"

namespace thetap {

enum class CentralInv { PlusI, MinusI, Mixed };

std::string central_inv_str(CentralInv z);

struct StrongFormClass {
  TorusTorsion rep;  // lex-minimal exponent vector in its W-orbit
  CentralInv invariant;
  std::string label;
  int tag = 0;  // distinguishes same-name classes (SO*)
};

CentralInv central_invariant(const TorusTorsion& x);

// x_b = exp(i pi rho_vee) for the datum's psi_star.
TorusTorsion basepoint(const BasedRootDatum& d);

// i^(<alpha, exps> mod 4), returned as the exponent mod 4.
int root_eval_exp(const Root& alpha, const TorusTorsion& x);

// True iff alpha(x) = -1 for every alpha in simple_star.
bool is_generic_point(const BasedRootDatum& d, const TorusTorsion& x);

TorusTorsion canonical_orbit_rep(const BasedRootDatum& d, const TorusTorsion& x);

std::vector<StrongFormClass> enumerate_strong_forms(const BasedRootDatum& d,
                                                    CentralInv z,
                                                    int max_rank = 8);

std::string real_form_label(const BasedRootDatum& d, const StrongFormClass& c);

}  // namespace thetap
