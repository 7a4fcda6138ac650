#include "thetap/strongforms.hpp"

#include <algorithm>
#include <set>

namespace thetap {

std::string central_inv_str(CentralInv z) {
  switch (z) {
    case CentralInv::PlusI: return "+I";
    case CentralInv::MinusI: return "-I";
    case CentralInv::Mixed: return "MIXED";
  }
  return "?";
}

CentralInv central_invariant(const TorusTorsion& x) {
  if (x.exps.empty()) return CentralInv::PlusI;
  const int first = (2 * x.exps[0]) % 4;
  for (int e : x.exps)
    if ((2 * e) % 4 != first) return CentralInv::Mixed;
  return first == 0 ? CentralInv::PlusI : CentralInv::MinusI;
}

TorusTorsion basepoint(const BasedRootDatum& d) {
  const Weight rho_vee = half_sum_coroots(d, d.psi_star);
  TorusTorsion x;
  x.exps.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    const Rat twice = rho_vee[i] * Rat(2);
    // 2*rho_vee is integral for these data
    long long v = twice.num();
    x.exps[i] = static_cast<int>(((v % 4) + 4) % 4);
  }
  return x;
}

int root_eval_exp(const Root& alpha, const TorusTorsion& x) {
  int acc = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * x.exps[i];
  return ((acc % 4) + 4) % 4;
}

bool is_generic_point(const BasedRootDatum& d, const TorusTorsion& x) {
  if (central_invariant(x) == CentralInv::Mixed)
    throw DomainError("NONCENTRAL_SQUARE", "x^2 is not central");
  for (const Root& a : d.simple_star)
    if (root_eval_exp(a, x) != 2) return false;
  return true;
}

TorusTorsion canonical_orbit_rep(const BasedRootDatum& d, const TorusTorsion& x) {
  TorusTorsion y;
  y.exps = x.exps;
  if (d.group.kind == GroupKind::Sp) {
    for (int& e : y.exps) e = std::min(e, (4 - e) % 4);
    std::sort(y.exps.begin(), y.exps.end());
    return y;
  }
  // D type: single flips are available as soon as some coordinate is
  // flip-invariant; otherwise only the parity of the i <-> -i swaps survives.
  const bool has_invariant =
      std::any_of(y.exps.begin(), y.exps.end(), [](int e) { return e % 2 == 0; });
  if (has_invariant) {
    for (int& e : y.exps) e = std::min(e, (4 - e) % 4);
    std::sort(y.exps.begin(), y.exps.end());
    return y;
  }
  int threes = static_cast<int>(std::count(y.exps.begin(), y.exps.end(), 3));
  std::fill(y.exps.begin(), y.exps.end(), 1);
  if (threes % 2 == 1) y.exps.back() = 3;
  return y;
}

std::vector<StrongFormClass> enumerate_strong_forms(const BasedRootDatum& d,
                                                    CentralInv z, int max_rank) {
  check_rank_bound(d, max_rank);
  if (z == CentralInv::Mixed)
    throw DomainError("MALFORMED", "central invariant must be +I or -I");
  const int lo = z == CentralInv::PlusI ? 0 : 1;  // entries lo or lo+2
  std::set<TorusTorsion> reps;
  for (std::uint64_t bits = 0; bits < (1ull << d.rank); ++bits) {
    TorusTorsion x;
    x.exps.resize(d.rank);
    for (int i = 0; i < d.rank; ++i)
      x.exps[i] = (bits >> i) & 1 ? lo + 2 : lo;
    reps.insert(canonical_orbit_rep(d, x));
  }
  std::vector<StrongFormClass> out;
  int sostar = 0;
  for (const TorusTorsion& r : reps) {
    StrongFormClass c;
    c.rep = r;
    c.invariant = z;
    if (d.group.kind == GroupKind::O && z == CentralInv::MinusI) c.tag = ++sostar;
    c.label = real_form_label(d, c);
    out.push_back(c);
  }
  return out;
}

std::string real_form_label(const BasedRootDatum& d, const StrongFormClass& c) {
  if (static_cast<int>(c.rep.exps.size()) != d.rank)
    throw DomainError("UNKNOWN_CLASS", "rep length mismatch");
  const CentralInv inv = central_invariant(c.rep);
  if (inv != c.invariant || inv == CentralInv::Mixed)
    throw DomainError("UNKNOWN_CLASS", "inconsistent central invariant");
  if (d.group.kind == GroupKind::Sp) {
    if (inv == CentralInv::MinusI)
      return "Sp_" + std::to_string(2 * d.rank) + "(R)";
    const int minus = static_cast<int>(
        std::count(c.rep.exps.begin(), c.rep.exps.end(), 2));
    return "Sp(" + std::to_string(d.rank - minus) + "," + std::to_string(minus) + ")";
  }
  if (inv == CentralInv::MinusI) return "SO*(" + std::to_string(2 * d.rank) + ")";
  const int minus =
      static_cast<int>(std::count(c.rep.exps.begin(), c.rep.exps.end(), 2));
  return "SO(" + std::to_string(2 * (d.rank - minus)) + "," +
         std::to_string(2 * minus) + ")";
}

}  // namespace thetap
