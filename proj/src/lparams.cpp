#include "thetap/lparams.hpp"

#include <algorithm>

namespace thetap {

std::string param_class_str(ParamClass c) {
  switch (c) {
    case ParamClass::Discrete: return "discrete";
    case ParamClass::LimitOfDiscrete: return "limit_of_discrete";
    case ParamClass::Tempered: return "tempered";
    case ParamClass::General: return "general";
  }
  return "?";
}

void check_lparam(const LParameter& phi) {
  int prev = 1 << 30;
  for (auto& [l, c] : phi.blocks) {
    if (l <= 0 || c <= 0)
      throw DomainError("MALFORMED", "blocks need lambda_i > 0 and c_i > 0");
    if (l >= prev)
      throw DomainError("MALFORMED", "lambda_i must strictly decrease");
    prev = l;
  }
  if (phi.trivial_mult < 0) throw DomainError("MALFORMED", "trivial_mult < 0");
  const int par = phi.group == GroupKind::Sp ? 1 : 0;
  if (phi.other.empty() && phi.trivial_mult % 2 != par)
    throw DomainError("MALFORMED",
                      phi.group == GroupKind::Sp
                          ? "Sp parameters need odd trivial multiplicity"
                          : "O parameters need even trivial multiplicity");
  for (const WRSummand& w : phi.other) {
    if (w.two_dim && w.m < 0)
      throw DomainError("MALFORMED", "rho_{m,s} is normalized with m >= 0");
    if (!w.two_dim && w.eps != 1 && w.eps != -1)
      throw DomainError("MALFORMED", "chi sign must be +-1");
    if (w.self_dual())
      throw DomainError("MALFORMED",
                        "self-dual summands belong in blocks/trivial_mult");
  }
}

ParamClass classify(const LParameter& phi) {
  check_lparam(phi);
  if (phi.other.empty()) {
    bool multiplicity_free = true;
    for (auto& [l, c] : phi.blocks)
      if (c != 1) multiplicity_free = false;
    const bool regular_zeros = phi.z() == 0 ||
                               (phi.group == GroupKind::O && phi.z() == 1);
    if (multiplicity_free && regular_zeros) return ParamClass::Discrete;
    return ParamClass::LimitOfDiscrete;
  }
  for (const WRSummand& w : phi.other)
    if (!w.s.is_zero()) return ParamClass::General;
  return ParamClass::Tempered;
}

ComponentGroup component_group(const LParameter& phi) {
  const ParamClass c = classify(phi);
  if (c == ParamClass::General)
    throw DomainError("NOT_SELF_DUAL_PART",
                      "component group needs a tempered/LDS parameter");
  ComponentGroup g;
  g.k = static_cast<int>(phi.blocks.size());
  g.has_b = phi.z() > 0;
  return g;
}

EtaCharacter trivial_eta(const LParameter& phi) {
  const ComponentGroup g = component_group(phi);
  EtaCharacter e;
  e.a_vals.assign(g.k, 1);
  e.b_val = g.has_b ? 1 : 0;
  return e;
}

Regularized regularize(const LParameter& phi) {
  if (classify(phi) != ParamClass::LimitOfDiscrete &&
      classify(phi) != ParamClass::Discrete)
    throw DomainError("NOT_LDS", "regularize needs a (limit of) discrete parameter");
  Regularized r;
  for (auto& [l, c] : phi.blocks) {
    std::vector<int> slots;
    for (int i = 0; i < c; ++i) slots.push_back(r.r++);
    r.a_slots.push_back(std::move(slots));
  }
  r.z = phi.z();
  return r;
}

std::vector<int> refine_eta(const LParameter& phi, const EtaCharacter& eta) {
  const Regularized reg = regularize(phi);
  const ComponentGroup g = component_group(phi);
  if (static_cast<int>(eta.a_vals.size()) != g.k)
    throw DomainError("GENERATOR_MISMATCH", "eta has wrong number of a-values");
  if (g.has_b && eta.b_val == 0)
    throw DomainError("GENERATOR_MISMATCH", "eta is missing its b-value");
  std::vector<int> refined(reg.r + reg.z, 1);
  for (int i = 0; i < g.k; ++i)
    for (int slot : reg.a_slots[i]) refined[slot] = eta.a_vals[i];
  for (int j = 0; j < reg.z; ++j) refined[reg.r + j] = g.has_b ? eta.b_val : 1;
  return refined;
}

EtaCharacter restrict_character(const EtaCharacter& eta_src,
                                const LParameter& phi_src,
                                const LParameter& phi_dst) {
  const ComponentGroup gs = component_group(phi_src);
  const ComponentGroup gd = component_group(phi_dst);
  if (phi_src.blocks != phi_dst.blocks)
    throw DomainError("GENERATOR_MISMATCH", "blocks differ");
  if (gd.has_b && !gs.has_b)
    throw DomainError("GENERATOR_MISMATCH", "target has b but source does not");
  if (static_cast<int>(eta_src.a_vals.size()) != gs.k)
    throw DomainError("GENERATOR_MISMATCH", "eta does not match source group");
  EtaCharacter out;
  out.a_vals = eta_src.a_vals;
  out.b_val = gd.has_b ? eta_src.b_val : 0;
  return out;
}

std::vector<Rat> infinitesimal_character(const LParameter& phi) {
  check_lparam(phi);
  if (!phi.other.empty())
    throw DomainError("NOT_SELF_DUAL_PART",
                      "infinitesimal character of the self-dual part only");
  std::vector<Rat> mult;
  for (auto& [l, c] : phi.blocks)
    for (int i = 0; i < c; ++i) mult.push_back(Rat(l));
  for (int i = 0; i < phi.z(); ++i) mult.push_back(Rat(0));
  return mult;  // blocks are decreasing, zeros last
}

bool mixed_parity(const LParameter& phi) {
  bool saw_odd = false, saw_even = false;
  for (auto& [l, c] : phi.blocks) (l % 2 ? saw_odd : saw_even) = true;
  return saw_odd && saw_even;
}

std::vector<EtaCharacter> all_characters(const LParameter& phi) {
  const ComponentGroup g = component_group(phi);
  const int gens = g.k + (g.has_b ? 1 : 0);
  std::vector<EtaCharacter> out;
  for (int bits = 0; bits < (1 << gens); ++bits) {
    EtaCharacter e;
    for (int i = 0; i < g.k; ++i) e.a_vals.push_back((bits >> i) & 1 ? -1 : 1);
    e.b_val = g.has_b ? ((bits >> g.k) & 1 ? -1 : 1) : 0;
    out.push_back(e);
  }
  return out;
}

}  // namespace thetap
