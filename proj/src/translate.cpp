#include "thetap/translate.hpp"

#include <algorithm>
#include <numeric>

namespace thetap {

GroupId quasi_split_group(GroupKind kind, int rank) {
  if (kind == GroupKind::Sp) return GroupId::sp(rank);
  if (rank % 2 == 0) return GroupId::o(rank, rank);
  return GroupId::o(rank + 1, rank - 1);
}

BasedRootDatum quasi_split_datum(const LParameter& phi) {
  return build_datum(quasi_split_group(phi.group, phi.rank()));
}

namespace {

void require_lds(const LParameter& phi) {
  const ParamClass c = classify(phi);
  if (c != ParamClass::Discrete && c != ParamClass::LimitOfDiscrete)
    throw DomainError("NOT_LDS",
                      "operation needs a (limit of) discrete series parameter");
}

// e-block basepoint value as a torsion exponent (0 or 2); the f-block carries
// the opposite one.
int eblock_exp(const BasedRootDatum& d) {
  const TorusTorsion xb = basepoint(d);
  return d.eblock > 0 ? xb.exps[0] : (xb.exps[0] + 2) % 4;
}

// Template point of the signature-(2a,2b) form inside the rank-m torus.
TorusTorsion form_template(const BasedRootDatum& qs, int a) {
  const int se = eblock_exp(qs);
  TorusTorsion t;
  t.exps.assign(qs.rank, (se + 2) % 4);
  for (int i = 0; i < a; ++i) t.exps[i] = se;
  return t;
}

}  // namespace

HCParam basepoint_hc(const BasedRootDatum& d, const LParameter& phi) {
  require_lds(phi);
  if (phi.rank() != d.rank)
    throw DomainError("LENGTH_MISMATCH", "parameter rank != datum rank");
  const std::vector<Rat> values = infinitesimal_character(phi);
  HCParam h;
  h.group = d.group;
  h.lambda.assign(d.rank, Rat(0));
  for (int j = 0; j < d.rank; ++j)
    h.lambda[d.slot_coord[j]] = Rat(d.slot_sign[j]) * values[j];
  h.psi = d.psi_star;
  h.xi = 1;
  return h;
}

TorusTorsion eta_to_point(const BasedRootDatum& d, const LParameter& phi,
                          const EtaCharacter& eta) {
  require_lds(phi);
  if (phi.rank() != d.rank)
    throw DomainError("LENGTH_MISMATCH", "parameter rank != datum rank");
  const std::vector<int> refined = refine_eta(phi, eta);
  TorusTorsion x = basepoint(d);
  for (int j = 0; j < d.rank; ++j)
    if (refined[j] < 0) {
      int& e = x.exps[d.slot_coord[j]];
      e = (e + 2) % 4;
    }
  return x;
}

namespace {

// Equivalence moves fixing both the form template and lambda: permutations
// inside equal-value runs of each block, and (O only) even flip sets
// supported on zero coordinates.
std::vector<WeylElement> lambda_stabilizer(const BasedRootDatum& d,
                                           const Weight& lam) {
  std::vector<std::pair<int, int>> runs;  // [lo, hi)
  int lo = 0;
  for (int i = 1; i <= d.rank; ++i) {
    const bool cut = i == d.rank || i == d.eblock || !(lam[i] == lam[lo]);
    if (cut) {
      runs.push_back({lo, i});
      lo = i;
    }
  }
  std::vector<WeylElement> perms{weyl_identity(d.rank)};
  for (auto [a, b] : runs) {
    std::vector<int> idx(b - a);
    std::iota(idx.begin(), idx.end(), a);
    std::vector<WeylElement> next;
    std::vector<int> cur = idx;
    do {
      for (const WeylElement& base : perms) {
        WeylElement w = base;
        for (int i = 0; i < b - a; ++i) w.perm[a + i] = cur[i];
        next.push_back(w);
      }
    } while (std::next_permutation(cur.begin(), cur.end()));
    perms = std::move(next);
  }
  if (d.group.kind == GroupKind::Sp) return perms;

  std::vector<int> zero_coords;
  for (int i = 0; i < d.rank; ++i)
    if (lam[i].is_zero()) zero_coords.push_back(i);
  std::vector<WeylElement> out;
  for (std::uint64_t bits = 0; bits < (1ull << zero_coords.size()); ++bits) {
    if (__builtin_popcountll(bits) % 2) continue;  // stay inside D
    for (const WeylElement& base : perms) {
      WeylElement w = base;
      for (std::size_t t = 0; t < zero_coords.size(); ++t)
        if ((bits >> t) & 1) w.flip[zero_coords[t]] = -1;
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

std::vector<HCParam> hc_equivalent_forms(const BasedRootDatum& d,
                                         const HCParam& h) {
  std::vector<HCParam> out;
  for (const WeylElement& k : lambda_stabilizer(d, h.lambda)) {
    HCParam cand = h;
    cand.lambda = act_on_weight(k, h.lambda);
    cand.psi = act_on_system(k, h.psi);
    if (!(cand.lambda == h.lambda)) continue;
    if (!hc_valid(d, cand)) continue;
    if (std::find(out.begin(), out.end(), cand) == out.end())
      out.push_back(cand);
  }
  return out;
}

HCParam normalize_hc(const BasedRootDatum& d, const HCParam& h) {
  HCParam best = h;
  sort_roots(best.psi);
  bool have = hc_valid(d, best);
  for (const HCParam& cand : hc_equivalent_forms(d, h)) {
    if (!have || cand.psi < best.psi) {
      best = cand;
      have = true;
    }
  }
  return best;
}

namespace {

// Direct construction of a valid transported parameter: each slot carries its
// infinitesimal value, its chamber magnitude and the sign picked up from the
// refined character; sorting the slots per target side by (value, chamber)
// yields a dominant shape whose chamber vector still alternates correctly.
HCParam transported_parameter(const BasedRootDatum& d,
                              const BasedRootDatum& target,
                              const LParameter& phi,
                              const std::vector<int>& refined, int se) {
  const std::vector<Rat> values = infinitesimal_character(phi);
  const Weight rho = half_sum(d.psi_star, d.rank);

  struct Slot {
    Rat lam, chamber;
    bool eside;
  };
  std::vector<Slot> slots(d.rank);
  for (int j = 0; j < d.rank; ++j) {
    const int coord = d.slot_coord[j];
    if (d.group.kind == GroupKind::Sp) {
      // the transport flip at slot j is forced to be the refined sign
      slots[j].lam = Rat(d.slot_sign[j] * refined[j]) * values[j];
      slots[j].chamber = Rat(refined[j]) * rho[coord];
      slots[j].eside = true;
    } else {
      // flips act trivially on +-1 torsion entries, so the slot keeps its
      // positive value and orientation; the refined sign only moves its side
      slots[j].lam = values[j];
      slots[j].chamber = rho[coord];
      const int base_exp = coord < d.eblock ? se : (se + 2) % 4;
      const int exp = refined[j] < 0 ? (base_exp + 2) % 4 : base_exp;
      slots[j].eside = exp == se;
    }
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.eside != b.eside) return a.eside;
    if (a.lam != b.lam) return b.lam < a.lam;
    return b.chamber < a.chamber;
  });

  HCParam out;
  out.group = target.group;
  out.xi = 1;
  Weight chamber(d.rank);
  out.lambda.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    out.lambda[i] = slots[i].lam;
    chamber[i] = slots[i].chamber;
  }
  out.psi = chamber_system(target, chamber);
  return out;
}

}  // namespace

HCParam lv_to_hc(const BasedRootDatum& d, const LVParam& lv, int max_rank) {
  check_rank_bound(d, max_rank);
  require_lds(lv.phi);
  const TorusTorsion x_eta = eta_to_point(d, lv.phi, lv.eta);

  BasedRootDatum target;
  TorusTorsion x_t;
  int se = 0;
  if (d.group.kind == GroupKind::Sp) {
    target = d;
    x_t = basepoint(d);
  } else {
    se = eblock_exp(d);
    int a = 0;
    for (int e : x_eta.exps) a += e == se;
    target = build_datum(GroupId::o(2 * a, 2 * (d.rank - a)));
    x_t = form_template(d, a);
  }

  const std::vector<int> refined = refine_eta(lv.phi, lv.eta);
  const HCParam direct = transported_parameter(d, target, lv.phi, refined, se);
  if (hc_valid(target, direct)) return normalize_hc(target, direct);

  // Fallback: first valid transport in the index order of W. Any valid
  // transport lands in the same normal form, so the two paths agree.
  const HCParam base = basepoint_hc(d, lv.phi);
  const std::uint64_t ord = weyl_order(d);
  for (std::uint64_t idx = 0; idx < ord; ++idx) {
    const WeylElement v = weyl_at(d, idx);
    if (!(act_on_torus(v, x_eta) == x_t)) continue;
    HCParam cand;
    cand.group = target.group;
    cand.lambda = act_on_weight(v, base.lambda);
    cand.psi = act_on_system(v, base.psi);
    cand.xi = 1;
    if (!hc_valid(target, cand)) continue;
    return normalize_hc(target, cand);
  }
  throw DomainError("TRANSPORT_FAILED",
                    "no valid transported parameter exists for " +
                        target.group.str());
}

LVParam hc_to_lv(const HCParam& h, int max_rank) {
  const BasedRootDatum target = build_datum(h.group);
  if (!hc_valid(target, h))
    throw DomainError("INVALID_HC", "hc_to_lv needs a valid parameter");

  const BlockStructure bs = block_structure(h.lambda, h.group);
  LParameter phi;
  phi.group = h.group.kind;
  for (const Block& b : bs.blocks) phi.blocks.push_back({b.value, b.p + b.q});
  phi.trivial_mult =
      h.group.kind == GroupKind::Sp ? 2 * bs.z + 1 : 2 * (bs.z + bs.z2);

  const BasedRootDatum qs = quasi_split_datum(phi);
  const HCParam normal = normalize_hc(target, h);
  LVParam out;
  out.phi = phi;
  bool found = false;
  for (const EtaCharacter& eta : all_characters(phi)) {
    LVParam lv{phi, eta};
    const HCParam image = lv_to_hc(qs, lv, max_rank);
    if (image.group == h.group && image.lambda == normal.lambda &&
        image.psi == normal.psi) {
      if (found)
        throw DomainError("INVALID_HC", "parameter matches several characters");
      out.eta = eta;
      found = true;
    }
  }
  if (!found) throw DomainError("INVALID_HC", "parameter matches no character");
  return out;
}

}  // namespace thetap
