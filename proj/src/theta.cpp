#include "thetap/theta.hpp"

#include <algorithm>

namespace thetap {

namespace {

struct SpShape {
  BlockStructure bs;
  int n = 0, P = 0, Q = 0, z = 0, w = 0;
  int p0 = 0, q0 = 0;  // e/f block sizes of the level-2n lift
  bool bit = false;    // orientation of the zero-boundary root in psi
};

// The zero-block orientation bit: +-(e_{P+1} + e_{P+z}) in psi for z > 0.
// At z = 0 the boundary root e_P + e_{P+1} between the last positive and the
// first negative coordinate takes its place; when one side is empty the
// missing coordinate dominates (all-negative prefers the left lift,
// all-positive the right one, matching the generic basepoint lifts).
SpShape sp_shape(const BasedRootDatum& d, const HCParam& h) {
  SpShape s;
  s.bs = block_structure(h.lambda, h.group);
  s.n = d.rank;
  s.P = s.bs.p0();
  s.Q = s.bs.q0();
  s.z = s.bs.z;
  s.w = s.z / 2;
  s.p0 = s.P + s.w;
  s.q0 = s.Q + s.w;
  auto root_at = [&](int a, int b) {  // 0-based coordinates
    Root r(s.n, 0);
    r[a] += 1;
    r[b] += 1;
    return r;
  };
  if (s.z > 0) {
    s.bit = contains_root(h.psi, root_at(s.P, s.P + s.z - 1));
  } else if (s.Q == 0) {
    s.bit = false;
  } else if (s.P == 0) {
    s.bit = true;
  } else {
    s.bit = contains_root(h.psi, root_at(s.P - 1, s.P));
  }
  return s;
}

// Chamber vector of the candidate system: transported strict chamber values
// on the matched coordinates, small fresh values on appended zeros.
HCParam make_candidate(const BasedRootDatum& dsp, const HCParam& h,
                       const SpShape& s, bool add_e, bool add_f, bool e_first) {
  const int A = s.p0 + (add_e ? 1 : 0);
  const int B = s.q0 + (add_f ? 1 : 0);
  const GroupId og = GroupId::o(2 * A, 2 * B);
  const BasedRootDatum od = build_datum(og);

  const Weight v_sp = half_sum(h.psi, dsp.rank);
  Weight v(A + B, Rat(0));
  Weight lam(A + B, Rat(0));
  // signed identification: e_i <-> +e_i, f_j <-> -e_{n-1-j} (0-based)
  for (int i = 0; i < s.p0; ++i) {
    v[i] = v_sp[i];
    lam[i] = h.lambda[i];
  }
  for (int j = 0; j < s.q0; ++j) {
    v[A + j] = -v_sp[s.n - 1 - j];
    lam[A + j] = -h.lambda[s.n - 1 - j];
  }
  if (add_e) v[A - 1] = e_first ? Rat(2, 3) : Rat(1, 3);
  if (add_f) v[A + B - 1] = e_first ? Rat(1, 3) : Rat(2, 3);

  HCParam cand;
  cand.group = og;
  cand.lambda = lam;
  cand.psi = chamber_system(od, v);
  cand.xi = 1;
  return normalize_hc(od, cand);
}

}  // namespace

std::vector<ThetaCandidate> theta_hc_candidates(const BasedRootDatum& d,
                                                const HCParam& h) {
  if (d.group.kind != GroupKind::Sp)
    throw DomainError("INVALID_HC", "lifting starts from an Sp parameter");
  if (!hc_valid(d, h))
    throw DomainError("INVALID_HC", "theta_hc_candidates needs a valid parameter");
  const SpShape s = sp_shape(d, h);
  std::vector<ThetaCandidate> out;
  auto push = [&](bool add_e, bool add_f, bool e_first, std::string tag,
                  bool preferred) {
    ThetaCandidate c;
    c.param = make_candidate(d, h, s, add_e, add_f, e_first);
    c.p = c.param.group.p;
    c.q = c.param.group.q;
    c.case_tag = std::move(tag);
    c.level_up = c.p + c.q == 2 * s.n + 2;
    c.bit_preferred = preferred;
    out.push_back(c);
  };

  if (s.z % 2 == 0) {
    if (s.p0 + s.q0 > 0) push(false, false, true, "z_even_level_2n", false);
    if (s.z > 0) {
      if (s.bit)
        push(true, false, true, "z_even_left", true);
      else
        push(false, true, false, "z_even_right", true);
    } else {
      push(true, false, true, "z0_left", s.bit);
      push(false, true, false, "z0_right", !s.bit);
    }
  } else {
    push(true, true, s.bit, "z_odd_both_sides", true);
    // The one-sided level-2n lift follows the stated parameter (a zero added
    // left resp. right); the source text names the signature (2p0+2, 2q0) in
    // both sub-branches, which only matches the left reading.
    if (s.bit)
      push(true, false, true, "z_odd_level_2n_left", false);
    else
      push(false, true, false,
           "z_odd_level_2n_right(text signature says left)", false);
  }
  return out;
}

ThetaCandidate select_lds_lift(int n, const std::vector<ThetaCandidate>& cands) {
  std::vector<ThetaCandidate> valid;
  for (const ThetaCandidate& c : cands) {
    if (c.p + c.q != 2 * n + 2) continue;
    if (hc_valid(build_datum(c.param.group), c.param)) valid.push_back(c);
  }
  if (valid.size() == 1) return valid[0];
  if (valid.size() > 1) {
    std::vector<ThetaCandidate> preferred;
    for (const ThetaCandidate& c : valid)
      if (c.bit_preferred) preferred.push_back(c);
    if (preferred.size() == 1) return preferred[0];
  }
  throw DomainError("SELECTOR_NOT_UNIQUE",
                    "expected exactly one valid lift, found " +
                        std::to_string(valid.size()));
}

HCParam theta_hc_inverse(int p, int q, const HCParam& h) {
  const BasedRootDatum od = build_datum(GroupId::o(p, q));
  if (!(h.group == od.group) || !hc_valid(od, h))
    throw DomainError("INVALID_HC", "theta_hc_inverse needs a valid O parameter");
  const int m = od.rank, n = m - 1;
  if (n < 1) throw DomainError("NO_PREIMAGE", "rank too small");
  const BasedRootDatum sd = build_datum(GroupId::sp(n));
  const int p0 = od.eblock, q0 = m - p0;
  const HCParam target = normalize_hc(od, h);

  std::vector<int> drops;
  for (int c = 0; c < m; ++c)
    if (target.lambda[c].is_zero()) drops.push_back(c);
  if (drops.empty())
    throw DomainError("NO_PREIMAGE", "no zero coordinate to contract");

  // The appended zero coordinate may sit in any orientation inside the
  // normal form, so contract every equivalent shape of the input.
  for (const HCParam& normal : hc_equivalent_forms(od, target))
  for (int c : drops) {
    // Sp coordinate layout after dropping c
    std::vector<int> ocoord(n), osign(n);
    {
      int at = 0;
      for (int i = 0; i < p0; ++i)
        if (i != c) { ocoord[at] = i; osign[at] = 1; ++at; }
      for (int j = q0 - 1; j >= 0; --j)
        if (p0 + j != c) { ocoord[at] = p0 + j; osign[at] = -1; ++at; }
    }
    HCParam cand;
    cand.group = sd.group;
    cand.lambda.assign(n, Rat(0));
    for (int i = 0; i < n; ++i)
      cand.lambda[i] = Rat(osign[i]) * normal.lambda[ocoord[i]];
    cand.psi.clear();
    auto oroot = [&](int a, int sa, int b, int sb) {
      Root r(m, 0);
      r[a] += sa;
      r[b] += sb;
      return r;
    };
    bool ok = true;
    for (const Root& alpha : sd.roots) {
      int i = -1, j = -1;
      for (int k = 0; k < n; ++k)
        if (alpha[k] != 0) (i < 0 ? i : j) = k;
      bool positive;
      if (j < 0) {
        // long root 2e_i: positive iff both c-mixing roots on its side are
        const int si = alpha[i] > 0 ? 1 : -1;
        positive =
            contains_root(normal.psi,
                          oroot(ocoord[i], si * osign[i], c, 1)) &&
            contains_root(normal.psi, oroot(ocoord[i], si * osign[i], c, -1));
        if (!positive) {
          const bool negative =
              contains_root(normal.psi,
                            oroot(ocoord[i], -si * osign[i], c, 1)) &&
              contains_root(normal.psi, oroot(ocoord[i], -si * osign[i], c, -1));
          if (!negative) { ok = false; break; }
        }
      } else {
        Root push(m, 0);
        push[ocoord[i]] += alpha[i] * osign[i];
        push[ocoord[j]] += alpha[j] * osign[j];
        positive = contains_root(normal.psi, push);
      }
      if (positive) cand.psi.push_back(alpha);
    }
    if (!ok) continue;
    sort_roots(cand.psi);
    if (validate_positive_system(sd, cand.psi)) continue;
    if (!hc_valid(sd, cand)) continue;
    cand = normalize_hc(sd, cand);
    // forward check: the selected lift of the candidate must reproduce h
    try {
      const ThetaCandidate fwd =
          select_lds_lift(n, theta_hc_candidates(sd, cand));
      if (fwd.p == p && fwd.q == q && fwd.param.lambda == target.lambda &&
          fwd.param.psi == target.psi)
        return cand;
    } catch (const DomainError&) {
    }
  }
  throw DomainError("NO_PREIMAGE",
                    "parameter is not the level-(2n+2) lift of an Sp parameter");
}

std::pair<Signature, LVParam> theta_lv(const LVParam& lv, int max_rank) {
  if (lv.phi.group != GroupKind::Sp)
    throw DomainError("NOT_LDS", "theta_lv lifts Sp parameters");
  const int n = lv.phi.rank();
  const BasedRootDatum d = quasi_split_datum(lv.phi);
  const HCParam h = lv_to_hc(d, lv, max_rank);
  const ThetaCandidate sel = select_lds_lift(n, theta_hc_candidates(d, h));
  const LVParam lifted = hc_to_lv(sel.param, max_rank);
  return {Signature{sel.p, sel.q}, lifted};
}

LVParam theta_lv_inverse(const Signature&, const LVParam& lvp) {
  if (lvp.phi.group != GroupKind::O)
    throw DomainError("NO_TRIVIAL_TO_REMOVE",
                      "theta_lv_inverse starts from an O parameter");
  if (lvp.phi.trivial_mult < 2)
    throw DomainError("NO_TRIVIAL_TO_REMOVE",
                      "parameter has no trivial summand to remove");
  LParameter phi = lvp.phi;
  phi.group = GroupKind::Sp;
  phi.trivial_mult -= 1;
  LVParam out;
  out.phi = phi;
  out.eta = restrict_character(lvp.eta, lvp.phi, phi);
  return out;
}

std::pair<Signature, TemperedParam> theta_tempered(const TemperedParam& tp,
                                                   int max_rank) {
  for (const auto& [m, sexp] : tp.gl2)
    if (!sexp.is_zero())
      throw DomainError("NONUNITARY_FACTOR", "GL2 factor exponent must vanish");
  for (const auto& [eps, kappa] : tp.gl1) {
    if (eps != 1 && eps != -1)
      throw DomainError("NONUNITARY_FACTOR", "GL1 sign must be +-1");
    if (!kappa.is_zero())
      throw DomainError("NONUNITARY_FACTOR", "GL1 exponent must vanish");
  }
  auto [sig, core] = theta_lv(tp.core, max_rank);
  TemperedParam out;
  out.core = core;
  out.gl2 = tp.gl2;
  const int twist = ((sig.p - sig.q) / 2) % 2;
  for (const auto& [eps, kappa] : tp.gl1)
    out.gl1.push_back({twist ? -eps : eps, kappa});
  const int sfac = static_cast<int>(tp.gl2.size());
  const int tfac = static_cast<int>(tp.gl1.size());
  return {Signature{sig.p + 2 * sfac + tfac, sig.q + 2 * sfac + tfac}, out};
}

}  // namespace thetap
