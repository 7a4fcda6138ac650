#include "thetap/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "thetap/wscan.hpp"

namespace thetap {

WeylElement weyl_identity(int rank) {
  WeylElement w;
  w.perm.resize(rank);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.flip.assign(rank, 1);
  return w;
}

bool is_identity(const WeylElement& w) {
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    if (w.perm[i] != static_cast<int>(i) || w.flip[i] != 1) return false;
  return true;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  const int n = static_cast<int>(a.perm.size());
  WeylElement c;
  c.perm.resize(n);
  c.flip.resize(n);
  for (int i = 0; i < n; ++i) c.perm[i] = a.perm[b.perm[i]];
  for (int j = 0; j < n; ++j) {
    // target j of a*b came from a-target j, which a fed from position k.
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (a.perm[i] == j) { k = i; break; }
    c.flip[j] = a.flip[j] * b.flip[k];
  }
  return c;
}

WeylElement inverse(const WeylElement& w) {
  const int n = static_cast<int>(w.perm.size());
  WeylElement v;
  v.perm.resize(n);
  v.flip.resize(n);
  for (int i = 0; i < n; ++i) v.perm[w.perm[i]] = i;
  for (int i = 0; i < n; ++i) v.flip[i] = w.flip[w.perm[i]];
  return v;
}

bool weyl_lex_less(const WeylElement& a, const WeylElement& b) {
  if (a.perm != b.perm) return a.perm < b.perm;
  return a.flip > b.flip;  // +1 sorts before -1
}

WeylElement reflect(const BasedRootDatum& d, const Root& alpha) {
  if (!is_root(d, alpha)) throw DomainError("NOT_A_ROOT", "reflect");
  int i = -1, j = -1;
  for (int k = 0; k < d.rank; ++k)
    if (alpha[k] != 0) (i < 0 ? i : j) = k;
  WeylElement w = weyl_identity(d.rank);
  if (j < 0) {
    w.flip[i] = -1;  // long root +-2e_i
  } else if (alpha[i] * alpha[j] < 0) {
    std::swap(w.perm[i], w.perm[j]);  // e_i - e_j type
  } else {
    std::swap(w.perm[i], w.perm[j]);  // e_i + e_j type
    w.flip[i] = w.flip[j] = -1;
  }
  return w;
}

Weight act_on_weight(const WeylElement& w, const Weight& lam) {
  const int n = static_cast<int>(w.perm.size());
  if (static_cast<int>(lam.size()) != n)
    throw DomainError("LENGTH_MISMATCH", "act_on_weight");
  Weight out(n);
  for (int i = 0; i < n; ++i) {
    out[w.perm[i]] = lam[i];
    if (w.flip[w.perm[i]] < 0) out[w.perm[i]] = -out[w.perm[i]];
  }
  return out;
}

Root act_on_root(const WeylElement& w, const Root& a) {
  const int n = static_cast<int>(w.perm.size());
  Root out(n, 0);
  for (int i = 0; i < n; ++i) out[w.perm[i]] = w.flip[w.perm[i]] * a[i];
  return out;
}

std::vector<Root> act_on_system(const WeylElement& w, const std::vector<Root>& psi) {
  std::vector<Root> out;
  out.reserve(psi.size());
  for (const Root& r : psi) out.push_back(act_on_root(w, r));
  sort_roots(out);
  return out;
}

TorusTorsion act_on_torus(const WeylElement& w, const TorusTorsion& x) {
  const int n = static_cast<int>(w.perm.size());
  if (static_cast<int>(x.exps.size()) != n)
    throw DomainError("LENGTH_MISMATCH", "act_on_torus");
  TorusTorsion y;
  y.exps.resize(n);
  for (int i = 0; i < n; ++i) {
    int e = x.exps[i];
    if (w.flip[w.perm[i]] < 0) e = (4 - e) % 4;
    y.exps[w.perm[i]] = e;
  }
  return y;
}

void check_rank_bound(const BasedRootDatum& d, int max_rank) {
  if (d.rank > max_rank)
    throw DomainError("RANK_TOO_LARGE",
                      "rank " + std::to_string(d.rank) + " exceeds bound " +
                          std::to_string(max_rank));
}

std::uint64_t weyl_order(const BasedRootDatum& d) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= d.rank; ++i) fact *= i;
  const int flips = d.group.kind == GroupKind::Sp ? d.rank : d.rank - 1;
  return fact << flips;
}

WeylElement weyl_at(const BasedRootDatum& d, std::uint64_t index) {
  WeylElement w;
  w.perm.resize(d.rank);
  w.flip.resize(d.rank);
  detail::decode_weyl(d, index, w.perm.data(), w.flip.data());
  return w;
}

void enumerate_weyl(const BasedRootDatum& d,
                    const std::function<void(const WeylElement&)>& fn,
                    int max_rank) {
  check_rank_bound(d, max_rank);
  const std::uint64_t ord = weyl_order(d);
  for (std::uint64_t idx = 0; idx < ord; ++idx) fn(weyl_at(d, idx));
}

std::vector<WeylElement> compact_subgroup_elements(const BasedRootDatum& d,
                                                   int max_rank) {
  check_rank_bound(d, max_rank);
  const int a = d.eblock, b = d.rank - d.eblock;
  std::vector<int> pe(a), pf(b);
  std::iota(pe.begin(), pe.end(), 0);
  std::iota(pf.begin(), pf.end(), 0);
  std::vector<WeylElement> out;
  std::vector<int> qe = pe;
  do {
    std::vector<int> qf = pf;
    do {
      WeylElement w = weyl_identity(d.rank);
      for (int i = 0; i < a; ++i) w.perm[i] = qe[i];
      for (int j = 0; j < b; ++j) w.perm[a + j] = a + qf[j];
      out.push_back(w);
    } while (std::next_permutation(qf.begin(), qf.end()));
  } while (std::next_permutation(qe.begin(), qe.end()));
  std::sort(out.begin(), out.end(), weyl_lex_less);
  return out;
}

int weyl_length(const BasedRootDatum& d, const WeylElement& w) {
  int len = 0;
  for (const Root& r : d.psi_star)
    if (!contains_root(d.psi_star, act_on_root(w, r))) ++len;
  return len;
}

std::optional<WeylElement> solve_transport(const BasedRootDatum& d,
                                           const TorusTorsion& src,
                                           const TorusTorsion& dst,
                                           int max_rank) {
  check_rank_bound(d, max_rank);
  if (static_cast<int>(src.exps.size()) != d.rank ||
      static_cast<int>(dst.exps.size()) != d.rank)
    throw DomainError("LENGTH_MISMATCH", "solve_transport");
  if (src == dst) return weyl_identity(d.rank);
  return transport_scan(d, src, dst);
}

WeylElement coset_canonical(const BasedRootDatum& d, const WeylElement& w,
                            int max_rank) {
  check_rank_bound(d, max_rank);
  WeylElement best = w;
  int best_len = weyl_length(d, w);
  for (const WeylElement& k : compact_subgroup_elements(d, max_rank)) {
    const WeylElement cand = compose(w, k);
    const int len = weyl_length(d, cand);
    if (len < best_len || (len == best_len && weyl_lex_less(cand, best))) {
      best = cand;
      best_len = len;
    }
  }
  return best;
}

}  // namespace thetap
