#include "thetap/hcparams.hpp"

#include <algorithm>
#include <map>

namespace thetap {

namespace {

bool weakly_decreasing(const Weight& v, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo + 1; i < hi; ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

BlockStructure block_structure(const Weight& lambda, const GroupId& g) {
  for (const Rat& x : lambda)
    if (!x.is_integer())
      throw DomainError("MALFORMED_SHAPE", "lambda must be integral");
  BlockStructure bs;
  std::map<int, Block, std::greater<int>> by_value;
  if (g.kind == GroupKind::Sp) {
    if (static_cast<int>(lambda.size()) != g.rank())
      throw DomainError("MALFORMED_SHAPE", "lambda length != rank");
    if (!weakly_decreasing(lambda, 0, lambda.size()))
      throw DomainError("MALFORMED_SHAPE",
                        "Sp lambda must be weakly decreasing");
    for (const Rat& x : lambda) {
      const int v = static_cast<int>(x.num());
      if (v == 0) ++bs.z;
      else if (v > 0) ++by_value[v].p;
      else ++by_value[-v].q;
    }
  } else {
    const int p0 = g.eblock(), m = g.rank();
    if (static_cast<int>(lambda.size()) != m)
      throw DomainError("MALFORMED_SHAPE", "lambda length != rank");
    if (!weakly_decreasing(lambda, 0, p0) || !weakly_decreasing(lambda, p0, m))
      throw DomainError("MALFORMED_SHAPE",
                        "O lambda blocks must be weakly decreasing");
    for (int i = 0; i < m; ++i) {
      const int v = static_cast<int>(lambda[i].num());
      if (v < 0)
        throw DomainError("MALFORMED_SHAPE", "O lambda entries must be >= 0");
      if (v == 0) ++(i < p0 ? bs.z : bs.z2);
      else ++(i < p0 ? by_value[v].p : by_value[v].q);
    }
  }
  for (auto& [v, b] : by_value) {
    b.value = v;
    bs.blocks.push_back(b);
  }
  return bs;
}

std::vector<HCViolation> validate_hc(const BasedRootDatum& d, const HCParam& h) {
  std::vector<HCViolation> out;
  if (!(h.group == d.group)) {
    out.push_back({"group mismatch between datum and parameter", {}});
    return out;
  }
  if (static_cast<int>(h.lambda.size()) != d.rank) {
    out.push_back({"lambda length != rank", {}});
    return out;
  }
  for (const Rat& x : h.lambda)
    if (!x.is_integer()) {
      out.push_back({"lambda must be integral", {}});
      return out;
    }
  if (h.xi != 1 && h.xi != -1) out.push_back({"xi must be +-1", {}});
  if (auto v = validate_positive_system(d, h.psi)) {
    out.push_back({"psi: " + v->describe(), v->a});
    return out;
  }
  std::vector<Root> psi = h.psi;
  sort_roots(psi);
  for (const Root& c : d.compact_positive)
    if (!contains_root(psi, c))
      out.push_back({"compact positive root missing from psi", c});
  for (const Root& a : psi) {
    const Rat pr = pair_coroot(d, h.lambda, a);
    if (pr.sign() < 0) out.push_back({"lambda not dominant for psi", a});
  }
  for (const Root& a : simple_roots_of(d, psi)) {
    if (pair_coroot(d, h.lambda, a).is_zero() && is_compact(d, a))
      out.push_back({"compact simple root pairs to zero with lambda", a});
  }
  try {
    const BlockStructure bs = block_structure(h.lambda, d.group);
    for (const Block& b : bs.blocks)
      if (std::abs(b.p - b.q) > 1)
        out.push_back({"block multiplicities differ by more than one (lambda=" +
                           std::to_string(b.value) + ")",
                       {}});
    if (d.group.kind == GroupKind::O && std::abs(bs.z - bs.z2) > 1)
      out.push_back({"zero blocks differ by more than one", {}});
  } catch (const DomainError& e) {
    out.push_back({e.what(), {}});
  }
  return out;
}

bool hc_valid(const BasedRootDatum& d, const HCParam& h) {
  return validate_hc(d, h).empty();
}

Weight minimal_ktype(const BasedRootDatum& d, const HCParam& h) {
  if (!hc_valid(d, h))
    throw DomainError("INVALID_PARAM", "minimal_ktype needs a valid parameter");
  const Weight rho = half_sum(h.psi, d.rank);
  const Weight rc = half_sum(d.compact_positive, d.rank);
  Weight mu(d.rank);
  for (int i = 0; i < d.rank; ++i) mu[i] = h.lambda[i] + rho[i] - rc[i] - rc[i];
  return mu;
}

namespace {

// Right coset w.W(T,K) is determined by the flip vector together with the
// multiset of targets each block's sources land on.
std::string coset_key(const BasedRootDatum& d, const WeylElement& w) {
  std::string key;
  std::vector<int> e_targets, f_targets;
  for (int i = 0; i < d.rank; ++i)
    (i < d.eblock ? e_targets : f_targets).push_back(w.perm[i]);
  std::sort(e_targets.begin(), e_targets.end());
  std::sort(f_targets.begin(), f_targets.end());
  for (int t : e_targets) key += static_cast<char>('a' + t);
  key += '|';
  for (int t : f_targets) key += static_cast<char>('a' + t);
  key += '|';
  for (int i = 0; i < d.rank; ++i) key += w.flip[i] < 0 ? '-' : '+';
  return key;
}

}  // namespace

std::vector<HCParam> enumerate_packet(const BasedRootDatum& d,
                                      const TorusTorsion& x, const Weight& lambda,
                                      int max_rank) {
  check_rank_bound(d, max_rank);
  if (static_cast<int>(x.exps.size()) != d.rank ||
      static_cast<int>(lambda.size()) != d.rank)
    throw DomainError("LENGTH_MISMATCH", "enumerate_packet");
  for (const Root& a : d.roots)
    if (pair_coroot(d, lambda, a).is_zero())
      throw DomainError("IRREGULAR_LAMBDA", "lambda pairs to zero with a root");
  for (const Root& a : d.psi_star)
    if (pair_coroot(d, lambda, a).sign() < 0)
      throw DomainError("IRREGULAR_LAMBDA", "lambda not dominant for psi_star");

  struct Entry {
    WeylElement w;
    int len;
  };
  std::map<std::string, Entry> best;
  enumerate_weyl(
      d,
      [&](const WeylElement& w) {
        const std::string key = coset_key(d, w);
        const int len = weyl_length(d, w);
        auto it = best.find(key);
        if (it == best.end() || len < it->second.len ||
            (len == it->second.len && weyl_lex_less(w, it->second.w)))
          best[key] = Entry{w, len};
      },
      max_rank);

  std::vector<std::pair<std::pair<int, std::string>, HCParam>> items;
  for (auto& [key, e] : best) {
    const WeylElement wi = inverse(e.w);
    HCParam h;
    h.group = d.group;
    h.lambda = act_on_weight(wi, lambda);
    h.psi = act_on_system(wi, d.psi_star);
    items.push_back({{e.len, key}, h});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<HCParam> out;
  for (auto& [k, h] : items)
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  return out;
}

}  // namespace thetap
