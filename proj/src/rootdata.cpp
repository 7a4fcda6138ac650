#include "thetap/rootdata.hpp"

#include <algorithm>
#include <set>

namespace thetap {

void sort_roots(std::vector<Root>& rs) { std::sort(rs.begin(), rs.end()); }

bool contains_root(const std::vector<Root>& sys, const Root& a) {
  return std::binary_search(sys.begin(), sys.end(), a);
}

namespace {

Root unit(int rank, int i, int s) {
  Root r(rank, 0);
  r[i] = s;
  return r;
}

Root pm(int rank, int i, int si, int j, int sj) {
  Root r(rank, 0);
  r[i] = si;
  r[j] = sj;
  return r;
}

std::vector<Root> all_roots_sp(int n) {
  std::vector<Root> rs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) rs.push_back(pm(n, i, si, j, sj));
  for (int i = 0; i < n; ++i)
    for (int s : {2, -2}) rs.push_back(unit(n, i, s));
  sort_roots(rs);
  return rs;
}

std::vector<Root> all_roots_d(int m) {
  std::vector<Root> rs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) rs.push_back(pm(m, i, si, j, sj));
  sort_roots(rs);
  return rs;
}

}  // namespace

BasedRootDatum build_datum(const GroupId& g) {
  BasedRootDatum d;
  d.group = g;
  if (g.kind == GroupKind::Sp) {
    const int n = g.n;
    if (n < 1) throw DomainError("EMPTY_RANK", "Sp rank must be >= 1");
    d.rank = n;
    d.eblock = n;
    d.roots = all_roots_sp(n);
    // Signed slot chain: coordinates 1, n, 2, n-1, ... with alternating signs.
    for (int j = 0; j < n; ++j) {
      d.slot_coord.push_back(j % 2 == 0 ? j / 2 : n - 1 - j / 2);
      d.slot_sign.push_back(j % 2 == 0 ? 1 : -1);
    }
    for (int j = 0; j + 1 < n; ++j) {
      Root r(n, 0);
      r[d.slot_coord[j]] += d.slot_sign[j];
      r[d.slot_coord[j + 1]] -= d.slot_sign[j + 1];
      d.simple_star.push_back(r);
    }
    Root last(n, 0);
    last[d.slot_coord[n - 1]] = 2 * d.slot_sign[n - 1];
    d.simple_star.push_back(last);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.compact_positive.push_back(pm(n, i, 1, j, -1));
  } else {
    const int p = g.p, q = g.q;
    if (p % 2 != 0 || q % 2 != 0)
      throw DomainError("ODD_SIGNATURE", "O(p,q) needs p,q even, got " + g.str());
    if (p < 0 || q < 0 || p + q < 2)
      throw DomainError("EMPTY_RANK", "O(p,q) needs p+q >= 2");
    const int p0 = p / 2, q0 = q / 2, m = p0 + q0;
    d.rank = m;
    d.eblock = p0;
    d.roots = all_roots_d(m);
    // Slots interleave e_1, f_1, e_2, f_2, ... while both blocks last, then
    // run out the longer block. Coordinates: e_i -> i-1, f_j -> p0+j-1.
    {
      // Interleave starting from the larger block so the quasi-split
      // signatures get an all-non-compact (Whittaker) simple system.
      int ei = 0, fj = 0;
      bool eturn = p0 >= q0;
      while (ei < p0 || fj < q0) {
        if ((eturn && ei < p0) || fj >= q0) {
          d.slot_coord.push_back(ei++);
        } else {
          d.slot_coord.push_back(p0 + fj++);
        }
        eturn = !eturn;
        d.slot_sign.push_back(1);
      }
    }
    if (m >= 2) {
      for (int j = 0; j + 1 < m; ++j) {
        Root r(m, 0);
        r[d.slot_coord[j]] += 1;
        r[d.slot_coord[j + 1]] -= 1;
        d.simple_star.push_back(r);
      }
      Root last(m, 0);
      last[d.slot_coord[m - 2]] += 1;
      last[d.slot_coord[m - 1]] += 1;
      d.simple_star.push_back(last);
    }
    for (int i = 0; i < p0; ++i)
      for (int j = i + 1; j < p0; ++j) d.compact_positive.push_back(pm(m, i, 1, j, -1));
    for (int i = 0; i < q0; ++i)
      for (int j = i + 1; j < q0; ++j)
        d.compact_positive.push_back(pm(m, p0 + i, 1, p0 + j, -1));
  }
  sort_roots(d.compact_positive);
  d.psi_star = positive_closure(d, d.simple_star);
  return d;
}

bool is_root(const BasedRootDatum& d, const Root& a) {
  return contains_root(d.roots, a);
}

Weight coroot(const BasedRootDatum& d, const Root& a) {
  if (!is_root(d, a)) throw DomainError("NOT_A_ROOT", "coroot of a non-root");
  int norm2 = 0;
  for (int c : a) norm2 += c * c;
  Weight w(a.size());
  // <a,a> = 2 for short/D roots, 4 for long C roots; coroot = 2a/<a,a>.
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = Rat(2 * a[i], norm2);
  return w;
}

Weight half_sum(const std::vector<Root>& roots, int rank) {
  Weight w(rank, Rat(0));
  for (const Root& r : roots)
    for (int i = 0; i < rank; ++i) w[i] += Rat(r[i], 2);
  return w;
}

Weight half_sum_coroots(const BasedRootDatum& d, const std::vector<Root>& roots) {
  Weight w(d.rank, Rat(0));
  for (const Root& r : roots) {
    const Weight cv = coroot(d, r);
    for (int i = 0; i < d.rank; ++i) w[i] += cv[i] * Rat(1, 2);
  }
  return w;
}

Rat pair_coroot(const BasedRootDatum& d, const Weight& lam, const Root& a) {
  return pairing(lam, coroot(d, a));
}

bool is_compact(const BasedRootDatum& d, const Root& a) {
  if (contains_root(d.compact_positive, a)) return true;
  return contains_root(d.compact_positive, negate(a));
}

std::string PsiViolation::describe() const {
  auto rstr = [](const Root& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i)
      s += (i ? "," : "") + std::to_string(r[i]);
    return s + "]";
  };
  switch (kind) {
    case Kind::NotARoot: return "not a root: " + rstr(a);
    case Kind::MissingChoice: return "neither sign of " + rstr(a) + " chosen";
    case Kind::DoubleChoice: return "both signs of " + rstr(a) + " chosen";
    case Kind::NotClosed:
      return "not closed: " + rstr(a) + " + " + rstr(b) + " missing";
  }
  return "?";
}

std::optional<PsiViolation> validate_positive_system(const BasedRootDatum& d,
                                                     const std::vector<Root>& psi) {
  std::vector<Root> sorted = psi;
  sort_roots(sorted);
  for (const Root& r : sorted)
    if (!is_root(d, r))
      return PsiViolation{PsiViolation::Kind::NotARoot, r, {}};
  for (const Root& r : d.roots) {
    const bool pos = contains_root(sorted, r);
    const bool neg = contains_root(sorted, negate(r));
    if (pos && neg) return PsiViolation{PsiViolation::Kind::DoubleChoice, r, {}};
    if (!pos && !neg && r < negate(r))
      return PsiViolation{PsiViolation::Kind::MissingChoice, r, {}};
  }
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      Root s(d.rank);
      for (int k = 0; k < d.rank; ++k) s[k] = sorted[i][k] + sorted[j][k];
      if (is_root(d, s) && !contains_root(sorted, s))
        return PsiViolation{PsiViolation::Kind::NotClosed, sorted[i], sorted[j]};
    }
  return std::nullopt;
}

std::vector<Root> simple_roots_of(const BasedRootDatum& d,
                                  const std::vector<Root>& psi) {
  if (validate_positive_system(d, psi))
    throw DomainError("INVALID_SYSTEM", "simple_roots_of needs a valid positive system");
  std::vector<Root> sorted = psi;
  sort_roots(sorted);
  std::vector<Root> simples;
  for (const Root& r : sorted) {
    bool decomposable = false;
    for (const Root& a : sorted) {
      Root b(d.rank);
      for (int k = 0; k < d.rank; ++k) b[k] = r[k] - a[k];
      if (b == a || std::all_of(b.begin(), b.end(), [](int c) { return c == 0; }))
        continue;
      if (contains_root(sorted, b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(r);
  }
  return simples;
}

std::vector<Root> chamber_system(const BasedRootDatum& d, const Weight& v) {
  std::vector<Root> psi;
  for (const Root& r : d.roots) {
    const Rat p = pairing(v, to_weight(r));
    if (p.is_zero())
      throw DomainError("INVALID_SYSTEM", "chamber vector not regular");
    if (p.sign() > 0) psi.push_back(r);
  }
  return psi;  // d.roots is sorted, so psi is too
}

std::vector<Root> positive_closure(const BasedRootDatum& d,
                                   const std::vector<Root>& simples) {
  std::set<Root> acc(simples.begin(), simples.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> cur(acc.begin(), acc.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i; j < cur.size(); ++j) {
        Root s(d.rank);
        for (int k = 0; k < d.rank; ++k) s[k] = cur[i][k] + cur[j][k];
        if (is_root(d, s) && !acc.count(s)) {
          acc.insert(s);
          grew = true;
        }
      }
  }
  return std::vector<Root>(acc.begin(), acc.end());
}

}  // namespace thetap
