#include "thetap/wscan.hpp"

#include <array>
#include <vector>

#include "thetap/weyl.hpp"

#ifdef THETAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace thetap {

namespace detail {

constexpr int kMaxRank = 12;

// index = perm_rank * 2^flipbits + flip_bits; perms unranked in lex order.
void decode_weyl(const BasedRootDatum& d, std::uint64_t index, int* perm,
                 int* flip) {
  const int n = d.rank;
  const int flipbits = d.group.kind == GroupKind::Sp ? n : (n > 0 ? n - 1 : 0);
  const std::uint64_t fmask = (flipbits == 64) ? ~0ull : ((1ull << flipbits) - 1);
  std::uint64_t bits = index & fmask;
  std::uint64_t prank = index >> flipbits;

  int pool[kMaxRank];
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  for (int i = 0; i < n; ++i) {
    const int remaining = n - i;
    const std::uint64_t pick = fact ? prank / fact : 0;
    prank = fact ? prank % fact : 0;
    perm[i] = pool[pick];
    for (int k = static_cast<int>(pick); k + 1 < remaining; ++k)
      pool[k] = pool[k + 1];
    if (remaining > 1) fact /= (remaining - 1);
  }

  int parity = 0;
  for (int i = 0; i < flipbits; ++i) {
    flip[i] = (bits >> i) & 1 ? -1 : 1;
    parity ^= (bits >> i) & 1;
  }
  if (d.group.kind == GroupKind::O && n > 0) flip[n - 1] = parity ? -1 : 1;
}

namespace {

// Roots have at most two nonzero coordinates with values in {-2..2}; this
// packs one into a small table index for O(1) positivity lookups.
struct RootTable {
  int rank = 0;
  std::vector<std::uint8_t> in_psi;

  static int key(int i, int a, int j, int b) {
    return ((i * (kMaxRank + 1) + (j + 1)) * 5 + (a + 2)) * 5 + (b + 2);
  }
  static int key_of(const Root& r) {
    int i = -1, j = -1, a = 0, b = 0;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] != 0) {
        if (i < 0) { i = static_cast<int>(k); a = r[k]; }
        else { j = static_cast<int>(k); b = r[k]; }
      }
    return key(i, a, j, b);
  }

  explicit RootTable(const BasedRootDatum& d) : rank(d.rank) {
    in_psi.assign((kMaxRank * (kMaxRank + 1) * 5 + 4) * 5 + 5, 0);
    for (const Root& r : d.psi_star) in_psi[key_of(r)] = 1;
  }
};

struct PackedRoot {
  int i, a, j, b;  // coordinate/value pairs, j = -1 for single-coordinate roots
};

struct ScanContext {
  const BasedRootDatum* d;
  RootTable table;
  std::vector<PackedRoot> psi;
  std::array<int, kMaxRank> src{}, dst{};
  int flipbits;
  std::uint64_t order;

  ScanContext(const BasedRootDatum& dd, const TorusTorsion& s,
              const TorusTorsion& t)
      : d(&dd), table(dd) {
    for (const Root& r : dd.psi_star) {
      PackedRoot pr{-1, 0, -1, 0};
      for (int k = 0; k < dd.rank; ++k)
        if (r[k] != 0) {
          if (pr.i < 0) { pr.i = k; pr.a = r[k]; }
          else { pr.j = k; pr.b = r[k]; }
        }
      psi.push_back(pr);
    }
    for (int k = 0; k < dd.rank; ++k) {
      src[k] = s.exps[k];
      dst[k] = t.exps[k];
    }
    flipbits = dd.group.kind == GroupKind::Sp ? dd.rank
                                              : (dd.rank > 0 ? dd.rank - 1 : 0);
    order = weyl_order(dd);
  }
};

struct Best {
  int len = 1 << 30;
  std::uint64_t permkey = ~0ull;
  std::uint64_t flipkey = ~0ull;
  std::uint64_t index = 0;
  bool found = false;

  bool better_than(const Best& o) const {
    if (!found) return false;
    if (!o.found) return true;
    if (len != o.len) return len < o.len;
    if (permkey != o.permkey) return permkey < o.permkey;
    return flipkey < o.flipkey;
  }
};

inline void consider(const ScanContext& ctx, std::uint64_t idx, Best& best) {
  const int n = ctx.d->rank;
  int perm[kMaxRank], flip[kMaxRank];
  decode_weyl(*ctx.d, idx, perm, flip);

  for (int i = 0; i < n; ++i) {
    int e = ctx.src[i];
    if (flip[perm[i]] < 0) e = (4 - e) % 4;
    if (e != ctx.dst[perm[i]]) return;
  }

  int len = 0;
  for (const PackedRoot& pr : ctx.psi) {
    const int ii = perm[pr.i];
    const int aa = flip[ii] * pr.a;
    if (pr.j < 0) {
      if (!ctx.table.in_psi[RootTable::key(ii, aa, -1, 0)]) ++len;
    } else {
      const int jj = perm[pr.j];
      const int bb = flip[jj] * pr.b;
      const bool ok = ii < jj
                          ? ctx.table.in_psi[RootTable::key(ii, aa, jj, bb)]
                          : ctx.table.in_psi[RootTable::key(jj, bb, ii, aa)];
      if (!ok) ++len;
    }
  }

  std::uint64_t permkey = 0, flipkey = 0;
  for (int i = 0; i < n; ++i) {
    permkey = (permkey << 4) | static_cast<std::uint64_t>(perm[i]);
    flipkey = (flipkey << 1) | (flip[i] < 0 ? 1u : 0u);
  }
  Best cand{len, permkey, flipkey, idx, true};
  if (cand.better_than(best)) best = cand;
}

std::optional<WeylElement> finish(const BasedRootDatum& d, const Best& best) {
  if (!best.found) return std::nullopt;
  WeylElement w;
  w.perm.resize(d.rank);
  w.flip.resize(d.rank);
  detail::decode_weyl(d, best.index, w.perm.data(), w.flip.data());
  return w;
}

}  // namespace
}  // namespace detail

std::optional<WeylElement> transport_scan_serial(const BasedRootDatum& d,
                                                 const TorusTorsion& src,
                                                 const TorusTorsion& dst) {
  detail::ScanContext ctx(d, src, dst);
  detail::Best best;
  for (std::uint64_t idx = 0; idx < ctx.order; ++idx)
    detail::consider(ctx, idx, best);
  return detail::finish(d, best);
}

std::optional<WeylElement> transport_scan_parallel(const BasedRootDatum& d,
                                                   const TorusTorsion& src,
                                                   const TorusTorsion& dst) {
#ifdef THETAP_HAVE_OPENMP
  detail::ScanContext ctx(d, src, dst);
  detail::Best best;
#pragma omp parallel
  {
    detail::Best local;
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(ctx.order); ++idx)
      detail::consider(ctx, static_cast<std::uint64_t>(idx), local);
#pragma omp critical
    if (local.better_than(best)) best = local;
  }
  return detail::finish(d, best);
#else
  return transport_scan_serial(d, src, dst);
#endif
}

std::optional<WeylElement> transport_scan(const BasedRootDatum& d,
                                          const TorusTorsion& src,
                                          const TorusTorsion& dst) {
#ifdef THETAP_HAVE_OPENMP
  if (weyl_order(d) >= (1ull << 16)) return transport_scan_parallel(d, src, dst);
#endif
  return transport_scan_serial(d, src, dst);
}

}  // namespace thetap
