#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thetap/rootdata.hpp"

namespace thetap {

// Signed permutation: coordinate i goes to position perm[i] and picks up
// flip[perm[i]]. D-type elements have an even number of -1 flips.
struct WeylElement {
  std::vector<int> perm;  // 0-based images
  std::vector<int> flip;  // +1 / -1 per target coordinate

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm == b.perm && a.flip == b.flip;
  }
};

// Torus element of order dividing 4: entry k encodes i^k.
struct TorusTorsion {
  std::vector<int> exps;  // values in {0,1,2,3}

  friend bool operator==(const TorusTorsion& a, const TorusTorsion& b) {
    return a.exps == b.exps;
  }
  friend bool operator<(const TorusTorsion& a, const TorusTorsion& b) {
    return a.exps < b.exps;
  }
};

WeylElement weyl_identity(int rank);
bool is_identity(const WeylElement& w);
// (a*b) acts as a after b.
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
// Lexicographic tie-break order on (perm, flips).
bool weyl_lex_less(const WeylElement& a, const WeylElement& b);

WeylElement reflect(const BasedRootDatum& d, const Root& alpha);

Weight act_on_weight(const WeylElement& w, const Weight& lam);
Root act_on_root(const WeylElement& w, const Root& a);
std::vector<Root> act_on_system(const WeylElement& w, const std::vector<Root>& psi);
TorusTorsion act_on_torus(const WeylElement& w, const TorusTorsion& x);

std::uint64_t weyl_order(const BasedRootDatum& d);
// Deterministic indexing of W; index < weyl_order().
WeylElement weyl_at(const BasedRootDatum& d, std::uint64_t index);
// Streams every element exactly once in index order. Guarded by max_rank.
void enumerate_weyl(const BasedRootDatum& d,
                    const std::function<void(const WeylElement&)>& fn,
                    int max_rank = 8);

// Subgroup generated by reflections in compact_positive: permutations of the
// e-block and of the f-block, no flips.
std::vector<WeylElement> compact_subgroup_elements(const BasedRootDatum& d,
                                                   int max_rank = 8);

// Coxeter length w.r.t. psi_star: number of psi_star roots sent negative.
int weyl_length(const BasedRootDatum& d, const WeylElement& w);

// Canonical (min length, then lex) w' with w'.src = dst, or nullopt.
std::optional<WeylElement> solve_transport(const BasedRootDatum& d,
                                           const TorusTorsion& src,
                                           const TorusTorsion& dst,
                                           int max_rank = 8);

// Canonical representative of the right coset w.W(T,K).
WeylElement coset_canonical(const BasedRootDatum& d, const WeylElement& w,
                            int max_rank = 8);

void check_rank_bound(const BasedRootDatum& d, int max_rank);

}  // namespace thetap
