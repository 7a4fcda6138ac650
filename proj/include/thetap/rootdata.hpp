#pragma once

#include <optional>
#include <vector>

#include "thetap/types.hpp"

namespace thetap {

// Based root datum for Sp_{2n}(R) (type C_n) or O(p,q), p,q even (type D_m,
// m=(p+q)/2). Coordinates: one vector of length rank, e-block first, f-block
// second; the block boundary sits at index eblock.
//
// simple_star is the non-compact (Whittaker type) simple system, listed in
// slot order: slot_coord/slot_sign give the signed coordinate chain
// u_1 > u_2 > ... > u_rank whose differences (plus the tail root) generate it.
struct BasedRootDatum {
  GroupId group;
  int rank = 0;
  int eblock = 0;
  std::vector<Root> roots;             // canonical (lex) order
  std::vector<Root> simple_star;       // slot-chain order
  std::vector<Root> psi_star;          // canonical order
  std::vector<Root> compact_positive;  // canonical order
  std::vector<int> slot_coord;         // slot j -> coordinate (0-based)
  std::vector<int> slot_sign;          // slot j -> +1/-1 (O: all +1)
};

BasedRootDatum build_datum(const GroupId& g);

bool is_root(const BasedRootDatum& d, const Root& a);
bool contains_root(const std::vector<Root>& sys, const Root& a);

// Coroot as an exact weight: long C-roots halve, everything else is its own
// coroot.
Weight coroot(const BasedRootDatum& d, const Root& a);

Weight half_sum(const std::vector<Root>& roots, int rank);
Weight half_sum_coroots(const BasedRootDatum& d, const std::vector<Root>& roots);

// <lambda, alpha^vee>
Rat pair_coroot(const BasedRootDatum& d, const Weight& lam, const Root& a);

bool is_compact(const BasedRootDatum& d, const Root& a);

struct PsiViolation {
  enum class Kind { NotARoot, MissingChoice, DoubleChoice, NotClosed };
  Kind kind;
  Root a, b;  // offending root(s); b used by NotClosed
  std::string describe() const;
};

// ok (= nullopt) iff psi picks exactly one of each +-pair and is closed under
// root addition.
std::optional<PsiViolation> validate_positive_system(const BasedRootDatum& d,
                                                     const std::vector<Root>& psi);

// Indecomposable elements of a valid positive system, in canonical order.
std::vector<Root> simple_roots_of(const BasedRootDatum& d,
                                  const std::vector<Root>& psi);

// {alpha in roots : <v, alpha> > 0}; v must be regular (no zero pairings).
std::vector<Root> chamber_system(const BasedRootDatum& d, const Weight& v);

// Positive closure of a simple system (used to build psi_star).
std::vector<Root> positive_closure(const BasedRootDatum& d,
                                   const std::vector<Root>& simples);

void sort_roots(std::vector<Root>& rs);

}  // namespace thetap
