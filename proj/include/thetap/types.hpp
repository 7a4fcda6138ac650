#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetap/rational.hpp"

namespace thetap {

// Library-level failure with a stable machine-readable code. The CLI maps
// codes into responses verbatim.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, std::string detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Weight in the e/f coordinate basis; exact, half-integral in practice.
using Weight = std::vector<Rat>;

// Root as an integer coordinate vector of the ambient rank.
using Root = std::vector<int>;

enum class GroupKind { Sp, O };

// Sp(n) means Sp_{2n}(R); O(p,q) with p,q even.
struct GroupId {
  GroupKind kind;
  int n = 0;  // Sp rank
  int p = 0, q = 0;

  static GroupId sp(int n) { return GroupId{GroupKind::Sp, n, 0, 0}; }
  static GroupId o(int p, int q) { return GroupId{GroupKind::O, 0, p, q}; }

  int rank() const { return kind == GroupKind::Sp ? n : (p + q) / 2; }
  int eblock() const { return kind == GroupKind::Sp ? n : p / 2; }

  friend bool operator==(const GroupId& a, const GroupId& b) {
    if (a.kind != b.kind) return false;
    return a.kind == GroupKind::Sp ? a.n == b.n : (a.p == b.p && a.q == b.q);
  }
  std::string str() const {
    if (kind == GroupKind::Sp) return "Sp(" + std::to_string(n) + ")";
    return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline Rat pairing(const Weight& w, const Weight& cw) {
  if (w.size() != cw.size())
    throw DomainError("LENGTH_MISMATCH", "pairing of lengths " +
                          std::to_string(w.size()) + " and " +
                          std::to_string(cw.size()));
  Rat acc;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * cw[i];
  return acc;
}

inline Weight to_weight(const Root& r) {
  Weight w(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) w[i] = Rat(r[i]);
  return w;
}

inline Root negate(const Root& r) {
  Root m(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
  return m;
}

}  // namespace thetap
