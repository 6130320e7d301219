#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chaoscalc::natset {

using Int = std::int64_t;

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed-form block family: intervals [a_k, b_k] with a_k given by a
/// geometric (c*r^k) or polynomial (c*k^p) position rule and b_k = a_k + len_k - 1
/// for len_k in {L, k, k*2^k}.  Blocks must be pairwise disjoint with
/// a_{k+1} > b_k; families violating that are rejected.
struct BlockRule {
  enum class Pos { Geometric, Polynomial };
  enum class Len { Constant, Linear, SuperExp };

  Pos pos = Pos::Geometric;
  Int scale = 1;     // c
  Int param = 2;     // r (geometric) or p (polynomial)
  Len len = Len::Linear;
  Int len_const = 1; // L, only for Len::Constant

  Int position(Int k) const;  // a_k, or -1 on overflow
  Int length(Int k) const;    // len_k, or -1 on overflow
  // All blocks [a_k, b_k] with a_k <= limit, in increasing k.
  std::vector<std::pair<Int, Int>> blocks_below(Int limit) const;
  bool contains(Int n) const;
  void validate() const;
};

class SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

/// Symbolic subset of N = {1, 2, ...} with exact membership and counting.
class SetExpr {
public:
  enum class Kind { Finite, Periodic, Blocks, Union, Intersection, Complement };

  static SetExprPtr finite(std::vector<Int> elements);
  static SetExprPtr periodic(Int modulus, std::vector<Int> residues);
  static SetExprPtr blocks(BlockRule rule);
  static SetExprPtr set_union(SetExprPtr left, SetExprPtr right);
  static SetExprPtr set_intersection(SetExprPtr left, SetExprPtr right);
  static SetExprPtr complement(SetExprPtr inner);

  Kind kind() const { return kind_; }
  const std::vector<Int>& finite_elements() const { return elements_; }
  Int modulus() const { return modulus_; }
  const std::vector<Int>& residues() const { return elements_; }
  const BlockRule& block_rule() const { return rule_; }
  const SetExprPtr& left() const { return left_; }
  const SetExprPtr& right() const { return right_; }

  bool member(Int k) const;
  /// |A ∩ [1, n]|, exact.  Closed forms for Finite/Periodic/Blocks; at most
  /// linear in n for boolean combinations.
  Int count_prefix(Int n) const;
  /// |A ∩ [n+1, n+s]| = count_prefix(n+s) - count_prefix(n).
  Int count_window(Int n, Int s) const;
  /// Membership indicator over [1, n]; index 0 unused.  One pass per node.
  std::vector<std::uint8_t> bitmap(Int n) const;

private:
  SetExpr() = default;
  Kind kind_ = Kind::Finite;
  std::vector<Int> elements_;  // Finite elements or Periodic residues
  Int modulus_ = 1;
  BlockRule rule_;
  SetExprPtr left_, right_;
};

struct GapStats {
  Int horizon = 0;
  std::optional<Int> max_gap;  // empty = fewer than 2 elements below horizon
  Int element_count = 0;
};

struct SyndeticReport {
  bool syndetic = false;
  GapStats stats;
  Int half_horizon_max_gap = 0;  // the bound the verdict tested stability against
};

std::vector<Int> elements_below(const SetExpr& a, Int horizon);

/// Consecutive gaps d_{n+1} - d_n of A ∩ [1, horizon]; empty if < 2 elements.
std::vector<Int> difference_set(const SetExpr& a, Int horizon);

/// Gap-stability syndeticity probe: the max gap (leading gap from 0 and
/// trailing gap to the horizon included) must not grow in the last half of
/// the horizon.
SyndeticReport is_syndetic(const SetExpr& a, Int horizon);

/// Grammar:
///   finite:{k1,k2,...} | periodic:m:{r1,...}
///   | blocks:pos=<geom(c,r)|poly(c,p)>:len=<const(L)|linear|superexp>
///   | union(S1,S2) | inter(S1,S2) | compl(S)
SetExprPtr parse_set_spec(const std::string& spec);
std::string to_spec_string(const SetExpr& a);

}  // namespace chaoscalc::natset
