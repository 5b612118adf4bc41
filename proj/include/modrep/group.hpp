#pragma once

// GL2(F_p) and SL2(F_p) by generators, plus their conjugacy classes.
//
// Generators are the two elementary unipotents [[1,1],[0,1]] and
// [[1,0],[1,1]]; for GL2 we add diag(z, 1) with z the least primitive root
// mod p.  Construction verifies the generated closure has exactly the
// expected order, so everything downstream can rely on the generator set.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

enum class GroupKind { GL2, SL2 };

std::string to_string(GroupKind kind);

class GroupSpec {
 public:
  /// Builds the group over F_p.  Throws std::invalid_argument for composite
  /// p or p beyond the bound (the closure check enumerates all elements).
  static GroupSpec make(std::uint32_t p, GroupKind kind,
                        std::uint32_t bound = 13);

  std::uint32_t p() const { return d_->p; }
  GroupKind kind() const { return d_->kind; }
  const FieldCtx& field() const { return d_->field; }
  const std::vector<MatrixFF>& generators() const { return d_->generators; }
  std::uint64_t order() const { return d_->order; }
  /// Least primitive root mod p (1 when p = 2).
  std::uint32_t primitive_root() const { return d_->zeta; }

  /// Membership: a 2x2 matrix over F_p with nonzero determinant (GL2) or
  /// determinant one (SL2).
  bool is_member(const MatrixFF& g) const;

  /// Writes g as a product of generator powers:
  /// g = prod_i generators[word[i].first] ^ word[i].second.
  /// Uses the elementary-matrix decomposition of SL2 plus a diagonal
  /// correction, so words stay short.  Throws for non-members.
  std::vector<std::pair<std::size_t, std::uint32_t>> factor(
      const MatrixFF& g) const;

  /// Full element list, retained only for p <= 5 (exhaustive test support);
  /// empty for larger p.
  const std::vector<MatrixFF>& elements() const { return d_->elements; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.d_->p == b.d_->p && a.d_->kind == b.d_->kind;
  }
  friend bool operator!=(const GroupSpec& a, const GroupSpec& b) {
    return !(a == b);
  }

 private:
  struct Data {
    std::uint32_t p;
    GroupKind kind;
    FieldCtx field;
    std::vector<MatrixFF> generators;
    std::uint64_t order;
    std::uint32_t zeta;
    std::vector<MatrixFF> elements;
    Data(FieldCtx f) : p(0), kind(GroupKind::GL2), field(std::move(f)),
                       order(0), zeta(1) {}
  };
  explicit GroupSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

enum class ClassType { Central, Jordan, Split, Nonsplit };

std::string to_string(ClassType t);

/// One conjugacy class of GL2(F_p).
///
/// Representatives: diag(l, l) (central), [[l,1],[0,l]] (Jordan block),
/// diag(l1, l2) with l1 < l2 (split semisimple), and the companion matrix
/// [[0,-b],[1,-a]] of an irreducible x^2 + a x + b (nonsplit semisimple).
struct ConjClassRep {
  ClassType type;
  MatrixFF representative;
  std::vector<std::uint32_t> params;  // central/jordan: {l}; split: {l1,l2};
                                      // nonsplit: {a, b}
  std::uint64_t class_size;

  /// Stable identifier, e.g. "split(1,2)" or "nonsplit(0,1)".
  std::string key() const;
};

/// All conjugacy classes of GL2(F_p) in a fixed deterministic order:
/// central by l, Jordan by l, split by (l1, l2), nonsplit by (a, b).
std::vector<ConjClassRep> conjugacy_classes(std::uint32_t p);

}  // namespace modrep
