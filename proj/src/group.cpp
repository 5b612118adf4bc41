#include "modrep/group.hpp"

#include <stdexcept>
#include <unordered_set>

namespace modrep {

namespace {

std::uint32_t find_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t ord = 1;
    std::uint64_t v = g;
    while (v != 1) {
      v = v * g % p;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  throw std::runtime_error("no primitive root found");  // unreachable
}

std::uint32_t pack(const MatrixFF& g, std::uint32_t p) {
  return ((g.limbs(0, 0)[0] * p + g.limbs(0, 1)[0]) * p + g.limbs(1, 0)[0]) *
             p +
         g.limbs(1, 1)[0];
}

FieldElement det2(const MatrixFF& g) {
  return g.get(0, 0) * g.get(1, 1) - g.get(0, 1) * g.get(1, 0);
}

}  // namespace

std::string to_string(GroupKind kind) {
  return kind == GroupKind::GL2 ? "gl2" : "sl2";
}

std::string to_string(ClassType t) {
  switch (t) {
    case ClassType::Central:
      return "central";
    case ClassType::Jordan:
      return "jordan";
    case ClassType::Split:
      return "split";
    case ClassType::Nonsplit:
      return "nonsplit";
  }
  return "?";
}

GroupSpec GroupSpec::make(std::uint32_t p, GroupKind kind,
                          std::uint32_t bound) {
  if (p > bound)
    throw std::invalid_argument(
        "p exceeds the configured group bound (" + std::to_string(bound) +
        "); closure verification enumerates all elements");
  FieldCtx ctx = FieldCtx::make(p, 1);  // validates primality
  auto d = std::make_shared<Data>(ctx);
  d->p = p;
  d->kind = kind;
  d->zeta = find_primitive_root(p);

  d->generators.push_back(MatrixFF::from_ints(ctx, {{1, 1}, {0, 1}}));
  d->generators.push_back(MatrixFF::from_ints(ctx, {{1, 0}, {1, 1}}));
  if (kind == GroupKind::GL2)
    d->generators.push_back(
        MatrixFF::from_ints(ctx, {{d->zeta, 0}, {0, 1}}));

  const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  d->order = kind == GroupKind::GL2 ? (p2 - 1) * (p2 - p)
                                    : p * (p2 - 1);

  // Breadth-first closure from the identity; the count must come out equal
  // to the group order, otherwise the generator set is wrong.
  std::unordered_set<std::uint32_t> seen;
  std::vector<MatrixFF> frontier{MatrixFF::identity(ctx, 2)};
  std::vector<MatrixFF> all;
  seen.insert(pack(frontier[0], p));
  const bool keep = p <= 5;
  if (keep) all.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<MatrixFF> next;
    for (const MatrixFF& g : frontier)
      for (const MatrixFF& s : d->generators) {
        MatrixFF h = g * s;
        std::uint32_t key = pack(h, p);
        if (seen.insert(key).second) {
          if (keep) all.push_back(h);
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  if (seen.size() != d->order)
    throw std::runtime_error("generator closure has wrong size: got " +
                             std::to_string(seen.size()) + ", expected " +
                             std::to_string(d->order));
  d->elements = std::move(all);
  return GroupSpec(std::move(d));
}

bool GroupSpec::is_member(const MatrixFF& g) const {
  if (g.ctx() != field() || g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("group membership expects 2x2 over F_p");
  FieldElement dt = det2(g);
  if (kind() == GroupKind::SL2) return dt == field().one();
  return !dt.is_zero();
}

std::vector<std::pair<std::size_t, std::uint32_t>> GroupSpec::factor(
    const MatrixFF& g) const {
  if (!is_member(g)) throw std::invalid_argument("factor of a non-member");
  const FieldCtx& ctx = field();
  const std::uint32_t p = this->p();
  std::vector<std::pair<std::size_t, std::uint32_t>> word;

  // Split off the determinant: g = g' * t^e with det(g') = 1, where
  // t = diag(zeta, 1).  For SL2 the determinant is already 1.
  std::uint32_t e = 0;
  MatrixFF gp = g;
  if (kind() == GroupKind::GL2 && p > 2) {
    FieldElement dt = det2(g);
    FieldElement z = ctx.from_int(primitive_root());
    FieldElement v = ctx.one();
    while (v != dt) {
      v = v * z;
      ++e;
      if (e >= p) throw std::runtime_error("discrete log failed");
    }
    // g' = g * t^{-e} scales the first column by zeta^{-e}.
    FieldElement zi = z.pow(e).inverse();
    gp.set(0, 0, g.get(0, 0) * zi);
    gp.set(1, 0, g.get(1, 0) * zi);
  }

  // Elementary decomposition of gp = [[a,b],[c,d]] in SL2:
  // if c != 0:  gp = E12((a-1)/c) * E21(c) * E12((d-1)/c)
  // if c == 0:  push the problem to gp * E21(1) and undo with E21(-1).
  auto emit_sl2 = [&](const MatrixFF& s, auto&& emit_ref) -> void {
    FieldElement a = s.get(0, 0), c = s.get(1, 0), dd = s.get(1, 1);
    if (!c.is_zero()) {
      FieldElement x = (a - ctx.one()) / c;
      FieldElement z = (dd - ctx.one()) / c;
      if (!x.is_zero()) word.emplace_back(0, x.coeff(0));
      word.emplace_back(1, c.coeff(0));
      if (!z.is_zero()) word.emplace_back(0, z.coeff(0));
    } else {
      MatrixFF shifted = s * generators()[1];  // now lower-left = d != 0
      emit_ref(shifted, emit_ref);
      word.emplace_back(1, p - 1);  // E21(-1)
    }
  };
  emit_sl2(gp, emit_sl2);
  if (e != 0) word.emplace_back(2, e);
  return word;
}

std::string ConjClassRep::key() const {
  std::string out = to_string(type) + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

std::vector<ConjClassRep> conjugacy_classes(std::uint32_t p) {
  FieldCtx ctx = FieldCtx::make(p, 1);
  const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  std::vector<ConjClassRep> out;

  for (std::uint32_t l = 1; l < p; ++l)
    out.push_back({ClassType::Central, MatrixFF::from_ints(ctx, {{l, 0}, {0, l}}),
                   {l}, 1});
  for (std::uint32_t l = 1; l < p; ++l)
    out.push_back({ClassType::Jordan, MatrixFF::from_ints(ctx, {{l, 1}, {0, l}}),
                   {l}, p2 - 1});
  for (std::uint32_t l1 = 1; l1 < p; ++l1)
    for (std::uint32_t l2 = l1 + 1; l2 < p; ++l2)
      out.push_back({ClassType::Split,
                     MatrixFF::from_ints(ctx, {{l1, 0}, {0, l2}}),
                     {l1, l2}, p2 + p});
  // x^2 + a x + b irreducible over F_p; one class per Galois-conjugate pair
  // of eigenvalues, keyed by the characteristic polynomial.
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < p && !has_root; ++x)
        if ((static_cast<std::uint64_t>(x) * x + static_cast<std::uint64_t>(a) * x + b) % p == 0)
          has_root = true;
      if (has_root) continue;
      out.push_back({ClassType::Nonsplit,
                     MatrixFF::from_ints(ctx,
                                         {{0, -static_cast<std::int64_t>(b)},
                                          {1, -static_cast<std::int64_t>(a)}}),
                     {a, b}, p2 - p});
    }
  return out;
}

}  // namespace modrep
