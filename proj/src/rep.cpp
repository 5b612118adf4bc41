#include "modrep/rep.hpp"

#include <stdexcept>

namespace modrep {

namespace {

// Pascal triangle row r mod p.
std::vector<std::uint32_t> binomials(std::uint32_t r, std::uint32_t p) {
  std::vector<std::uint32_t> row{1};
  for (std::uint32_t n = 1; n <= r; ++n) {
    std::vector<std::uint32_t> next(n + 1, 1);
    for (std::uint32_t i = 1; i < n; ++i)
      next[i] = (row[i - 1] + row[i]) % p;
    row = std::move(next);
  }
  return row;
}

std::string monomial_label(std::uint32_t r, std::uint32_t j) {
  const std::uint32_t xe = r - j, ye = j;
  if (xe == 0 && ye == 0) return "1";
  std::string out;
  if (xe > 0) {
    out += "x";
    if (xe > 1) out += "^" + std::to_string(xe);
  }
  if (ye > 0) {
    out += "y";
    if (ye > 1) out += "^" + std::to_string(ye);
  }
  return out;
}

// Matrix of g acting on Sym^r in the monomial basis; column j holds the
// expansion of (a x + c y)^{r-j} (b x + d y)^j.
MatrixFF sym_matrix(const MatrixFF& g, std::uint32_t r) {
  const FieldCtx& ctx = g.ctx();
  const std::uint32_t p = ctx.p();
  MatrixFF out(ctx, r + 1, r + 1);
  FieldElement a = g.get(0, 0), b = g.get(0, 1);
  FieldElement c = g.get(1, 0), d = g.get(1, 1);

  // Power tables up to r.
  auto powers = [&](const FieldElement& x) {
    std::vector<FieldElement> v{ctx.one()};
    for (std::uint32_t i = 1; i <= r; ++i) v.push_back(v.back() * x);
    return v;
  };
  std::vector<FieldElement> pa = powers(a), pb = powers(b), pc = powers(c),
                            pd = powers(d);

  for (std::uint32_t j = 0; j <= r; ++j) {
    std::vector<std::uint32_t> bin1 = binomials(r - j, p);
    std::vector<std::uint32_t> bin2 = binomials(j, p);
    // Coefficients indexed by y-degree.
    std::vector<FieldElement> p1, p2;
    for (std::uint32_t t = 0; t <= r - j; ++t)
      p1.push_back(ctx.from_int(bin1[t]) * pa[r - j - t] * pc[t]);
    for (std::uint32_t s = 0; s <= j; ++s)
      p2.push_back(ctx.from_int(bin2[s]) * pb[j - s] * pd[s]);
    for (std::uint32_t t = 0; t <= r - j; ++t)
      for (std::uint32_t s = 0; s <= j; ++s) {
        const std::uint32_t u = t + s;
        out.set(u, j, out.get(u, j) + p1[t] * p2[s]);
      }
  }
  return out;
}

}  // namespace

MatrixFF Representation::image_of(const MatrixFF& g) const {
  auto word = group.factor(g);
  MatrixFF out = MatrixFF::identity(images.empty() ? g.ctx() : images[0].ctx(),
                                    dim);
  for (const auto& [idx, e] : word) out = out * images[idx].pow(e);
  return out;
}

Representation sym_rep(std::uint32_t r, const GroupSpec& group) {
  Representation rep(group);
  rep.dim = r + 1;
  for (const MatrixFF& g : group.generators())
    rep.images.push_back(sym_matrix(g, r));
  for (std::uint32_t j = 0; j <= r; ++j)
    rep.basis.push_back(monomial_label(r, j));
  rep.provenance = "Sym(" + std::to_string(r) + ")";
  return rep;
}

Representation det_twist(const Representation& rep, std::uint64_t k) {
  const std::uint32_t p = rep.group.p();
  const std::uint64_t keff = k % (p - 1);  // det takes values in F_p^*
  if (k == 0) return rep;
  Representation out = rep;
  out.provenance =
      "Twist(" + rep.provenance + ",k=" + std::to_string(k) + ")";
  if (keff == 0) return out;
  for (std::size_t i = 0; i < out.images.size(); ++i) {
    FieldElement dg = det(rep.group.generators()[i]);
    out.images[i] = rep.images[i].scaled(dg.pow(keff));
  }
  return out;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.group != b.group)
    throw std::invalid_argument("tensor of modules over different groups");
  Representation out(a.group);
  out.dim = a.dim * b.dim;
  for (std::size_t i = 0; i < a.images.size(); ++i)
    out.images.push_back(a.images[i].kron(b.images[i]));
  for (const auto& la : a.basis)
    for (const auto& lb : b.basis) out.basis.push_back(la + "⊗" + lb);
  out.provenance = "Tensor(" + a.provenance + "," + b.provenance + ")";
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group != b.group)
    throw std::invalid_argument("direct sum of modules over different groups");
  Representation out(a.group);
  out.dim = a.dim + b.dim;
  const FieldCtx& ctx = a.group.field();
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    MatrixFF block(ctx, out.dim, out.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c)
        block.set(r, c, a.images[i].get(r, c));
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c)
        block.set(a.dim + r, a.dim + c, b.images[i].get(r, c));
    out.images.push_back(std::move(block));
  }
  out.basis = a.basis;
  for (const auto& lb : b.basis) out.basis.push_back(lb + "'");
  out.provenance = "DirectSum(" + a.provenance + "," + b.provenance + ")";
  return out;
}

Representation dual(const Representation& rep) {
  Representation out(rep.group);
  out.dim = rep.dim;
  for (const MatrixFF& m : rep.images) {
    auto inv = m.inverse();
    if (!inv) throw std::runtime_error("non-invertible generator image");
    out.images.push_back(inv->transpose());
  }
  for (const auto& l : rep.basis) out.basis.push_back(l + "*");
  out.provenance = "Dual(" + rep.provenance + ")";
  return out;
}

namespace {

enum class SquareKind { Sym, Alt };

Representation square_rep(const Representation& rep, SquareKind kind) {
  const FieldCtx& ctx = rep.group.field();
  const std::size_t d = rep.dim;
  // Basis pairs (i, j), i <= j for Sym, i < j for Alt, lex order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = (kind == SquareKind::Sym ? i : i + 1); j < d; ++j)
      pairs.emplace_back(i, j);
  const std::size_t q = pairs.size();

  Representation out(rep.group);
  out.dim = q;
  for (const MatrixFF& M : rep.images) {
    // Row (i,j) of the induced matrix is the image of the spanning tensor
    // e_i⊗e_j ± e_j⊗e_i under M⊗M, read off in the pair coordinates.
    MatrixFF N(ctx, q, q);
    for (std::size_t row = 0; row < q; ++row) {
      auto [i, j] = pairs[row];
      for (std::size_t col = 0; col < q; ++col) {
        auto [k, l] = pairs[col];
        FieldElement v = ctx.zero();
        if (kind == SquareKind::Sym) {
          if (i == j)
            v = M.get(i, k) * M.get(i, l);
          else
            v = M.get(i, k) * M.get(j, l) + M.get(j, k) * M.get(i, l);
        } else {
          v = M.get(i, k) * M.get(j, l) - M.get(j, k) * M.get(i, l);
        }
        N.set(row, col, v);
      }
    }
    out.images.push_back(std::move(N));
  }
  for (auto [i, j] : pairs)
    out.basis.push_back((kind == SquareKind::Sym ? "s(" : "w(") +
                        std::to_string(i) + "," + std::to_string(j) + ")");
  out.provenance = (kind == SquareKind::Sym ? "SymSq(" : "AltSq(") +
                   rep.provenance + ")";
  return out;
}

}  // namespace

Representation sym_square(const Representation& rep) {
  return square_rep(rep, SquareKind::Sym);
}

Representation alt_square(const Representation& rep) {
  return square_rep(rep, SquareKind::Alt);
}

Representation irr_rep(IrrLabel label, const GroupSpec& group) {
  const std::uint32_t p = group.p();
  if (label.r >= p)
    throw std::invalid_argument("irreducible label needs r < p");
  if (label.k >= p - 1)
    throw std::invalid_argument("irreducible label needs k < p - 1");
  if (group.kind() == GroupKind::SL2 && label.k != 0)
    throw std::invalid_argument("SL2 labels carry no determinant twist");
  return det_twist(sym_rep(label.r, group), label.k);
}

Representation trivial_rep(const GroupSpec& group) {
  return sym_rep(0, group);
}

Representation restrict_rep(const RestrictionRequest& req,
                            const GroupSpec& group) {
  const std::uint32_t p = group.p();
  if (req.n == 0 || req.n > 16)
    throw std::invalid_argument("extension degree out of range");
  if (req.r.size() != req.n)
    throw std::invalid_argument("need exactly n Frobenius-twist exponents");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < req.n; ++i) q *= p;
  for (auto ri : req.r)
    if (ri >= p)
      throw std::invalid_argument("exponents must satisfy 0 <= r_i <= p - 1");
  if (req.k > q - 2)
    throw std::invalid_argument("determinant twist must satisfy k <= q - 2");

  Representation rep = sym_rep(req.r[0], group);
  for (std::uint32_t i = 1; i < req.n; ++i)
    rep = tensor(rep, sym_rep(req.r[i], group));
  rep = det_twist(rep, req.k % (p - 1));

  std::string rs;
  for (std::uint32_t i = 0; i < req.n; ++i) {
    if (i) rs += ",";
    rs += std::to_string(req.r[i]);
  }
  rep.provenance = "Res(n=" + std::to_string(req.n) + ",r=(" + rs +
                   "),k=" + std::to_string(req.k) + ")";
  return rep;
}

MatrixFF p1_map(std::uint32_t r, const GroupSpec& group) {
  const std::uint32_t p = group.p();
  if (r > p - 2)
    throw std::invalid_argument("multiplication map needs 0 <= r <= p - 2");
  const FieldCtx& ctx = group.field();
  // Source basis (x^{r-j} y^j) ⊗ (x or y) in kron order; target Sym^{r+1}.
  // Transpose of the polarization embedding h -> dh/dx ⊗ x + dh/dy ⊗ y,
  // which is what intertwines in the row convention.
  MatrixFF P(ctx, 2 * (r + 1), r + 2);
  for (std::uint32_t j = 0; j <= r; ++j) {
    P.set_int(2 * j + 0, j, static_cast<std::int64_t>(r + 1 - j));  // * x
    P.set_int(2 * j + 1, j + 1, static_cast<std::int64_t>(j + 1));  // * y
  }
  return P;
}

MatrixFF p2_map(std::uint32_t r, const GroupSpec& group) {
  const std::uint32_t p = group.p();
  if (r < 1 || r > p - 2)
    throw std::invalid_argument("differentiation map needs 1 <= r <= p - 2");
  const FieldCtx& ctx = group.field();
  // Transpose of h -> x h ⊗ y - y h ⊗ x, the contraction with the invariant
  // vector of V_1 ⊗ V_1.
  MatrixFF P(ctx, 2 * (r + 1), r);
  for (std::uint32_t j = 0; j <= r; ++j) {
    if (j >= 1) P.set_int(2 * j + 0, j - 1, 1);   // shift d/dy
    if (j + 1 <= r) P.set_int(2 * j + 1, j, -1);  // shift -d/dx
  }
  return P;
}

}  // namespace modrep
