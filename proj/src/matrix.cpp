#include "modrep/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modrep {

namespace {

void require_same_ctx(const MatrixFF& a, const MatrixFF& b) {
  if (a.ctx() != b.ctx())
    throw std::invalid_argument("matrices from different field contexts");
}

bool limbs_zero(const std::uint32_t* a, std::uint32_t m) {
  for (std::uint32_t i = 0; i < m; ++i)
    if (a[i] != 0) return false;
  return true;
}

}  // namespace

MatrixFF::MatrixFF(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)),
      rows_(rows),
      cols_(cols),
      a_(rows * cols * ctx_.m(), 0) {}

MatrixFF MatrixFF::identity(const FieldCtx& ctx, std::size_t n) {
  MatrixFF out(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) out.limbs(i, i)[0] = 1 % ctx.p();
  return out;
}

MatrixFF MatrixFF::row_vector(const FieldCtx& ctx,
                              const std::vector<std::int64_t>& v) {
  MatrixFF out(ctx, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out.set_int(0, j, v[j]);
  return out;
}

MatrixFF MatrixFF::from_ints(const FieldCtx& ctx,
                             const std::vector<std::vector<std::int64_t>>& v) {
  const std::size_t r = v.size();
  const std::size_t c = r == 0 ? 0 : v[0].size();
  MatrixFF out(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (v[i].size() != c)
      throw std::invalid_argument("ragged initializer for matrix");
    for (std::size_t j = 0; j < c; ++j) out.set_int(i, j, v[i][j]);
  }
  return out;
}

FieldElement MatrixFF::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw std::invalid_argument("matrix index out of range");
  const std::uint32_t* e = limbs(i, j);
  return FieldElement(ctx_, std::vector<std::uint32_t>(e, e + ctx_.m()));
}

void MatrixFF::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (i >= rows_ || j >= cols_)
    throw std::invalid_argument("matrix index out of range");
  if (v.ctx() != ctx_)
    throw std::invalid_argument("entry from a different field context");
  std::copy(v.coeffs().begin(), v.coeffs().end(), limbs(i, j));
}

void MatrixFF::set_int(std::size_t i, std::size_t j, std::int64_t v) {
  set(i, j, ctx_.from_int(v));
}

bool MatrixFF::is_zero() const {
  for (auto v : a_)
    if (v != 0) return false;
  return true;
}

MatrixFF MatrixFF::operator*(const MatrixFF& o) const {
  require_same_ctx(*this, o);
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  MatrixFF out(ctx_, rows_, o.cols_);
  const std::uint32_t m = ctx_.m();
  if (m == 1) {
    const std::uint64_t p = ctx_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const std::uint64_t f = limbs(i, j)[0];
        if (f == 0) continue;
        const std::uint32_t* src = o.limbs(j, 0);
        std::uint32_t* dst = out.limbs(i, 0);
        for (std::size_t k = 0; k < o.cols_; ++k)
          dst[k] = static_cast<std::uint32_t>((dst[k] + f * src[k]) % p);
      }
    }
    return out;
  }
  std::vector<std::uint32_t> prod(m);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint32_t* f = limbs(i, j);
      if (limbs_zero(f, m)) continue;
      for (std::size_t k = 0; k < o.cols_; ++k) {
        ctx_.raw_mul(f, o.limbs(j, k), prod.data());
        ctx_.raw_add(out.limbs(i, k), prod.data(), out.limbs(i, k));
      }
    }
  return out;
}

MatrixFF MatrixFF::operator+(const MatrixFF& o) const {
  require_same_ctx(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  MatrixFF out(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); i += ctx_.m())
    ctx_.raw_add(a_.data() + i, o.a_.data() + i, out.a_.data() + i);
  return out;
}

MatrixFF MatrixFF::operator-(const MatrixFF& o) const {
  require_same_ctx(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  MatrixFF out(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); i += ctx_.m())
    ctx_.raw_sub(a_.data() + i, o.a_.data() + i, out.a_.data() + i);
  return out;
}

bool operator==(const MatrixFF& a, const MatrixFF& b) {
  return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.a_ == b.a_;
}

MatrixFF MatrixFF::transpose() const {
  MatrixFF out(ctx_, cols_, rows_);
  const std::uint32_t m = ctx_.m();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      std::copy(limbs(i, j), limbs(i, j) + m, out.limbs(j, i));
  return out;
}

MatrixFF MatrixFF::kron(const MatrixFF& o) const {
  require_same_ctx(*this, o);
  MatrixFF out(ctx_, rows_ * o.rows_, cols_ * o.cols_);
  const std::uint32_t m = ctx_.m();
  std::vector<std::uint32_t> prod(m);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint32_t* f = limbs(i, j);
      if (limbs_zero(f, m)) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) {
          ctx_.raw_mul(f, o.limbs(k, l), prod.data());
          std::copy(prod.begin(), prod.end(),
                    out.limbs(i * o.rows_ + k, j * o.cols_ + l));
        }
    }
  return out;
}

FieldElement MatrixFF::trace() const {
  if (rows_ != cols_)
    throw std::invalid_argument("trace of a non-square matrix");
  FieldElement t = ctx_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t = t + get(i, i);
  return t;
}

MatrixFF MatrixFF::scaled(const FieldElement& c) const {
  if (c.ctx() != ctx_)
    throw std::invalid_argument("scalar from a different field context");
  MatrixFF out(ctx_, rows_, cols_);
  const std::uint32_t m = ctx_.m();
  for (std::size_t i = 0; i < a_.size(); i += m)
    ctx_.raw_mul(a_.data() + i, c.coeffs().data(), out.a_.data() + i);
  return out;
}

MatrixFF MatrixFF::pow(std::uint64_t e) const {
  if (rows_ != cols_)
    throw std::invalid_argument("power of a non-square matrix");
  MatrixFF acc = identity(ctx_, rows_);
  MatrixFF base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MatrixFF MatrixFF::row_slice(std::size_t i) const {
  if (i >= rows_) throw std::invalid_argument("row index out of range");
  MatrixFF out(ctx_, 1, cols_);
  std::copy(limbs(i, 0), limbs(i, 0) + cols_ * ctx_.m(), out.limbs(0, 0));
  return out;
}

std::string MatrixFF::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << get(i, j).to_string();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

MatrixFF vstack(const MatrixFF& a, const MatrixFF& b) {
  require_same_ctx(a, b);
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack column mismatch");
  MatrixFF out(a.ctx(), a.rows() + b.rows(), a.cols());
  const std::uint32_t m = a.ctx().m();
  for (std::size_t i = 0; i < a.rows(); ++i)
    std::copy(a.limbs(i, 0), a.limbs(i, 0) + a.cols() * m, out.limbs(i, 0));
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.limbs(i, 0), b.limbs(i, 0) + b.cols() * m,
              out.limbs(a.rows() + i, 0));
  return out;
}

MatrixFF hstack(const MatrixFF& a, const MatrixFF& b) {
  require_same_ctx(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  MatrixFF out(a.ctx(), a.rows(), a.cols() + b.cols());
  const std::uint32_t m = a.ctx().m();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.limbs(i, 0), a.limbs(i, 0) + a.cols() * m, out.limbs(i, 0));
    std::copy(b.limbs(i, 0), b.limbs(i, 0) + b.cols() * m,
              out.limbs(i, a.cols()));
  }
  return out;
}

namespace {

// dst_row -= f * src_row (entrywise over ncols entries).
void row_submul(const FieldCtx& ctx, std::uint32_t* dst,
                const std::uint32_t* src, const std::uint32_t* f,
                std::size_t ncols) {
  const std::uint32_t m = ctx.m();
  if (m == 1) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t c = f[0];
    if (c == 0) return;
    for (std::size_t k = 0; k < ncols; ++k) {
      std::uint64_t sub = c * src[k] % p;
      dst[k] = static_cast<std::uint32_t>((dst[k] + p - sub) % p);
    }
    return;
  }
  std::vector<std::uint32_t> prod(m);
  for (std::size_t k = 0; k < ncols; ++k) {
    ctx.raw_mul(f, src + k * m, prod.data());
    ctx.raw_sub(dst + k * m, prod.data(), dst + k * m);
  }
}

// row *= f
void row_scale(const FieldCtx& ctx, std::uint32_t* row, const std::uint32_t* f,
               std::size_t ncols) {
  const std::uint32_t m = ctx.m();
  if (m == 1) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t c = f[0];
    for (std::size_t k = 0; k < ncols; ++k)
      row[k] = static_cast<std::uint32_t>(c * row[k] % p);
    return;
  }
  std::vector<std::uint32_t> prod(m);
  for (std::size_t k = 0; k < ncols; ++k) {
    ctx.raw_mul(f, row + k * m, prod.data());
    std::copy(prod.begin(), prod.end(), row + k * m);
  }
}

}  // namespace

RrefResult rref(const MatrixFF& a) {
  MatrixFF r = a;
  const FieldCtx& ctx = r.ctx();
  const std::uint32_t m = ctx.m();
  const std::size_t rows = r.rows(), cols = r.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = rows;
    for (std::size_t i = pr; i < rows; ++i)
      if (!limbs_zero(r.limbs(i, pc), m)) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols * m; ++j)
        std::swap(r.limbs(pr, 0)[j], r.limbs(sel, 0)[j]);
    // Normalize the pivot row.
    FieldElement inv = r.get(pr, pc).inverse();
    row_scale(ctx, r.limbs(pr, 0), inv.coeffs().data(), cols);
    // Eliminate the column everywhere else.
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      if (!limbs_zero(r.limbs(i, pc), m)) {
        std::vector<std::uint32_t> f(r.limbs(i, pc), r.limbs(i, pc) + m);
        row_submul(ctx, r.limbs(i, 0), r.limbs(pr, 0), f.data(), cols);
      }
    }
    pivots.push_back(pc);
    ++pr;
  }
  return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

FieldElement det(const MatrixFF& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  // Plain forward elimination, tracking row swaps and pivot products.
  MatrixFF r = a;
  const FieldCtx& ctx = r.ctx();
  const std::uint32_t m = ctx.m();
  const std::size_t n = r.rows();
  FieldElement d = ctx.one();
  for (std::size_t pc = 0; pc < n; ++pc) {
    std::size_t sel = n;
    for (std::size_t i = pc; i < n; ++i)
      if (!limbs_zero(r.limbs(i, pc), m)) {
        sel = i;
        break;
      }
    if (sel == n) return ctx.zero();
    if (sel != pc) {
      for (std::size_t j = 0; j < n * m; ++j)
        std::swap(r.limbs(pc, 0)[j], r.limbs(sel, 0)[j]);
      d = -d;
    }
    FieldElement piv = r.get(pc, pc);
    d = d * piv;
    FieldElement inv = piv.inverse();
    row_scale(ctx, r.limbs(pc, 0), inv.coeffs().data(), n);
    for (std::size_t i = pc + 1; i < n; ++i)
      if (!limbs_zero(r.limbs(i, pc), m)) {
        std::vector<std::uint32_t> f(r.limbs(i, pc), r.limbs(i, pc) + m);
        row_submul(ctx, r.limbs(i, 0), r.limbs(pc, 0), f.data(), n);
      }
  }
  return d;
}

std::optional<MatrixFF> MatrixFF::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("inverse of a non-square matrix");
  RrefResult r = rref(hstack(*this, identity(ctx_, rows_)));
  // Invertible iff the left block reduced to the identity.
  if (r.rank < rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (r.pivot_cols[i] != i) return std::nullopt;
  MatrixFF inv(ctx_, rows_, rows_);
  const std::uint32_t m = ctx_.m();
  for (std::size_t i = 0; i < rows_; ++i)
    std::copy(r.rref.limbs(i, rows_), r.rref.limbs(i, rows_) + rows_ * m,
              inv.limbs(i, 0));
  return inv;
}

Subspace::Subspace(FieldCtx ctx, std::size_t ambient)
    : ctx_(std::move(ctx)), ambient_(ambient), basis_(ctx_, 0, ambient) {}

Subspace Subspace::from_rows(const MatrixFF& rows) {
  RrefResult r = rref(rows);
  Subspace out(rows.ctx(), rows.cols());
  MatrixFF basis(rows.ctx(), r.rank, rows.cols());
  const std::uint32_t m = rows.ctx().m();
  for (std::size_t i = 0; i < r.rank; ++i)
    std::copy(r.rref.limbs(i, 0), r.rref.limbs(i, 0) + rows.cols() * m,
              basis.limbs(i, 0));
  out.basis_ = std::move(basis);
  out.pivots_ = std::move(r.pivot_cols);
  return out;
}

bool Subspace::contains(const MatrixFF& row_vec) const {
  if (row_vec.ctx() != ctx_ || row_vec.rows() != 1 ||
      row_vec.cols() != ambient_)
    throw std::invalid_argument("vector does not live in this ambient space");
  MatrixFF v = row_vec;
  const std::uint32_t m = ctx_.m();
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t pc = pivots_[i];
    if (!limbs_zero(v.limbs(0, pc), m)) {
      std::vector<std::uint32_t> f(v.limbs(0, pc), v.limbs(0, pc) + m);
      row_submul(ctx_, v.limbs(0, 0), basis_.limbs(i, 0), f.data(), ambient_);
    }
  }
  return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row_slice(i))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ctx_ == b.ctx_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ctx() != v.ctx() || u.ambient() != v.ambient())
    throw std::invalid_argument("subspace sum in different ambient spaces");
  return Subspace::from_rows(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ctx() != v.ctx() || u.ambient() != v.ambient())
    throw std::invalid_argument(
        "subspace intersection in different ambient spaces");
  const std::size_t D = u.ambient();
  const FieldCtx& ctx = u.ctx();
  // Zassenhaus: rref of [U | U; V | 0]; rows whose left half vanished carry
  // the intersection in their right half.
  MatrixFF top = hstack(u.basis(), u.basis());
  MatrixFF bottom = hstack(v.basis(), MatrixFF(ctx, v.dim(), D));
  RrefResult r = rref(vstack(top, bottom));
  const std::uint32_t m = ctx.m();
  std::vector<std::size_t> take;
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivot_cols[i] >= D) take.push_back(i);
  MatrixFF rows(ctx, take.size(), D);
  for (std::size_t t = 0; t < take.size(); ++t)
    std::copy(r.rref.limbs(take[t], D), r.rref.limbs(take[t], D) + D * m,
              rows.limbs(t, 0));
  return Subspace::from_rows(rows);
}

Subspace kernel(const MatrixFF& a) {
  RrefResult r = rref(a);
  const std::size_t n = a.cols();
  const FieldCtx& ctx = a.ctx();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixFF rows(ctx, free_cols.size(), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t fc = free_cols[t];
    rows.set_int(t, fc, 1);
    for (std::size_t i = 0; i < r.rank; ++i)
      rows.set(t, r.pivot_cols[i], -r.rref.get(i, fc));
  }
  return Subspace::from_rows(rows);
}

std::optional<MatrixFF> solve(const MatrixFF& a, const MatrixFF& b) {
  if (b.rows() != 1 || b.cols() != a.rows())
    throw std::invalid_argument("solve expects b as a 1 x rows(A) vector");
  RrefResult r = rref(hstack(a, b.transpose()));
  const std::size_t n = a.cols();
  for (auto c : r.pivot_cols)
    if (c == n) return std::nullopt;  // inconsistent system
  MatrixFF x(a.ctx(), 1, n);
  for (std::size_t i = 0; i < r.rank; ++i)
    x.set(0, r.pivot_cols[i], r.rref.get(i, n));
  return x;
}

QuotientMap quotient_basis(std::size_t ambient_dim, const Subspace& u) {
  if (u.ambient() != ambient_dim)
    throw std::invalid_argument("quotient ambient dimension mismatch");
  const FieldCtx& ctx = u.ctx();
  const std::size_t D = ambient_dim;
  std::vector<bool> is_pivot(D, false);
  for (auto c : u.pivot_cols()) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < D; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const std::size_t q = comp.size();

  MatrixFF section(ctx, q, D);
  for (std::size_t b = 0; b < q; ++b) section.set_int(b, comp[b], 1);

  // projection: reduce v by the echelon basis of u, then read off the
  // complement coordinates.  Columns are indexed by the quotient basis.
  MatrixFF projection(ctx, D, q);
  for (std::size_t b = 0; b < q; ++b) projection.set_int(comp[b], b, 1);
  for (std::size_t t = 0; t < u.dim(); ++t) {
    const std::size_t pc = u.pivot_cols()[t];
    for (std::size_t b = 0; b < q; ++b)
      projection.set(pc, b, -u.basis().get(t, comp[b]));
  }
  return QuotientMap{std::move(projection), std::move(section)};
}

}  // namespace modrep
