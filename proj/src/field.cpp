#include "modrep/field.hpp"

#include <array>
#include <stdexcept>

namespace modrep {

namespace {

// Extension degrees beyond this are not needed anywhere in the project; the
// cap keeps multiplication scratch on the stack.
constexpr std::uint32_t kMaxDegree = 8;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Remainder of a mod b over F_p, both ascending-coefficient vectors with b
// monic.  Used only for the modulus search, so clarity over speed.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool poly_is_zero(const std::vector<std::uint32_t>& a) { return a.empty(); }

// Irreducibility by trial division: a monic polynomial of degree m >= 2 is
// irreducible iff no monic polynomial of degree 1..m/2 divides it.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    // Enumerate all monic divisor candidates of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t v = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

// Inverse mod p by extended Euclid on integers.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  if (m == 0 || m > kMaxDegree)
    throw std::invalid_argument("extension degree must be in [1, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(m));

  auto d = std::make_shared<Data>();
  d->p = p;
  d->m = m;
  d->size = 1;
  for (std::uint32_t i = 0; i < m; ++i) d->size *= p;

  // Lexicographically smallest monic irreducible of degree m.  Tuples
  // (c_{m-1}, ..., c_1, c_0) are ordered with c_0 as the fastest digit, so
  // e.g. quadratics x^2 + a x + b are tried in order of (a, b).
  bool found = false;
  for (std::uint64_t n = 0; n < d->size && !found; ++n) {
    std::vector<std::uint32_t> g(m + 1, 0);
    g[m] = 1;
    std::uint64_t v = n;
    for (std::uint32_t i = 0; i < m; ++i) {
      g[i] = static_cast<std::uint32_t>(v % p);  // constant term fastest
      v /= p;
    }
    if (is_irreducible(g, p)) {
      d->modulus = g;
      found = true;
    }
  }
  if (!found)
    throw std::runtime_error("no monic irreducible of requested degree");
  return FieldCtx(std::move(d));
}

FieldElement FieldCtx::zero() const {
  return FieldElement(*this, std::vector<std::uint32_t>(m(), 0));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::int64_t v) const {
  std::vector<std::uint32_t> c(m(), 0);
  std::int64_t r = v % static_cast<std::int64_t>(p());
  if (r < 0) r += p();
  c[0] = static_cast<std::uint32_t>(r);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::from_coeffs(const std::vector<std::int64_t>& c) const {
  if (c.size() > m())
    throw std::invalid_argument("too many coefficients for this field");
  std::vector<std::uint32_t> v(m(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t r = c[i] % static_cast<std::int64_t>(p());
    if (r < 0) r += p();
    v[i] = static_cast<std::uint32_t>(r);
  }
  return FieldElement(*this, std::move(v));
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  std::vector<std::uint32_t> c(m(), 0);
  for (std::uint64_t n = 0; n < size(); ++n) {
    std::uint64_t v = n;
    for (std::uint32_t i = 0; i < m(); ++i) {
      c[i] = static_cast<std::uint32_t>(v % p());
      v /= p();
    }
    out.push_back(FieldElement(*this, c));
  }
  return out;
}

void FieldCtx::raw_add(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const std::uint32_t q = p();
  for (std::uint32_t i = 0; i < m(); ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= q ? s - q : s;
  }
}

void FieldCtx::raw_sub(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const std::uint32_t q = p();
  for (std::uint32_t i = 0; i < m(); ++i)
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + q - b[i];
}

void FieldCtx::raw_neg(const std::uint32_t* a, std::uint32_t* out) const {
  const std::uint32_t q = p();
  for (std::uint32_t i = 0; i < m(); ++i) out[i] = a[i] == 0 ? 0 : q - a[i];
}

void FieldCtx::raw_mul(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const std::uint64_t q = p();
  const std::uint32_t deg = m();
  if (deg == 1) {
    out[0] = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a[0]) * b[0] % q);
    return;
  }
  // Schoolbook product, then reduce by the monic modulus.
  std::array<std::uint64_t, 2 * kMaxDegree - 1> conv{};
  for (std::uint32_t i = 0; i < deg; ++i)
    for (std::uint32_t j = 0; j < deg; ++j)
      conv[i + j] += static_cast<std::uint64_t>(a[i]) * b[j] % q;
  const auto& mod = modulus();
  for (std::uint32_t i = 2 * deg - 2; i >= deg; --i) {
    std::uint64_t c = conv[i] % q;
    if (c != 0) {
      // x^i = -sum_j mod[j] x^{i-deg+j}
      for (std::uint32_t j = 0; j < deg; ++j) {
        std::uint64_t sub = c * mod[j] % q;
        conv[i - deg + j] = (conv[i - deg + j] + q * q - sub) % q;
      }
    }
    conv[i] = 0;
  }
  for (std::uint32_t i = 0; i < deg; ++i)
    out[i] = static_cast<std::uint32_t>(conv[i] % q);
}

FieldElement::FieldElement(FieldCtx ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (c_.size() != ctx_.m())
    throw std::invalid_argument("coefficient count does not match field");
  for (auto v : c_)
    if (v >= ctx_.p())
      throw std::invalid_argument("coefficient out of range");
}

bool FieldElement::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

namespace {
void require_same_ctx(const FieldElement& a, const FieldElement& b) {
  if (a.ctx() != b.ctx())
    throw std::invalid_argument("field elements from different contexts");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_ctx(*this, o);
  std::vector<std::uint32_t> out(ctx_.m());
  ctx_.raw_add(c_.data(), o.c_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_ctx(*this, o);
  std::vector<std::uint32_t> out(ctx_.m());
  ctx_.raw_sub(c_.data(), o.c_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  std::vector<std::uint32_t> out(ctx_.m());
  ctx_.raw_neg(c_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_ctx(*this, o);
  std::vector<std::uint32_t> out(ctx_.m());
  ctx_.raw_mul(c_.data(), o.c_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field");
  const std::uint32_t p = ctx_.p();
  if (ctx_.m() == 1) {
    std::vector<std::uint32_t> out{mod_inverse(c_[0], p)};
    return FieldElement(ctx_, std::move(out));
  }
  // Extended Euclid in F_p[t]: s * this + t * modulus = gcd = const.
  using Poly = std::vector<std::uint32_t>;
  auto trim = [](Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  };
  auto scale = [&](const Poly& a, std::uint64_t f) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i] = static_cast<std::uint32_t>(a[i] * f % p);
    return out;
  };
  auto sub = [&](const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint32_t x = i < a.size() ? a[i] : 0;
      std::uint32_t y = i < b.size() ? b[i] : 0;
      out[i] = x >= y ? x - y : x + p - y;
    }
    trim(out);
    return out;
  };
  auto shift_mul = [&](const Poly& a, std::size_t sh, std::uint64_t f) {
    Poly out(a.size() + sh, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      out[i + sh] = static_cast<std::uint32_t>(a[i] * f % p);
    return out;
  };

  Poly r0(ctx_.modulus());
  Poly r1(c_);
  trim(r1);
  Poly s0{}, s1{1};  // Bezout coefficients for `this`
  while (!r1.empty()) {
    // One division step: r0 = q * r1 + r2.
    Poly q{};
    Poly rem = r0;
    std::uint32_t lead_inv = mod_inverse(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::size_t sh = rem.size() - r1.size();
      std::uint64_t f = static_cast<std::uint64_t>(rem.back()) * lead_inv % p;
      if (q.size() < sh + 1) q.resize(sh + 1, 0);
      q[sh] = static_cast<std::uint32_t>((q[sh] + f) % p);
      rem = sub(rem, shift_mul(r1, sh, f));
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q * s1)
    Poly qs1{};
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      Poly term = shift_mul(s1, i, q[i]);
      qs1 = sub(qs1, scale(term, p - 1));  // qs1 += term
    }
    Poly s2 = sub(s0, qs1);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r0.size() != 1)
    throw std::domain_error("element not invertible (gcd not constant)");
  std::uint64_t g_inv = mod_inverse(r0[0], p);
  Poly inv = scale(s0, g_inv);
  inv.resize(ctx_.m(), 0);
  return FieldElement(ctx_, std::move(inv));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement acc = ctx_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement FieldElement::frobenius() const { return pow(ctx_.p()); }

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::uint32_t i = ctx_.m(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

FieldElement embed(const FieldElement& a, const FieldCtx& target) {
  if (a.ctx().m() != 1)
    throw std::invalid_argument("embed expects a prime-field element");
  if (a.ctx().p() != target.p())
    throw std::invalid_argument("embed requires matching characteristic");
  return target.from_int(a.coeff(0));
}

std::pair<FieldElement, FieldElement> quadratic_roots(const FieldElement& a,
                                                      const FieldElement& b,
                                                      const FieldCtx& ctx2) {
  if (a.ctx().m() != 1 || b.ctx().m() != 1 || a.ctx() != b.ctx())
    throw std::invalid_argument(
        "quadratic coefficients must come from one prime field");
  if (ctx2.p() != a.ctx().p() || ctx2.m() != 2)
    throw std::invalid_argument(
        "root field must be the quadratic extension of the coefficient field");

  const std::uint32_t p = a.ctx().p();
  // Reducible over F_p?  Then the caller asked for the wrong thing.
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = (static_cast<std::uint64_t>(x) * x +
                       static_cast<std::uint64_t>(a.coeff(0)) * x + b.coeff(0)) % p;
    if (v == 0)
      throw std::domain_error("quadratic is reducible over the prime field");
  }

  FieldElement a2 = embed(a, ctx2);
  FieldElement b2 = embed(b, ctx2);
  for (const FieldElement& x : ctx2.elements()) {
    if ((x * x + a2 * x + b2).is_zero()) {
      FieldElement conj = x.frobenius();
      if (!(conj * conj + a2 * conj + b2).is_zero() || conj == x)
        throw std::runtime_error("conjugate root check failed");
      // Vieta: sum and product must match the coefficients.
      if (x + conj != -a2 || x * conj != b2)
        throw std::runtime_error("Vieta check failed for quadratic roots");
      return {x, conj};
    }
  }
  throw std::runtime_error("irreducible quadratic with no root in F_{p^2}");
}

}  // namespace modrep
