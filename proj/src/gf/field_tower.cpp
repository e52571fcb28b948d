// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/gf/field_tower.hpp"

#include <charconv>
#include <sstream>

#include "rankcrypt/error.hpp"

namespace rankcrypt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ShapeMismatch: return "shape mismatch";
    case ErrorCode::LayerMismatch: return "layer mismatch";
    case ErrorCode::TowerMismatch: return "tower mismatch";
    case ErrorCode::SingularMatrix: return "singular matrix";
    case ErrorCode::ZeroInverse: return "inverse of zero";
    case ErrorCode::DependentPoints: return "dependent evaluation points";
    case ErrorCode::ParameterViolation: return "parameter violation";
    case ErrorCode::CapExceeded: return "enumeration cap exceeded";
    case ErrorCode::CyclicTopology: return "cyclic topology";
    case ErrorCode::Unreachable: return "unreachable destination";
    case ErrorCode::NoReceivers: return "no receivers";
    case ErrorCode::UnknownEdge: return "unknown edge";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown";
}

namespace gf {

namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t x) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q) {
  std::int64_t t = 0, new_t = 1, r = q, new_r = a;
  while (new_r != 0) {
    const std::int64_t quo = r / new_r;
    t -= quo * new_t;
    std::swap(t, new_t);
    r -= quo * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q;
  return static_cast<std::uint32_t>(t);
}

// Remainder of num modulo a monic divisor, both ascending and over GF(q).
bool divides(std::span<const std::uint32_t> divisor, std::vector<std::uint32_t> num,
             std::uint32_t q) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::uint32_t c = num[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::uint64_t sub = static_cast<std::uint64_t>(c) * divisor[j] % q;
      num[i - dd + j] = static_cast<std::uint32_t>((num[i - dd + j] + q - sub) % q);
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) return false;
  }
  return true;
}

std::uint32_t parse_uint(std::string_view text) {
  std::uint32_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorCode::Parse, "expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

bool FieldTower::is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t q) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  std::vector<std::uint32_t> num(poly.begin(), poly.end());
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::vector<std::uint32_t> divisor(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= q;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(x % q);
        x /= q;
      }
      if (divides(divisor, num, q)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> FieldTower::default_modulus(std::uint32_t q, std::uint32_t m) {
  require(is_prime(q), ErrorCode::InvalidArgument, "base characteristic must be prime");
  require(m >= 1, ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::vector<std::uint32_t> poly(m + 1, 0);
  poly[m] = 1;
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < m; ++i) combos *= q;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t x = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      poly[i] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    if (is_irreducible(poly, q)) return poly;
  }
  fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

std::shared_ptr<const FieldTower> FieldTower::create(std::uint32_t q, std::uint32_t m,
                                                     std::vector<std::uint32_t> modulus) {
  if (modulus.empty()) modulus = default_modulus(q, m);
  return std::make_shared<const FieldTower>(q, m, std::move(modulus));
}

FieldTower::FieldTower(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : q_(q), m_(m), size_(0), modulus_(std::move(modulus)) {
  require(is_prime(q), ErrorCode::InvalidArgument,
          "base characteristic q=" + std::to_string(q) + " is not prime");
  require(m >= 1, ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= q;
    require(size <= kMaxFieldSize, ErrorCode::InvalidArgument,
            "field size q^m exceeds the 2^20 cap");
  }
  size_ = static_cast<std::uint32_t>(size);
  require(modulus_.size() == m + 1, ErrorCode::InvalidArgument,
          "modulus must have m+1 coefficients");
  for (std::uint32_t c : modulus_) {
    require(c < q, ErrorCode::InvalidArgument, "modulus coefficient out of range");
  }
  require(modulus_[m] == 1, ErrorCode::InvalidArgument, "modulus must be monic");
  require(is_irreducible(modulus_, q), ErrorCode::InvalidArgument,
          "modulus is reducible over GF(" + std::to_string(q) + ")");
  alpha_ = m > 1 ? q : base_neg(modulus_[0]);
  build_tables();
}

Elem FieldTower::mul_reference(Elem a, Elem b) const {
  const std::vector<std::uint32_t> da = digits(a);
  const std::vector<std::uint32_t> db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % q_;
    }
  }
  for (std::size_t i = prod.size(); i-- > m_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= m_; ++j) {
      const std::uint64_t sub = c * modulus_[j] % q_;
      prod[i - m_ + j] = (prod[i - m_ + j] + q_ - sub) % q_;
    }
  }
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

void FieldTower::build_tables() {
  const std::uint32_t order = size_ - 1;
  auto pow_ref = [this](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = mul_reference(result, a);
      a = mul_reference(a, a);
      e >>= 1;
    }
    return result;
  };
  const std::vector<std::uint32_t> factors = prime_factors(order);
  auto is_generator = [&](Elem g) {
    if (g == 0) return false;
    for (std::uint32_t p : factors) {
      if (pow_ref(g, order / p) == 1) return false;
    }
    return true;
  };
  primitive_ = 0;
  if (is_generator(alpha_)) {
    primitive_ = alpha_;
  } else {
    for (Elem g = 1; g < size_; ++g) {
      if (is_generator(g)) {
        primitive_ = g;
        break;
      }
    }
  }

  // Multiplication by the generator is linear over GF(q): precompute its
  // action on the power basis.
  std::vector<Elem> g_times_basis(m_);
  Elem basis = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    g_times_basis[i] = mul_reference(primitive_, basis);
    basis *= q_;
  }
  log_.assign(size_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    exp_[i + order] = cur;
    log_[cur] = i;
    Elem next = 0;
    Elem x = cur;
    for (std::uint32_t j = 0; j < m_ && x != 0; ++j) {
      const std::uint32_t d = x % q_;
      x /= q_;
      for (std::uint32_t r = 0; r < d; ++r) next = add(next, g_times_basis[j]);
    }
    cur = next;
  }
  tables_ = simd::ExtTables{log_.data(), exp_.data(), order, q_, m_};
}

bool FieldTower::same_as(const FieldTower& other) const {
  return this == &other || (q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_);
}

Elem FieldTower::neg(Elem a) const {
  if (q_ == 2) return a;
  Elem out = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += base_neg(a % q_) * place;
    a /= q_;
    place *= q_;
  }
  return out;
}

Elem FieldTower::inv(Elem a) const {
  require(a != 0, ErrorCode::ZeroInverse, "inversion of zero in GF(q^m)");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem FieldTower::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem FieldTower::frobenius(Elem a, std::int64_t i) const {
  if (a == 0) return 0;
  std::int64_t r = i % static_cast<std::int64_t>(m_);
  if (r < 0) r += m_;
  const std::uint64_t order = size_ - 1;
  std::uint64_t e = 1;
  for (std::int64_t j = 0; j < r; ++j) e = e * q_ % order;
  if (order == 1) e = 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % order];
}

std::uint32_t FieldTower::base_inv(std::uint32_t a) const {
  require(a % q_ != 0, ErrorCode::ZeroInverse, "inversion of zero in GF(q)");
  return mod_inverse(a, q_);
}

std::vector<std::uint32_t> FieldTower::digits(Elem a) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = a % q_;
    a /= q_;
  }
  return out;
}

Elem FieldTower::from_digits(std::span<const std::uint32_t> ds) const {
  require(ds.size() == m_, ErrorCode::ShapeMismatch, "expected m digits");
  Elem out = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    require(ds[i] < q_, ErrorCode::InvalidArgument, "digit out of range");
    out = out * q_ + ds[i];
  }
  return out;
}

std::string FieldTower::format(Elem a) const {
  std::string out;
  const auto ds = digits(a);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (q_ > 10 && i > 0) out += ':';
    out += std::to_string(ds[i]);
  }
  return out;
}

Elem FieldTower::parse_elem(std::string_view text) const {
  std::vector<std::uint32_t> ds;
  if (q_ > 10) {
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = text.find(':', start);
      ds.push_back(parse_uint(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    for (char ch : text) {
      require(ch >= '0' && ch <= '9', ErrorCode::Parse,
              "bad digit in element '" + std::string(text) + "'");
      ds.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  require(ds.size() == m_, ErrorCode::Parse,
          "element '" + std::string(text) + "' must have " + std::to_string(m_) + " digits");
  for (auto d : ds) require(d < q_, ErrorCode::Parse, "digit out of range in '" + std::string(text) + "'");
  return from_digits(ds);
}

std::string FieldTower::spec() const {
  std::ostringstream out;
  out << q_ << '^' << m_ << '/';
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i > 0) out << ',';
    out << modulus_[i];
  }
  return out.str();
}

std::shared_ptr<const FieldTower> FieldTower::parse(std::string_view spec) {
  const std::size_t caret = spec.find('^');
  require(caret != std::string_view::npos, ErrorCode::Parse,
          "field spec must look like q^m/p0,...,pm");
  const std::size_t slash = spec.find('/');
  const std::uint32_t q = parse_uint(spec.substr(0, caret));
  const std::uint32_t m = parse_uint(
      spec.substr(caret + 1, slash == std::string_view::npos ? slash : slash - caret - 1));
  std::vector<std::uint32_t> modulus;
  if (slash != std::string_view::npos) {
    std::string_view rest = spec.substr(slash + 1);
    while (true) {
      const std::size_t comma = rest.find(',');
      modulus.push_back(parse_uint(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return create(q, m, std::move(modulus));
}

}  // namespace gf
}  // namespace rankcrypt
