#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace hpd {

namespace {

constexpr uint64_t kMaxQ = uint64_t{1} << 26;
constexpr uint64_t kTableLimit = 512;

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), constant term first, trailing zeros allowed.
using Pol = std::vector<uint32_t>;

int pol_deg(const Pol& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

Pol pol_mul(const Pol& a, const Pol& b, uint64_t p) {
  int da = pol_deg(a), db = pol_deg(b);
  if (da < 0 || db < 0) return {};
  Pol c(static_cast<size_t>(da + db + 1), 0);
  for (int i = 0; i <= da; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j <= db; ++j) {
      uint64_t v = c[static_cast<size_t>(i + j)] +
                   static_cast<uint64_t>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
      c[static_cast<size_t>(i + j)] = static_cast<uint32_t>(v % p);
    }
  }
  return c;
}

// Remainder of a modulo monic m.
Pol pol_mod(Pol a, const Pol& m, uint64_t p) {
  int dm = pol_deg(m);
  for (int da = pol_deg(a); da >= dm; da = pol_deg(a)) {
    uint32_t lead = a[static_cast<size_t>(da)];
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i) {
      uint64_t sub = static_cast<uint64_t>(lead) * m[static_cast<size_t>(i)] % p;
      uint64_t cur = a[static_cast<size_t>(i + shift)];
      a[static_cast<size_t>(i + shift)] = static_cast<uint32_t>((cur + p - sub) % p);
    }
  }
  return a;
}

bool pol_divides(const Pol& d, const Pol& a, uint64_t p) {
  // d monic up to a unit: normalize leading coefficient to 1 first.
  int dd = pol_deg(d);
  Pol dn = d;
  uint32_t lead = dn[static_cast<size_t>(dd)];
  if (lead != 1) {
    // lead^(p-2) mod p inverts in GF(p)
    uint64_t inv = 1, base = lead, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& c : dn) c = static_cast<uint32_t>(c * inv % p);
  }
  return pol_deg(pol_mod(a, dn, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..h/2.
bool is_irreducible(const Pol& f, uint64_t p) {
  int h = pol_deg(f);
  if (h <= 0) return false;
  if (h == 1) return true;
  for (int d = 1; 2 * d <= h; ++d) {
    Pol cand(static_cast<size_t>(d + 1), 0);
    cand[static_cast<size_t>(d)] = 1;
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        cand[static_cast<size_t>(i)] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (pol_divides(cand, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint64_t p, int h, std::vector<uint32_t> modulus)
    : p_(p), h_(h), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < h; ++i) q_ *= p;
  if (q_ <= kTableLimit) build_tables();
}

std::shared_ptr<const Field> Field::make(uint64_t p, int h,
                                         std::optional<std::vector<uint32_t>> modulus) {
  if (!is_prime(p)) fail(Err::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) fail(Err::ParameterOutOfRange, "extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxQ) fail(Err::ParameterOutOfRange, "field size exceeds supported limit 2^26");
  }
  std::vector<uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (static_cast<int>(mod.size()) != h + 1 || mod.back() != 1)
      fail(Err::ReducibleModulus, "modulus must be monic of degree h");
    for (auto& c : mod) c = static_cast<uint32_t>(c % p);
    if (mod.back() != 1) fail(Err::ReducibleModulus, "modulus must be monic of degree h");
    if (h > 1 && !is_irreducible(mod, p))
      fail(Err::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  } else {
    // Lexicographically least monic irreducible, coefficient tuple ordered
    // constant-first; the trailing ones digit of the scan counter varies fastest.
    mod.assign(static_cast<size_t>(h + 1), 0);
    mod[static_cast<size_t>(h)] = 1;
    if (h == 1) {
      mod[0] = 0;  // X; unused by prime-field arithmetic
    } else {
      uint64_t total = 1;
      for (int i = 0; i < h; ++i) total *= p;
      bool found = false;
      for (uint64_t code = 0; code < total && !found; ++code) {
        uint64_t c = code;
        for (int i = h - 1; i >= 0; --i) {
          mod[static_cast<size_t>(i)] = static_cast<uint32_t>(c % p);
          c /= p;
        }
        found = is_irreducible(mod, p);
      }
      if (!found) fail(Err::Internal, "no irreducible modulus found");
    }
  }
  return std::shared_ptr<const Field>(new Field(p, h, std::move(mod)));
}

std::shared_ptr<const Field> Field::parse(const std::string& spec) {
  std::string s = spec;
  std::optional<std::vector<uint32_t>> modulus;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string tail = s.substr(colon + 1);
    s = s.substr(0, colon);
    const std::string key = "modulus=";
    if (tail.rfind(key, 0) != 0) fail(Err::Parse, "bad field spec '" + spec + "'");
    std::vector<uint32_t> mod;
    std::stringstream ss(tail.substr(key.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail(Err::Parse, "bad modulus in field spec '" + spec + "'");
      mod.push_back(static_cast<uint32_t>(std::stoul(item)));
    }
    if (mod.empty()) fail(Err::Parse, "bad modulus in field spec '" + spec + "'");
    modulus = std::move(mod);
  }
  uint64_t p = 0;
  int h = 1;
  auto caret = s.find('^');
  try {
    if (caret == std::string::npos) {
      p = std::stoull(s);
    } else {
      p = std::stoull(s.substr(0, caret));
      h = std::stoi(s.substr(caret + 1));
    }
  } catch (const std::exception&) {
    fail(Err::Parse, "bad field spec '" + spec + "'");
  }
  return make(p, h, std::move(modulus));
}

std::string Field::spec_string() const {
  if (h_ == 1) return std::to_string(p_);
  std::string s = std::to_string(p_) + "^" + std::to_string(h_) + ":modulus=";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

std::vector<uint32_t> Field::to_coeffs(uint32_t a) const {
  std::vector<uint32_t> c(static_cast<size_t>(h_), 0);
  uint64_t v = a;
  for (int i = 0; i < h_; ++i) {
    c[static_cast<size_t>(i)] = static_cast<uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& c) const {
  uint64_t v = 0;
  for (int i = h_ - 1; i >= 0; --i) {
    uint32_t d = i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] % p_ : 0;
    v = v * p_ + d;
  }
  return static_cast<uint32_t>(v);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (h_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % p_);
  uint64_t out = 0, mult = 1;
  uint64_t va = a, vb = b;
  for (int i = 0; i < h_; ++i) {
    uint64_t da = va % p_, db = vb % p_;
    out += (da + db) % p_ * mult;
    va /= p_;
    vb /= p_;
    mult *= p_;
  }
  return static_cast<uint32_t>(out);
}

uint32_t Field::neg(uint32_t a) const {
  if (h_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
  uint64_t out = 0, mult = 1, va = a;
  for (int i = 0; i < h_; ++i) {
    uint64_t d = va % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    va /= p_;
    mult *= p_;
  }
  return static_cast<uint32_t>(out);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_direct(uint32_t a, uint32_t b) const {
  if (h_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  Pol pa = to_coeffs(a), pb = to_coeffs(b);
  Pol prod = pol_mul(pa, pb, p_);
  Pol red = pol_mod(std::move(prod), modulus_, p_);
  red.resize(static_cast<size_t>(h_), 0);
  return from_coeffs(red);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (has_tables_) return mul_tab_[static_cast<size_t>(a) * q_ + b];
  return mul_direct(a, b);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
  if (has_tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow_i(uint32_t a, int64_t e) const {
  if (e >= 0) return pow(a, static_cast<uint64_t>(e));
  return pow(inv(a), static_cast<uint64_t>(-e));
}

uint32_t Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint32_t>(r);
}

uint64_t Field::element_order(uint32_t a) const {
  if (a == 0) fail(Err::ZeroElement, "order of zero element");
  uint64_t n = 1;
  uint32_t x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::optional<uint32_t> Field::element_of_order_at_least(uint64_t n) const {
  if (n > q_ - 1) return std::nullopt;
  for (uint64_t a = 1; a < q_; ++a)
    if (element_order(static_cast<uint32_t>(a)) >= n) return static_cast<uint32_t>(a);
  return std::nullopt;
}

void Field::build_tables() {
  mul_tab_.resize(static_cast<size_t>(q_) * q_);
  for (uint64_t a = 0; a < q_; ++a)
    for (uint64_t b = a; b < q_; ++b) {
      uint32_t v = mul_direct(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
      mul_tab_[a * q_ + b] = v;
      mul_tab_[b * q_ + a] = v;
    }
  inv_tab_.assign(static_cast<size_t>(q_), 0);
  for (uint64_t a = 1; a < q_; ++a)
    for (uint64_t b = 1; b < q_; ++b)
      if (mul_tab_[a * q_ + b] == 1) {
        inv_tab_[a] = static_cast<uint32_t>(b);
        break;
      }
  has_tables_ = true;
}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same(b)) fail(Err::FieldMismatch, "elements belong to different fields");
}

}  // namespace hpd
