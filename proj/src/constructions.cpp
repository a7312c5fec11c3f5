#include "constructions.hpp"

#include <numeric>

namespace hpd {

Family family_from_string(const std::string& s) {
  if (s == "tangent") return Family::Tangent;
  if (s == "diverted") return Family::Diverted;
  if (s == "secant") return Family::Secant;
  fail(Err::Parse, "unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::Tangent: return "tangent";
    case Family::Diverted: return "diverted";
    case Family::Secant: return "secant";
  }
  return "?";
}

CoefficientScheme::CoefficientScheme(FieldPtr field, Family family, int r, int s,
                                     std::optional<uint32_t> omega)
    : field_(std::move(field)), family_(family), r_(r), s_(s), omega_(omega) {
  if (r < 1 || s < 1) fail(Err::ParameterOutOfRange, "scheme needs r,s >= 1");
  if (family != Family::Tangent && !omega_)
    fail(Err::InvalidScheme, family_to_string(family) + " scheme needs omega");
  if (omega_ && *omega_ >= field_->q())
    fail(Err::ParameterOutOfRange, "omega code out of range");
}

uint32_t CoefficientScheme::h(int i, int n) const {
  const Field& f = *field_;
  switch (family_) {
    case Family::Tangent: {
      if (i < n) return 0;
      // Falling factorial i (i-1) ... (i-n+1) through the prime subfield.
      uint32_t acc = 1;
      for (int t = 0; t < n; ++t) acc = f.mul(acc, f.from_int(i - t));
      return acc;
    }
    case Family::Diverted: {
      if (i >= r_ || i == n) return f.pow_i(*omega_, static_cast<int64_t>(n) * (i - r_));
      return 0;
    }
    case Family::Secant:
      return f.pow_i(*omega_, static_cast<int64_t>(n) * i);
  }
  return 0;
}

void CoefficientScheme::validate() const {
  const Field& f = *field_;
  switch (family_) {
    case Family::Tangent:
      if (f.p() <= static_cast<uint64_t>(m()))
        fail(Err::InvalidScheme, "tangent scheme needs characteristic > r+s");
      break;
    case Family::Secant: {
      if (*omega_ == 0) fail(Err::InvalidScheme, "secant scheme needs omega != 0");
      if (f.element_order(*omega_) < static_cast<uint64_t>(m()))
        fail(Err::InvalidScheme, "secant scheme needs an omega of order >= r+s");
      break;
    }
    case Family::Diverted: {
      if (*omega_ == 0) fail(Err::InvalidScheme, "diverted scheme needs omega != 0");
      CoeffScan scan = check_coeffs_nonzero(*this);
      if (!scan.all_nonzero)
        fail(Err::InvalidScheme, "diverted scheme coefficient vanishes at (" +
                                     tuple_to_string(*scan.offending) + ")");
      break;
    }
  }
}

std::vector<uint32_t> moment_point(const Field& f, uint32_t t, int d) {
  std::vector<uint32_t> v(static_cast<size_t>(d + 1));
  uint32_t acc = 1;
  for (int i = 0; i <= d; ++i) {
    v[static_cast<size_t>(i)] = acc;
    acc = f.mul(acc, t);
  }
  return v;
}

uint32_t scheme_coeff(const CoefficientScheme& scheme, const IndexTuple& tuple) {
  const int r = scheme.r();
  if (static_cast<int>(tuple.size()) != r)
    fail(Err::ShapeMismatch, "tuple length does not match r");
  Matrix m(scheme.field(), r, r);
  for (int n = 0; n < r; ++n)
    for (int l = 0; l < r; ++l) m.at(n, l) = scheme.h(tuple[static_cast<size_t>(l)], n);
  return determinant(m);
}

CoeffScan check_coeffs_nonzero(const CoefficientScheme& scheme) {
  IndexTuple t(static_cast<size_t>(scheme.r()));
  std::iota(t.begin(), t.end(), 0);
  do {
    if (scheme_coeff(scheme, t) == 0) return {false, t};
  } while (next_tuple(t, scheme.m()));
  return {true, std::nullopt};
}

std::optional<uint32_t> find_omega(const FieldPtr& field, int r, int s, Family family) {
  if (family == Family::Tangent)
    fail(Err::ParameterOutOfRange, "omega search applies to diverted and secant families");
  for (uint64_t w = 1; w < field->q(); ++w) {
    CoefficientScheme scheme(field, family, r, s, static_cast<uint32_t>(w));
    if (check_coeffs_nonzero(scheme).all_nonzero) return static_cast<uint32_t>(w);
  }
  return std::nullopt;
}

uint32_t generalized_vandermonde(const FieldPtr& field, const std::vector<int>& exponents,
                                 const std::vector<uint32_t>& elements) {
  if (exponents.size() != elements.size())
    fail(Err::LengthMismatch, "exponent and element lists differ in length");
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) fail(Err::MonotonicityViolation, "exponents must be nonnegative");
    if (i && exponents[i] <= exponents[i - 1])
      fail(Err::MonotonicityViolation, "exponents must be strictly increasing");
  }
  const Field& f = *field;
  const int n = static_cast<int>(exponents.size());
  Matrix m(field, n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      m.at(k, l) = f.pow(elements[static_cast<size_t>(k)],
                         static_cast<uint64_t>(exponents[static_cast<size_t>(l)]));
  return determinant(m);
}

SigmaBounds sigma_bounds(const std::vector<int>& j, const std::vector<int>& b, int d, int r) {
  if (j.size() != b.size()) fail(Err::LengthMismatch, "j and b lists differ in length");
  const int n = static_cast<int>(j.size());
  if (n < 1) fail(Err::ParameterOutOfRange, "empty lists");
  for (int k = 0; k < n; ++k) {
    if (j[static_cast<size_t>(k)] < 0 || j[static_cast<size_t>(k)] > r - 1)
      fail(Err::MonotonicityViolation, "j entries must lie in [0, r-1]");
    if (b[static_cast<size_t>(k)] < 0 || b[static_cast<size_t>(k)] > d - r)
      fail(Err::MonotonicityViolation, "b entries must lie in [0, d-r]");
    if (k > 0 && (j[static_cast<size_t>(k)] <= j[static_cast<size_t>(k - 1)] ||
                  b[static_cast<size_t>(k)] <= b[static_cast<size_t>(k - 1)]))
      fail(Err::MonotonicityViolation, "lists must be strictly increasing");
  }
  long long ident = 0, opp = 0;
  for (int k = 0; k < n; ++k) {
    ident += static_cast<long long>(b[static_cast<size_t>(k)]) * j[static_cast<size_t>(k)];
    opp += static_cast<long long>(b[static_cast<size_t>(k)]) * j[static_cast<size_t>(n - 1 - k)];
  }
  long long exact = 0;
  for (int k = 0; k < n; ++k)
    exact += static_cast<long long>(d - r - k) * (r - 1 - k);
  return {ident, opp, static_cast<long long>(n) * (d - r) * (r - 1), exact};
}

ExistenceReport existence_conditions(int r, int s, const Field& f) {
  if (r < 2 || s < 2) fail(Err::ParameterOutOfRange, "existence conditions need r,s >= 2");
  ExistenceReport rep{};
  rep.char_zero = false;
  rep.char_gt_m = f.p() > static_cast<uint64_t>(r + s);
  BigInt bound = BigInt(binomial(r + s, r)) * binomial(r, 2) * (s - 1);
  rep.size_gt_binom = BigInt(f.q()) > bound;
  BigInt char_pow = boost::multiprecision::pow(
      BigInt(f.p()), static_cast<unsigned>(binomial(r, 2) * static_cast<uint64_t>(s - 1)));
  rep.size_gt_char_pow = BigInt(f.q()) > char_pow;
  return rep;
}

Design Design::build(const CoefficientScheme& scheme) {
  scheme.validate();
  const Field& f = *scheme.field();
  const int r = scheme.r();
  const int m = scheme.m();
  const int binom_r2 = r * (r - 1) / 2;

  // Closed-form coordinates for every tuple: coeff(tuple) * t^{sum - C(r,2)},
  // one code path for all t with 0^0 = 1 covering the t = 0 member.
  std::vector<IndexTuple> tuples;
  std::vector<uint32_t> coeffs;
  {
    IndexTuple t(static_cast<size_t>(r));
    std::iota(t.begin(), t.end(), 0);
    do {
      tuples.push_back(t);
      coeffs.push_back(scheme_coeff(scheme, t));
    } while (next_tuple(t, m));
  }

  std::vector<DesignMember> members;
  members.reserve(f.q());
  for (uint64_t tc = 0; tc < f.q(); ++tc) {
    const uint32_t t = static_cast<uint32_t>(tc);
    std::vector<uint32_t> coords(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) {
      long sum = std::accumulate(tuples[i].begin(), tuples[i].end(), 0L);
      long e = sum - binom_r2;
      uint32_t te = (e == 0) ? 1 : f.pow(t, static_cast<uint64_t>(e));
      coords[i] = f.mul(coeffs[i], te);
    }
    PlueckerVector plk = PlueckerVector::from_coords(scheme.field(), m, r, std::move(coords));

    Subspace h = Subspace::zero(scheme.field(), m);
    if (t == 0) {
      Matrix rows(scheme.field(), r, m);
      for (int i = 0; i < r; ++i) rows.at(i, i) = 1;
      h = Subspace::from_rows(rows);
    } else {
      Matrix rows(scheme.field(), r, m);
      for (int n = 0; n < r; ++n)
        for (int i = 0; i < m; ++i) {
          uint32_t hin = scheme.h(i, n);
          if (hin == 0) continue;
          rows.at(n, i) = f.mul(hin, f.pow_i(t, i - n));
        }
      h = Subspace::from_rows(rows);
    }
    if (h.rank() != r) fail(Err::Internal, "design member has wrong rank");
    if (!(pluecker(h) == plk))
      fail(Err::Internal, "design member subspace and closed form disagree at t=" +
                              std::to_string(t));
    members.push_back(DesignMember{t, std::move(h), std::move(plk)});
  }
  return Design(scheme, std::move(members));
}

std::vector<Subspace> Design::member_subspaces() const {
  std::vector<Subspace> out;
  out.reserve(members_.size());
  for (const auto& mem : members_) out.push_back(mem.h);
  return out;
}

}  // namespace hpd
