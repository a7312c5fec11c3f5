#include "grassmann.hpp"

#include <algorithm>
#include <numeric>

namespace hpd {

BigInt gaussian_binomial(int m, int r, const BigInt& q) {
  if (r < 0 || r > m) fail(Err::RankOutOfRange, "gaussian binomial needs 0 <= r <= m");
  if (q < 2) fail(Err::ParameterOutOfRange, "gaussian binomial needs q >= 2");
  BigInt num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(m - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

long grass_dim(int r, int s) {
  if (r < 1 || s < 1) fail(Err::ParameterOutOfRange, "grass_dim needs r,s >= 1");
  return static_cast<long>(r) * s;
}

BigInt grass_degree(int r, int s) {
  if (r < 1 || s < 1) fail(Err::ParameterOutOfRange, "grass_degree needs r,s >= 1");
  auto fact = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  BigInt num = fact(r * s), den = 1;
  for (int i = 0; i < s; ++i) {
    num *= fact(i);
    den *= fact(r + i);
  }
  return num / den;
}

GrassmannIterator::GrassmannIterator(FieldPtr field, int m, int r)
    : field_(std::move(field)), m_(m), r_(r) {
  if (r < 0 || r > m) fail(Err::RankOutOfRange, "subspace rank out of range");
  BigInt count = gaussian_binomial(m, r, BigInt(field_->q()));
  if (count > BigInt(uint64_t{1} << 62))
    fail(Err::BudgetExceeded, "Grassmannian too large to index");
  // All pivot sets, colexicographic: compare last entries first.
  std::vector<int> p(static_cast<size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  if (r == 0) {
    pivot_sets_.push_back({});
  } else {
    while (true) {
      pivot_sets_.push_back(p);
      int i = r - 1;
      while (i >= 0 && p[static_cast<size_t>(i)] == m - (r - i)) --i;
      if (i < 0) break;
      ++p[static_cast<size_t>(i)];
      for (int k = i + 1; k < r; ++k) p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] + 1;
    }
    std::sort(pivot_sets_.begin(), pivot_sets_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                for (size_t k = a.size(); k-- > 0;)
                  if (a[k] != b[k]) return a[k] < b[k];
                return false;
              });
  }
  const uint64_t q = field_->q();
  prefix_.reserve(pivot_sets_.size() + 1);
  prefix_.push_back(0);
  for (const auto& ps : pivot_sets_) {
    std::vector<bool> is_pivot(static_cast<size_t>(m), false);
    for (int c : ps) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::pair<int, int>> frees;
    for (int i = 0; i < r; ++i)
      for (int c = ps[static_cast<size_t>(i)] + 1; c < m; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) frees.emplace_back(i, c);
    uint64_t cnt = 1;
    for (size_t k = 0; k < frees.size(); ++k) cnt *= q;
    prefix_.push_back(prefix_.back() + cnt);
    free_pos_.push_back(std::move(frees));
  }
  total_ = prefix_.back();
}

Subspace GrassmannIterator::at(uint64_t pos) const {
  if (pos >= total_) fail(Err::ParameterOutOfRange, "enumeration position out of range");
  size_t set_idx =
      static_cast<size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), pos) - prefix_.begin()) - 1;
  uint64_t rem = pos - prefix_[set_idx];
  const auto& ps = pivot_sets_[set_idx];
  const auto& frees = free_pos_[set_idx];
  const uint64_t q = field_->q();
  Matrix basis(field_, r_, m_);
  for (int i = 0; i < r_; ++i) basis.at(i, ps[static_cast<size_t>(i)]) = 1;
  for (const auto& [row, col] : frees) {
    basis.at(row, col) = static_cast<uint32_t>(rem % q);
    rem /= q;
  }
  return Subspace::from_rows(basis);
}

Subspace sample_subspace(const FieldPtr& field, int m, int r, std::mt19937_64& rng) {
  if (r < 0 || r > m) fail(Err::RankOutOfRange, "subspace rank out of range");
  if (r == 0) return Subspace::zero(field, m);
  const uint64_t q = field->q();
  while (true) {
    Matrix mat(field, r, m);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < m; ++j) mat.at(i, j) = static_cast<uint32_t>(rng() % q);
    Subspace s = Subspace::from_rows(mat);
    if (s.rank() == r) return s;
  }
}

}  // namespace hpd
