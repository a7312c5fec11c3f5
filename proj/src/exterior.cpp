#include "exterior.hpp"

#include <algorithm>
#include <numeric>

namespace hpd {

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
  return out;
}

uint64_t tuple_rank(const IndexTuple& t, int m) {
  // Number of increasing tuples lexicographically before t.
  uint64_t rank = 0;
  int r = static_cast<int>(t.size());
  int prev = -1;
  for (int pos = 0; pos < r; ++pos) {
    for (int c = prev + 1; c < t[static_cast<size_t>(pos)]; ++c)
      rank += binomial(m - 1 - c, r - 1 - pos);
    prev = t[static_cast<size_t>(pos)];
  }
  return rank;
}

IndexTuple tuple_unrank(uint64_t pos, int m, int r) {
  IndexTuple t(static_cast<size_t>(r));
  int c = 0;
  for (int i = 0; i < r; ++i) {
    while (true) {
      uint64_t block = binomial(m - 1 - c, r - 1 - i);
      if (pos < block) break;
      pos -= block;
      ++c;
    }
    t[static_cast<size_t>(i)] = c++;
  }
  return t;
}

bool next_tuple(IndexTuple& t, int m) {
  int r = static_cast<int>(t.size());
  for (int i = r - 1; i >= 0; --i) {
    if (t[static_cast<size_t>(i)] < m - (r - i)) {
      ++t[static_cast<size_t>(i)];
      for (int j = i + 1; j < r; ++j) t[static_cast<size_t>(j)] = t[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::string tuple_to_string(const IndexTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

namespace {

// Sorts idx in place; returns 0 on repeated entries, else the sign of the
// sorting permutation.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace

PlueckerVector PlueckerVector::from_coords(FieldPtr field, int m, int r,
                                           std::vector<uint32_t> coords) {
  if (r < 1 || r > m) fail(Err::RankOutOfRange, "tuple length out of range");
  if (coords.size() != binomial(m, r)) fail(Err::ShapeMismatch, "coordinate count mismatch");
  size_t first = 0;
  while (first < coords.size() && coords[first] == 0) ++first;
  if (first == coords.size()) fail(Err::ZeroRankSubspace, "all Pluecker coordinates are zero");
  const Field& f = *field;
  uint32_t s = f.inv(coords[first]);
  if (s != 1)
    for (auto& c : coords) c = f.mul(c, s);
  return PlueckerVector(std::move(field), m, r, std::move(coords));
}

uint32_t PlueckerVector::signed_at(const std::vector<int>& indices) const {
  std::vector<int> idx = indices;
  int sign = sort_with_sign(idx);
  if (sign == 0) return 0;
  uint32_t v = at(idx);
  return sign > 0 ? v : field_->neg(v);
}

PlueckerVector pluecker(const Subspace& h) {
  const int r = h.rank();
  const int m = h.ambient();
  if (r < 1) fail(Err::ZeroRankSubspace, "Pluecker coordinates need rank >= 1");
  std::vector<uint32_t> coords;
  coords.reserve(binomial(m, r));
  IndexTuple t(static_cast<size_t>(r));
  std::iota(t.begin(), t.end(), 0);
  Matrix minor(h.field(), r, r);
  do {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) minor.at(i, j) = h.basis().at(i, t[static_cast<size_t>(j)]);
    coords.push_back(determinant(minor));
  } while (next_tuple(t, m));
  return PlueckerVector::from_coords(h.field(), m, r, std::move(coords));
}

PlueckerVector dual_pluecker(const Subspace& w) {
  if (w.rank() < 1) fail(Err::ZeroRankSubspace, "dual Pluecker coordinates need rank >= 1");
  return pluecker(orthogonal_complement(w));
}

uint32_t pairing(const PlueckerVector& wstar, const PlueckerVector& h) {
  require_same_field(*wstar.field(), *h.field());
  if (wstar.m() != h.m() || wstar.r() != h.r())
    fail(Err::ShapeMismatch, "pairing of Pluecker vectors with different shapes");
  const Field& f = *h.field();
  uint32_t acc = 0;
  const auto& a = wstar.coords();
  const auto& b = h.coords();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

bool meets(const Subspace& h, const Subspace& w) {
  require_same_field(*h.field(), *w.field());
  if (h.ambient() != w.ambient()) fail(Err::AmbientMismatch, "meet test across ambient spaces");
  if (h.rank() + w.rank() != h.ambient())
    fail(Err::ShapeMismatch, "meet test needs rank H + rank W = m");
  return pairing(dual_pluecker(w), pluecker(h)) == 0;
}

bool meets_by_rank(const Subspace& h, const Subspace& w) {
  return intersect(h, w).rank() > 0;
}

std::optional<RelationViolation> relations_check(const PlueckerVector& v) {
  const int r = v.r();
  const int m = v.m();
  if (r < 2 || r >= m) return std::nullopt;  // no nontrivial relations
  const Field& f = *v.field();
  IndexTuple prefix(static_cast<size_t>(r - 1));
  std::iota(prefix.begin(), prefix.end(), 0);
  do {
    IndexTuple jlist(static_cast<size_t>(r + 1));
    std::iota(jlist.begin(), jlist.end(), 0);
    do {
      uint32_t acc = 0;
      std::vector<int> a(static_cast<size_t>(r));
      IndexTuple b(static_cast<size_t>(r));
      for (int n = 0; n <= r; ++n) {
        std::copy(prefix.begin(), prefix.end(), a.begin());
        a[static_cast<size_t>(r - 1)] = jlist[static_cast<size_t>(n)];
        uint32_t va = v.signed_at(a);
        if (va == 0) continue;
        int bi = 0;
        for (int k = 0; k <= r; ++k)
          if (k != n) b[static_cast<size_t>(bi++)] = jlist[static_cast<size_t>(k)];
        uint32_t vb = v.at(b);
        if (vb == 0) continue;
        uint32_t term = f.mul(va, vb);
        acc = (n % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
      }
      if (acc != 0) return RelationViolation{prefix, jlist, acc};
    } while (next_tuple(jlist, m));
  } while (next_tuple(prefix, m));
  return std::nullopt;
}

uint32_t Relation::evaluate(const PlueckerVector& v) const {
  const Field& f = *v.field();
  uint32_t acc = 0;
  for (const auto& t : terms_) {
    uint32_t prod = f.mul(v.at(t.a), v.at(t.b));
    acc = t.sign > 0 ? f.add(acc, prod) : f.sub(acc, prod);
  }
  return acc;
}

Relation relation_for_pair(const IndexTuple& i, const IndexTuple& j, int m) {
  const int r = static_cast<int>(i.size());
  if (i.size() != j.size() || r < 1) fail(Err::ShapeMismatch, "tuples of unequal length");
  auto validate = [&](const IndexTuple& t) {
    for (size_t k = 0; k < t.size(); ++k) {
      if (t[k] < 0 || t[k] >= m) fail(Err::ParameterOutOfRange, "tuple index out of range");
      if (k && t[k] <= t[k - 1]) fail(Err::ParameterOutOfRange, "tuple not strictly increasing");
    }
  };
  validate(i);
  validate(j);
  if (i == j) fail(Err::IdenticalTuples, "relation for identical tuples reduces to 0 = 0");
  long si = std::accumulate(i.begin(), i.end(), 0L);
  long sj = std::accumulate(j.begin(), j.end(), 0L);
  if (si != sj) fail(Err::UnequalIndexSums, "tuples have different index sums");

  // Largest position l (1-based) with i_l outside j. For r = 2 equal sums force
  // l = r, so the permutation below is the identity there.
  int l = -1;
  for (int pos = r - 1; pos >= 0; --pos) {
    if (!std::binary_search(j.begin(), j.end(), i[static_cast<size_t>(pos)])) {
      l = pos;
      break;
    }
  }
  if (l < 0) fail(Err::Internal, "equal-sum distinct tuples share all entries");

  // Even permutation sigma with sigma(r) = l: rotate positions l..r-1, then
  // swap the first two entries if the rotation was odd.
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  for (int pos = l; pos + 1 < r; ++pos) perm[static_cast<size_t>(pos)] = pos + 1;
  perm[static_cast<size_t>(r - 1)] = l;
  int cycle_len = r - l;
  if (cycle_len % 2 == 0) {
    if (r < 3) fail(Err::Internal, "no even permutation available");
    std::swap(perm[0], perm[1]);
  }
  std::vector<int> iperm(static_cast<size_t>(r));
  for (int pos = 0; pos < r; ++pos)
    iperm[static_cast<size_t>(pos)] = i[static_cast<size_t>(perm[static_cast<size_t>(pos)])];

  const int j0 = i[static_cast<size_t>(l)];
  std::vector<RelationTerm> terms;
  for (int n = 0; n <= r; ++n) {
    std::vector<int> a(iperm.begin(), iperm.end() - 1);
    a.push_back(n == 0 ? j0 : j[static_cast<size_t>(n - 1)]);
    int sa = sort_with_sign(a);
    if (sa == 0) continue;
    std::vector<int> b;
    if (n == 0) {
      b.assign(j.begin(), j.end());
    } else {
      b.push_back(j0);
      for (int k = 0; k < r; ++k)
        if (k != n - 1) b.push_back(j[static_cast<size_t>(k)]);
    }
    int sb = sort_with_sign(b);
    if (sb == 0) continue;
    int sign = sa * sb * (n % 2 == 0 ? 1 : -1);
    terms.push_back(RelationTerm{sign, IndexTuple(a.begin(), a.end()), IndexTuple(b.begin(), b.end())});
  }
  if (terms.empty() || terms.front().a != i || terms.front().b != j || terms.front().sign != 1)
    fail(Err::Internal, "leading relation term is not +H_i H_j");
  return Relation(i, j, std::move(terms));
}

}  // namespace hpd
