#include <doctest.h>

#include <random>

#include "grassmann.hpp"
#include "linalg.hpp"

using namespace hpd;

namespace {

Matrix from_rows_list(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
  return m;
}

Subspace span(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& rows) {
  return Subspace::from_rows(from_rows_list(f, rows));
}

Subspace coord_span(const FieldPtr& f, int m, const std::vector<int>& axes) {
  Matrix mat(f, static_cast<int>(axes.size()), m);
  for (size_t i = 0; i < axes.size(); ++i) mat.at(static_cast<int>(i), axes[i]) = 1;
  return Subspace::from_rows(mat);
}

}  // namespace

TEST_CASE("rref of a rank-deficient matrix") {
  auto f = Field::make(5, 1);
  // (2,4) = 2*(1,2), so the rows span one line.
  RrefResult r = rref(from_rows_list(f, {{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.mat.at(0, 0) == 1);
  CHECK(r.mat.at(0, 1) == 2);
}

TEST_CASE("rref fixes the identity") {
  auto f = Field::make(5, 1);
  Matrix id = Matrix::identity(f, 3);
  RrefResult r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.mat == id);
}

TEST_CASE("rref of the zero matrix") {
  auto f = Field::make(3, 1);
  RrefResult r = rref(Matrix(f, 2, 3));
  CHECK(r.rank == 0);
  CHECK(r.pivots.empty());
}

TEST_CASE("subspace_from_rows canonicalizes") {
  auto f = Field::make(5, 1);
  Subspace s = span(f, {{1, 1, 1, 1}, {1, 2, 4, 3}});
  CHECK(s.rank() == 2);
  CHECK(s.pivots() == std::vector<int>{0, 1});

  Subspace e0 = span(f, {{1, 0, 0, 0}});
  CHECK(e0.rank() == 1);
  CHECK(e0 == coord_span(f, 4, {0}));

  // A vector and its scalar multiple span the same rank-1 space.
  Subspace multiple = span(f, {{1, 2, 3, 4}, {2, 4, 1, 3}});
  CHECK(multiple.rank() == 1);
}

TEST_CASE("intersect on coordinate subspaces") {
  auto f = Field::make(3, 1);
  Subspace u = coord_span(f, 4, {0, 1});
  Subspace v = coord_span(f, 4, {1, 2});
  CHECK(intersect(u, v) == coord_span(f, 4, {1}));
  CHECK(intersect(u, u) == u);
  CHECK(intersect(u, coord_span(f, 4, {2, 3})).rank() == 0);
}

TEST_CASE("join") {
  auto f = Field::make(3, 1);
  CHECK(join(coord_span(f, 4, {0}), coord_span(f, 4, {1})) == coord_span(f, 4, {0, 1}));
  Subspace u = coord_span(f, 4, {0, 1});
  CHECK(join(u, Subspace::zero(f, 4)) == u);
  // Two distinct planes of F^4 sharing a line join to rank 3.
  Subspace v = coord_span(f, 4, {1, 2});
  CHECK(intersect(u, v).rank() == 1);
  CHECK(join(u, v).rank() == 3);
}

TEST_CASE("orthogonal complement") {
  auto f = Field::make(3, 1);
  CHECK(orthogonal_complement(coord_span(f, 4, {0, 1})) == coord_span(f, 4, {2, 3}));
  CHECK(orthogonal_complement(Subspace::zero(f, 4)) == Subspace::full(f, 4));

  // Self-orthogonal line over GF(2): <(1,1)|(1,1)> = 0.
  auto f2 = Field::make(2, 1);
  Subspace diag = span(f2, {{1, 1}});
  CHECK(orthogonal_complement(diag) == diag);
  CHECK(orthogonal_complement(diag).rank() == 1);  // rank m - rank U despite the overlap
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (uint64_t qv : {2, 3, 5}) {
    auto f = Field::make(qv, 1);
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 4);
      int cols = 1 + static_cast<int>(rng() % 5);
      Matrix m(f, rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % qv);
      CHECK(rref(m).rank + rref(kernel_basis(m)).rank == cols);
    }
  }
}

TEST_CASE("rank formula on random subspace pairs") {
  std::mt19937_64 rng(11);
  auto f = Field::make(3, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Subspace u = sample_subspace(f, 4, 1 + static_cast<int>(rng() % 3), rng);
    Subspace v = sample_subspace(f, 4, 1 + static_cast<int>(rng() % 3), rng);
    CHECK(intersect(u, v).rank() + join(u, v).rank() == u.rank() + v.rank());
  }
}

TEST_CASE("double complement is the identity, exhaustively") {
  for (uint64_t qv : {2, 3, 5}) {
    auto f = Field::make(qv, 1);
    for (int m = 1; m <= 5; ++m)
      for (int r = 0; r <= m; ++r) {
        GrassmannIterator it(f, m, r);
        for (uint64_t pos = 0; pos < it.size(); ++pos) {
          Subspace u = it.at(pos);
          Subspace perp = orthogonal_complement(u);
          CHECK(perp.rank() == m - u.rank());
          CHECK(orthogonal_complement(perp) == u);
        }
      }
  }
}

TEST_CASE("ambient mismatch is rejected") {
  auto f = Field::make(3, 1);
  CHECK_THROWS_AS(join(coord_span(f, 4, {0}), coord_span(f, 3, {0})), Error);
  auto g = Field::make(5, 1);
  CHECK_THROWS_AS(join(coord_span(f, 4, {0}), coord_span(g, 4, {0})), Error);
}

TEST_CASE("subspace text round trip") {
  auto f = Field::make(5, 1);
  Subspace s = span(f, {{1, 1, 1, 1}, {1, 2, 4, 3}});
  Subspace back = subspace_from_text(subspace_to_text(s));
  CHECK(back == s);
  Subspace z = Subspace::zero(f, 4);
  CHECK(subspace_from_text(subspace_to_text(z)) == z);

  auto f4 = Field::make(2, 2);
  Subspace e = span(f4, {{2, 3, 1, 0}});
  CHECK(subspace_from_text(subspace_to_text(e)) == e);
}
