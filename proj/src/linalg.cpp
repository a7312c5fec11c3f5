#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hpd {

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<uint32_t> Matrix::row(int i) const {
  return std::vector<uint32_t>(a_.begin() + static_cast<size_t>(i) * cols_,
                               a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = *a.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
    uint32_t s = f.inv(a.at(row, col));
    for (int j = col; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), s);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      uint32_t c = a.at(i, col);
      for (int j = col; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), row, std::move(pivots)};
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = *m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Matrix k(m.field(), static_cast<int>(free_cols.size()), m.cols());
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k.at(static_cast<int>(fi), fc) = 1;
    for (int pi = 0; pi < r.rank; ++pi)
      k.at(static_cast<int>(fi), r.pivots[static_cast<size_t>(pi)]) = f.neg(r.mat.at(pi, fc));
  }
  return k;
}

uint32_t determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const Field& f = *a.field();
  const int n = a.rows();
  uint32_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(col, col));
    uint32_t s = f.inv(a.at(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      uint32_t c = f.mul(a.at(i, col), s);
      for (int j = col; j < n; ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
    }
  }
  return det;
}

std::vector<uint32_t> mat_vec_rows(const Matrix& m, const std::vector<uint32_t>& x) {
  const Field& f = *m.field();
  std::vector<uint32_t> out(static_cast<size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<size_t>(j)] =
          f.add(out[static_cast<size_t>(j)], f.mul(x[static_cast<size_t>(i)], m.at(i, j)));
  }
  return out;
}

Subspace Subspace::from_rows(const Matrix& rows) {
  RrefResult r = rref(rows);
  Matrix basis(rows.field(), r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::zero(FieldPtr field, int m) {
  return Subspace(Matrix(std::move(field), 0, m), {});
}

Subspace Subspace::full(FieldPtr field, int m) {
  return from_rows(Matrix::identity(std::move(field), m));
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
  const Field& f = *field();
  std::vector<uint32_t> rem = v;
  for (int i = 0; i < rank(); ++i) {
    uint32_t c = rem[static_cast<size_t>(pivots_[static_cast<size_t>(i)])];
    if (c == 0) continue;
    for (int j = 0; j < ambient(); ++j)
      rem[static_cast<size_t>(j)] = f.sub(rem[static_cast<size_t>(j)], f.mul(c, basis_.at(i, j)));
  }
  return std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.rank(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

std::vector<uint32_t> Subspace::coordinates_of(const std::vector<uint32_t>& v) const {
  const Field& f = *field();
  std::vector<uint32_t> x(static_cast<size_t>(rank()), 0);
  std::vector<uint32_t> rem = v;
  for (int i = 0; i < rank(); ++i) {
    uint32_t c = rem[static_cast<size_t>(pivots_[static_cast<size_t>(i)])];
    x[static_cast<size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j < ambient(); ++j)
      rem[static_cast<size_t>(j)] = f.sub(rem[static_cast<size_t>(j)], f.mul(c, basis_.at(i, j)));
  }
  if (!std::all_of(rem.begin(), rem.end(), [](uint32_t y) { return y == 0; }))
    fail(Err::Internal, "vector outside subspace in coordinates_of");
  return x;
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
  require_same_field(*u.field(), *v.field());
  if (u.ambient() != v.ambient())
    fail(Err::AmbientMismatch, "subspaces live in different ambient spaces");
}
}  // namespace

Subspace join(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  Matrix stacked(u.field(), u.rank() + v.rank(), u.ambient());
  for (int i = 0; i < u.rank(); ++i)
    for (int j = 0; j < u.ambient(); ++j) stacked.at(i, j) = u.basis().at(i, j);
  for (int i = 0; i < v.rank(); ++i)
    for (int j = 0; j < u.ambient(); ++j) stacked.at(u.rank() + i, j) = v.basis().at(i, j);
  return Subspace::from_rows(stacked);
}

Subspace orthogonal_complement(const Subspace& u) {
  return Subspace::from_rows(kernel_basis(u.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return orthogonal_complement(join(orthogonal_complement(u), orthogonal_complement(v)));
}

std::string subspace_to_text(const Subspace& s) {
  std::ostringstream out;
  out << "m=" << s.ambient() << " q=" << s.field()->spec_string() << "\n";
  for (int i = 0; i < s.rank(); ++i) {
    for (int j = 0; j < s.ambient(); ++j) {
      if (j) out << ' ';
      out << s.basis().at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

Subspace subspace_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) fail(Err::Parse, "empty subspace text");
  int m = 0;
  std::string qspec;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
      else if (tok.rfind("q=", 0) == 0) qspec = tok.substr(2);
    }
  }
  if (m <= 0 || qspec.empty()) fail(Err::Parse, "bad subspace header '" + header + "'");
  FieldPtr f = Field::parse(qspec);
  std::vector<std::vector<uint32_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::istringstream ls(line);
    std::vector<uint32_t> row;
    uint64_t v;
    while (ls >> v) row.push_back(static_cast<uint32_t>(v));
    if (static_cast<int>(row.size()) != m) fail(Err::Parse, "row length does not match ambient");
    rows.push_back(std::move(row));
  }
  Matrix mat(f, static_cast<int>(rows.size()), m);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < m; ++j) mat.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
  return Subspace::from_rows(mat);
}

}  // namespace hpd
