#include "polycode/gf2matrix.hpp"

#include <bit>

#include "polycode/errors.hpp"

namespace polycode {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<Gf2Poly>& rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Gf2Poly t = truncate(rows[r], cols);
    const auto& w = t.words();
    for (std::size_t i = 0; i < w.size(); ++i) m.row(r)[i] = w[i];
  }
  return m;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::vstack(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.cols_) throw DomainError("vstack: column mismatch");
  Gf2Matrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v)
    row(r)[c / 64] |= bit;
  else
    row(r)[c / 64] &= ~bit;
}

Gf2Poly Gf2Matrix::row_poly(std::size_t r) const {
  return Gf2Poly(std::vector<std::uint64_t>(row(r), row(r) + stride_));
}

std::vector<Gf2Poly> Gf2Matrix::row_polys() const {
  std::vector<Gf2Poly> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_poly(r));
  return out;
}

void Gf2Matrix::append_row(const Gf2Poly& p) {
  const Gf2Poly t = truncate(p, cols_);
  data_.resize(data_.size() + stride_, 0);
  ++rows_;
  const auto& w = t.words();
  for (std::size_t i = 0; i < w.size(); ++i) row(rows_ - 1)[i] = w[i];
}

bool Gf2Matrix::is_zero() const {
  for (auto w : data_)
    if (w) return false;
  return true;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product: dimension mismatch");
  Gf2Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      const std::uint64_t* src = o.row(c);
      for (std::size_t i = 0; i < o.stride_; ++i) dst[i] ^= src[i];
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::rref(std::vector<std::size_t>* pivots) const {
  Gf2Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t sel = lead;
    while (sel < rows_ && !m.get(sel, c)) ++sel;
    if (sel == rows_) continue;
    if (sel != lead)
      for (std::size_t i = 0; i < stride_; ++i) std::swap(m.row(sel)[i], m.row(lead)[i]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != lead && m.get(r, c))
        for (std::size_t i = 0; i < stride_; ++i) m.row(r)[i] ^= m.row(lead)[i];
    }
    piv.push_back(c);
    ++lead;
  }
  m.rows_ = lead;
  m.data_.resize(lead * stride_);
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t Gf2Matrix::rank() const { return rref().rows(); }

Gf2Matrix Gf2Matrix::nullspace() const {
  std::vector<std::size_t> piv;
  const Gf2Matrix e = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  Gf2Matrix basis(0, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Gf2Poly v = Gf2Poly::monomial(f);
    for (std::size_t r = 0; r < e.rows(); ++r)
      if (e.get(r, f)) v.flip(piv[r]);
    basis.append_row(v);
  }
  return basis;
}

bool Gf2Matrix::row_space_contains(const Gf2Poly& v) const {
  if (v.degree() >= static_cast<int>(cols_)) return false;
  Gf2Matrix m = *this;
  m.append_row(v);
  return m.rank() == rank();
}

}  // namespace polycode
