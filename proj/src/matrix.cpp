#include "wreathkit/matrix.hpp"

#include <string>

namespace wreathkit {

namespace {
void check_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch(a.field().str() + " vs " + b.field().str());
}
std::string dims(const Mat& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}
}  // namespace

Mat Mat::identity(FieldSpec f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check_field(*this, o);
  if (cols_ != o.rows_) throw ShapeMismatch("matmul " + dims(*this) + " * " + dims(o));
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("add " + dims(*this) + " + " + dims(o));
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("sub " + dims(*this) + " - " + dims(o));
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Mat Mat::kron(const Mat& o) const {
  check_field(*this, o);
  Mat r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("eq " + dims(*this) + " vs " + dims(o));
  return e_ == o.e_;
}

bool Mat::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Mat::first_nonzero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.r = m;
  Mat& r = res.r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
    Scalar piv_inv = r.at(row, col).inv();
    for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) = r.at(row, j) * piv_inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Scalar f = r.at(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) = r.at(i, j) - f * r.at(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  RrefResult rr = rref(aug);
  if (rr.rank != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (rr.pivots[i] != i) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

Mat nullspace(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(m.field(), free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.at(k, fc) = Scalar::one(m.field());
    for (std::size_t i = 0; i < rr.rank; ++i)
      basis.at(k, rr.pivots[i]) = -rr.r.at(i, fc);
  }
  return basis;
}

}  // namespace wreathkit
