#include "kzdirac/matc.hpp"

#include <algorithm>
#include <cmath>

#include "kzdirac/errors.hpp"

namespace kzdirac {

MatC::MatC(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols) throw ShapeMismatch("initializer size != rows*cols");
}

MatC MatC::identity(std::size_t n) {
  MatC m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatC MatC::zero(std::size_t rows, std::size_t cols) { return MatC(rows, cols); }

MatC MatC::diag(const std::vector<cplx>& d) {
  MatC m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatC MatC::diag_real(const std::vector<double>& d) {
  MatC m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatC& MatC::operator+=(const MatC& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MatC& MatC::operator-=(const MatC& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

MatC& MatC::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

MatC MatC::dagger() const {
  MatC m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

MatC MatC::transpose() const {
  MatC m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

MatC MatC::conj() const {
  MatC m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

double MatC::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double MatC::max_abs() const {
  double s = 0.0;
  for (const auto& v : data_) s = std::max(s, std::abs(v));
  return s;
}

bool MatC::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = std::max(1.0, max_abs());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol * scale) return false;
  return true;
}

bool MatC::is_skew_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = std::max(1.0, max_abs());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) + std::conj((*this)(c, r))) > tol * scale) return false;
  return true;
}

bool MatC::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return distance_from_identity(dagger() * (*this)) <= tol * double(rows_);
}

MatC operator+(MatC a, const MatC& b) { return a += b; }
MatC operator-(MatC a, const MatC& b) { return a -= b; }

MatC operator*(const MatC& a, const MatC& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product");
  MatC m(a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), p = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a(i, l);
      if (ail == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < p; ++j) m(i, j) += ail * b(l, j);
    }
  }
  return m;
}

MatC operator*(cplx s, MatC a) { return a *= s; }
MatC operator*(double s, MatC a) { return a *= cplx(s, 0.0); }

MatC kron(const MatC& a, const MatC& b) {
  MatC m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const cplx v = a(ra, ca);
      if (v == cplx(0.0, 0.0)) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          m(ra * b.rows() + rb, ca * b.cols() + cb) = v * b(rb, cb);
    }
  return m;
}

MatC commutator(const MatC& a, const MatC& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols())
    throw ShapeMismatch("commutator");
  return a * b - b * a;
}

MatC anticommutator(const MatC& a, const MatC& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols())
    throw ShapeMismatch("anticommutator");
  return a * b + b * a;
}

double diff_norm(const MatC& a, const MatC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("diff_norm");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

double distance_from_identity(const MatC& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("distance_from_identity");
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      s += std::norm(m(r, c) - (r == c ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
  return std::sqrt(s);
}

std::vector<cplx> matvec(const MatC& m, const std::vector<cplx>& v) {
  if (v.size() != m.cols()) throw ShapeMismatch("matvec");
  std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cplx s(0.0, 0.0);
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

std::vector<cplx> matvec_dagger(const MatC& m, const std::vector<cplx>& v) {
  if (v.size() != m.rows()) throw ShapeMismatch("matvec_dagger");
  std::vector<cplx> out(m.cols(), cplx(0.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const cplx vr = v[r];
    if (vr == cplx(0.0, 0.0)) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += std::conj(m(r, c)) * vr;
  }
  return out;
}

}  // namespace kzdirac
