#ifndef KZDIRAC_MATC_HPP
#define KZDIRAC_MATC_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kzdirac {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The universal numeric carrier of the
/// project; all operators live in this type.
class MatC {
 public:
  MatC() = default;
  MatC(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}
  MatC(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

  static MatC identity(std::size_t n);
  static MatC zero(std::size_t rows, std::size_t cols);
  static MatC diag(const std::vector<cplx>& d);
  static MatC diag_real(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  MatC& operator+=(const MatC& o);
  MatC& operator-=(const MatC& o);
  MatC& operator*=(cplx s);

  MatC dagger() const;
  MatC transpose() const;
  MatC conj() const;

  double frobenius_norm() const;
  double max_abs() const;

  bool is_hermitian(double tol = 1e-12) const;
  bool is_skew_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

MatC operator+(MatC a, const MatC& b);
MatC operator-(MatC a, const MatC& b);
MatC operator*(const MatC& a, const MatC& b);
MatC operator*(cplx s, MatC a);
MatC operator*(double s, MatC a);

MatC kron(const MatC& a, const MatC& b);
MatC commutator(const MatC& a, const MatC& b);
MatC anticommutator(const MatC& a, const MatC& b);

/// ‖a - b‖_F, shapes must match.
double diff_norm(const MatC& a, const MatC& b);
/// ‖m - I‖_F
double distance_from_identity(const MatC& m);

std::vector<cplx> matvec(const MatC& m, const std::vector<cplx>& v);
std::vector<cplx> matvec_dagger(const MatC& m, const std::vector<cplx>& v);

}  // namespace kzdirac

#endif
