#pragma once

// Fixed-size complex matrices for the 2x2 (MS basis) and 3x3 (bare Lambda
// system) propagators. State order for Mat3 is |psi_0>, |psi_1>, |psi_a>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace raman {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  // Row-major initializer: {{a, b}, {c, d}}.
  SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N) throw std::invalid_argument("SquareMatrix: wrong row count");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("SquareMatrix: wrong column count");
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& v) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend std::array<Complex, N> operator*(const SquareMatrix& a, const std::array<Complex, N>& v) {
    std::array<Complex, N> out{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat3 = SquareMatrix<3>;

// Largest entry magnitude of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

// Max-norm of M^dagger M - I; zero for an exactly unitary matrix.
template <std::size_t N>
double unitarity_defect(const SquareMatrix<N>& m) {
  return max_abs_diff(m.adjoint() * m, SquareMatrix<N>::identity());
}

// M^n by binary exponentiation. n = 0 yields the identity.
template <std::size_t N>
SquareMatrix<N> mat_power(const SquareMatrix<N>& m, std::uint64_t n) {
  SquareMatrix<N> result = SquareMatrix<N>::identity();
  SquareMatrix<N> base = m;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace raman
