// Copyright 2026 The steercoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steercoh/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace steercoh {

namespace {

std::string describe(double measured, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "measured " << measured << ", tolerance " << tol;
  return os.str();
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitTrace: return "NotUnitTrace";
    case ErrorCode::kNotPSD: return "NotPSD";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonUnitAxis: return "NonUnitAxis";
    case ErrorCode::kInvalidPovmElement: return "InvalidPOVMElement";
    case ErrorCode::kZeroProbability: return "ZeroProbability";
    case ErrorCode::kSingularDenominator: return "SingularDenominator";
    case ErrorCode::kSingularMarginal: return "SingularMarginal";
    case ErrorCode::kTrivialProductState: return "TrivialProductState";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kRankDeficientSchmidt: return "RankDeficientSchmidt";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kIncompletePovm: return "IncompletePOVM";
    case ErrorCode::kWeightsInvalid: return "WeightsInvalid";
    case ErrorCode::kGeometryViolation: return "GeometryViolation";
    case ErrorCode::kRadialSegment: return "RadialSegment";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kWrongDimension, "entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kWrongDimension, "ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix out(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (!same_shape(other)) throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (!same_shape(other)) throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex l = lhs(r, k);
      if (l == Complex{}) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += l * rhs(k, c);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix outer(std::span<const Complex> ket) {
  ComplexMatrix out(ket.size(), ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) out(i, j) = ket[i] * std::conj(ket[j]);
  return out;
}

ComplexMatrix apply(const ComplexMatrix& m, std::span<const Complex> ket);

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
  return s;
}

double norm(std::span<const Complex> ket) { return std::sqrt(std::real(inner(ket, ket))); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::kDimensionMismatch, "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.same_shape(b) && max_abs_diff(a, b) <= tol;
}

double hermitian_deviation(const ComplexMatrix& m) {
  if (!m.is_square()) return INFINITY;
  double d = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
  return d;
}

// ---------------------------------------------------------------------------
// Real 3-vectors

double dot(const BlochVector& a, const BlochVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const BlochVector& v) { return std::sqrt(dot(v, v)); }

BlochVector normalized(const BlochVector& v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : v;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t.m[c][r] = m[r][c];
  return t;
}

BlochVector Matrix3::operator*(const BlochVector& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) out.m[r][c] += a.m[r][k] * b.m[k][c];
  return out;
}

// ---------------------------------------------------------------------------
// Density operators

DensityMatrix validate_density(const ComplexMatrix& matrix, std::vector<std::size_t> dims,
                               const DensityTolerance& tol) {
  if (dims.empty() || dims.size() > 2) {
    throw Error(ErrorCode::kWrongDimension, "dims must list one or two subsystems");
  }
  std::size_t side = 1;
  for (auto d : dims) {
    if (d == 0) throw Error(ErrorCode::kWrongDimension, "zero subsystem dimension");
    side *= d;
  }
  if (side > kMaxDimension) {
    throw Error(ErrorCode::kDimensionTooLarge, "total dimension exceeds 16");
  }
  if (!matrix.is_square() || matrix.rows() != side) {
    throw Error(ErrorCode::kWrongDimension, "matrix side does not equal the product of dims");
  }
  const double herm = hermitian_deviation(matrix);
  if (!(herm <= tol.hermitian)) {
    throw Error(ErrorCode::kNotHermitian, describe(herm, tol.hermitian));
  }
  const double tr_dev = std::abs(matrix.trace() - 1.0);
  if (!(tr_dev <= tol.trace)) {
    throw Error(ErrorCode::kNotUnitTrace, describe(tr_dev, tol.trace));
  }
  const ComplexMatrix sym = (matrix + matrix.adjoint()) * 0.5;
  const double min_eig = eigen_hermitian(sym).values.back();
  if (!(min_eig >= tol.min_eigenvalue)) {
    throw Error(ErrorCode::kNotPSD, "minimum eigenvalue " + describe(min_eig, tol.min_eigenvalue));
  }
  return DensityMatrix(std::move(dims), matrix);
}

DensityMatrix normalize_density(const ComplexMatrix& matrix, std::vector<std::size_t> dims) {
  if (!matrix.is_square()) throw Error(ErrorCode::kWrongDimension, "matrix must be square");
  ComplexMatrix sym = (matrix + matrix.adjoint()) * 0.5;
  const double tr = std::real(sym.trace());
  if (!(tr > 0.0)) throw Error(ErrorCode::kNotUnitTrace, "non-positive trace");
  sym *= 1.0 / tr;
  return validate_density(sym, std::move(dims));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) {
    throw Error(ErrorCode::kDimensionMismatch, "partial_trace dims do not match the matrix");
  }
  if (keep == Subsystem::kB) {
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t k = 0; k < dim_b; ++k) out(j, k) += m(a * dim_b + j, a * dim_b + k);
    return out;
  }
  ComplexMatrix out(dim_a, dim_a);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_a; ++b)
      for (std::size_t j = 0; j < dim_b; ++j) out(a, b) += m(a * dim_b + j, b * dim_b + j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.is_bipartite()) throw Error(ErrorCode::kNotBipartite, "partial_trace needs two subsystems");
  const std::size_t kept = keep == Subsystem::kA ? rho.dim_a() : rho.dim_b();
  return normalize_density(partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), keep), {kept});
}

ComplexMatrix swap_subsystems(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) {
    throw Error(ErrorCode::kDimensionMismatch, "swap_subsystems dims do not match the matrix");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t b = 0; b < dim_a; ++b)
        for (std::size_t k = 0; k < dim_b; ++k)
          out(j * dim_a + a, k * dim_a + b) = m(a * dim_b + j, b * dim_b + k);
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic complex Jacobi)

ComplexMatrix Basis::as_columns() const {
  const std::size_t d = vectors.size();
  ComplexMatrix out(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) out(r, c) = vectors[c][r];
  return out;
}

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Largest-magnitude component real and positive. The first index wins when
// magnitudes tie to round-off.
void fix_phase(Ket& v) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best + 1e-12) best = mag, arg = i;
  }
  if (best <= 0.0) return;
  const Complex phase = std::conj(v[arg]) / best;
  for (auto& c : v) c *= phase;
  v[arg] = best;
}

bool lexicographic_less(const Ket& a, const Ket& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > 1e-12) return a[i].real() > b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > 1e-12) return a[i].imag() > b[i].imag();
  }
  return false;
}

}  // namespace

Eigensystem eigen_hermitian(const ComplexMatrix& h, double tol_degenerate) {
  const double herm = hermitian_deviation(h);
  if (!(herm <= 1e-10)) throw Error(ErrorCode::kNotHermitian, describe(herm, 1e-10));
  const std::size_t n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) * 0.5;
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const auto& e : a.entries()) scale = std::max(scale, std::abs(e));
  const double threshold = kJacobiOffTol * std::max(1.0, scale);

  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase rotation makes the (p,q) entry real, then a real Jacobi
        // rotation annihilates it.
        const Complex phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  Eigensystem out;
  out.values.reserve(n);
  out.basis.vectors.reserve(n);
  for (auto idx : order) {
    out.values.push_back(a(idx, idx).real());
    Ket col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, idx);
    fix_phase(col);
    out.basis.vectors.push_back(std::move(col));
  }

  // Within runs of numerically equal eigenvalues, order by phase-fixed vector.
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && out.values[end - 1] - out.values[end] < 1e-12) ++end;
    if (end - start > 1) {
      std::sort(out.basis.vectors.begin() + start, out.basis.vectors.begin() + end,
                lexicographic_less);
    }
    start = end;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (out.values[i] - out.values[i + 1] < tol_degenerate) out.basis.degenerate = true;
  }
  return out;
}

ComplexMatrix hermitian_function(const ComplexMatrix& h, double (*fn)(double)) {
  const auto es = eigen_hermitian(h);
  std::vector<double> mapped(es.values.size());
  std::transform(es.values.begin(), es.values.end(), mapped.begin(), fn);
  const ComplexMatrix v = es.basis.as_columns();
  return v * ComplexMatrix::diagonal(mapped) * v.adjoint();
}

ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  const auto es = eigen_hermitian(h);
  const std::size_t n = es.values.size();
  ComplexMatrix phases(n, n);
  for (std::size_t i = 0; i < n; ++i) phases(i, i) = std::polar(1.0, es.values[i]);
  const ComplexMatrix v = es.basis.as_columns();
  return v * phases * v.adjoint();
}

ComplexMatrix apply(const ComplexMatrix& m, std::span<const Complex> ket) {
  if (m.cols() != ket.size()) throw Error(ErrorCode::kDimensionMismatch, "apply");
  ComplexMatrix out(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, 0) += m(r, c) * ket[c];
  return out;
}

// ---------------------------------------------------------------------------
// Pauli form

const ComplexMatrix& pauli(std::size_t i) {
  using namespace std::complex_literals;
  static const std::array<ComplexMatrix, 4> kPauli = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -1i}, {1i, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return kPauli.at(i);
}

Matrix3 PauliForm::T() const {
  Matrix3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t.m[r][c] = theta[r + 1][c + 1];
  return t;
}

PauliForm pauli_decompose(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(ErrorCode::kWrongDimension, "pauli_decompose needs a two-qubit state");
  }
  PauliForm form;
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      form.theta[i][j] = std::real((m * kron(pauli(i), pauli(j))).trace());
  return form;
}

DensityMatrix pauli_compose(const PauliForm& form) {
  if (std::abs(form.theta[0][0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::kParameterOutOfRange, "theta[0][0] must equal 1");
  }
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (form.theta[i][j] != 0.0) m += kron(pauli(i), pauli(j)) * (0.25 * form.theta[i][j]);
  return validate_density(m, {2, 2});
}

ComplexMatrix qubit_operator(double weight, const BlochVector& r) {
  using namespace std::complex_literals;
  return ComplexMatrix{{0.5 * (weight + r.z), 0.5 * (r.x - 1i * r.y)},
                       {0.5 * (r.x + 1i * r.y), 0.5 * (weight - r.z)}};
}

DensityMatrix qubit_state(const BlochVector& r) { return validate_density(qubit_operator(1.0, r), {2}); }

BlochVector bloch_vector(const ComplexMatrix& q) {
  if (q.rows() != 2 || q.cols() != 2) throw Error(ErrorCode::kWrongDimension, "not a qubit operator");
  return {2.0 * q(1, 0).real(), 2.0 * q(1, 0).imag(), (q(0, 0) - q(1, 1)).real()};
}

BlochVector bloch_vector(const DensityMatrix& q) { return bloch_vector(q.matrix()); }

Ket bloch_ket(const BlochVector& r) {
  using namespace std::complex_literals;
  const BlochVector u = normalized(r);
  if (u.z >= 0.0) {
    const double c = std::sqrt(0.5 * (1.0 + u.z));
    return {c, (u.x + 1i * u.y) / (2.0 * c)};
  }
  const double s = std::sqrt(0.5 * (1.0 - u.z));
  return {(u.x - 1i * u.y) / (2.0 * s), s};
}

}  // namespace steercoh
