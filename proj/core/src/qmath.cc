#include "uncertainty/qmath.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace uncertainty {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

void require_generator_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("random instance dimension must lie in [1, 16], got " + std::to_string(dim));
  }
}

double off_diagonal_norm(const ComplexMatrix &a) {
  double sum = 0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (r != c) {
        sum += std::norm(a(r, c));
      }
    }
  }
  return std::sqrt(sum);
}

Complex standard_complex_gaussian(Engine &engine) {
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2);
  double re = normal(engine);
  double im = normal(engine);
  return {re, im};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    m(k, k) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double> &values) {
  ComplexMatrix m(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    m(k, k) = values[k];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0;
  for (const auto &z : entries_) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a.dim(), b.dim(), "matrix sum");
  ComplexMatrix out(a.dim());
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a.dim(), b.dim(), "matrix difference");
  ComplexMatrix out(a.dim());
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += a(r, k) * b(k, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix &m) {
  ComplexMatrix out(m.dim());
  for (std::size_t k = 0; k < m.entries_.size(); ++k) {
    out.entries_[k] = scale * m.entries_[k];
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v) {
  require_same_dim(m.dim(), v.size(), "matrix-vector product");
  ComplexVector out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex acc = 0;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      acc += m(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m) : matrix_(m.dim()) {
  if (m.dim() == 0) {
    throw std::invalid_argument("HermitianMatrix: dimension must be positive");
  }
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      Complex upper = m(r, c);
      Complex lower_conj = std::conj(m(c, r));
      if (std::abs(upper - lower_conj) > kTolerance) {
        throw std::invalid_argument("HermitianMatrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") is not the conjugate of its transpose partner");
      }
      Complex sym = 0.5 * (upper + lower_conj);
      if (r == c) {
        sym = sym.real();
      }
      matrix_(r, c) = sym;
      matrix_(c, r) = std::conj(sym);
    }
  }
}

ComplexMatrix SpectralData::reconstruct() const {
  const std::size_t n = dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto &v = eigenvectors[k];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += eigenvalues[k] * v[r] * std::conj(v[c]);
      }
    }
  }
  return out;
}

SpectralData hermitian_eigendecompose(const HermitianMatrix &m) {
  constexpr int kMaxSweeps = 100;
  constexpr double kRelativeTolerance = 1e-13;

  const std::size_t n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kRelativeTolerance * a.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("hermitian_eigendecompose: no convergence within 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0) {
          continue;
        }
        // Phase-rotate the pair so the coupling is real, then apply the real
        // Jacobi rotation. Combined unitary U acts on columns p and q.
        const Complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2 * r);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1 / std::hypot(t, 1.0);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  SpectralData out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    ComplexVector column(n);
    for (std::size_t r = 0; r < n; ++r) {
      column[r] = v(r, k);
    }
    out.eigenvectors.push_back(std::move(column));
  }
  return out;
}

ComplexVector bloch_state(double theta, double phi) {
  if (!(theta >= 0 && theta <= std::numbers::pi)) {
    throw std::domain_error("bloch_state: theta must lie in [0, pi]");
  }
  if (!(phi >= 0 && phi <= 2 * std::numbers::pi)) {
    throw std::domain_error("bloch_state: phi must lie in [0, 2 pi]");
  }
  return {Complex(std::cos(theta / 2), 0), std::polar(std::sin(theta / 2), phi)};
}

ComplexMatrix commutator(const HermitianMatrix &a, const HermitianMatrix &b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

Complex inner_product(const ComplexVector &bra, const ComplexVector &ket) {
  require_same_dim(bra.size(), ket.size(), "inner product");
  Complex acc = 0;
  for (std::size_t k = 0; k < bra.size(); ++k) {
    acc += std::conj(bra[k]) * ket[k];
  }
  return acc;
}

double norm(const ComplexVector &v) {
  double sum = 0;
  for (const auto &z : v) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

Seed derive_seed(Seed master, std::uint64_t index) {
  std::uint64_t z = master.value + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Seed{z ^ (z >> 31)};
}

Engine make_engine(Seed seed) { return Engine(seed.value); }

HermitianMatrix random_hermitian(Seed seed, std::size_t dim) {
  require_generator_dim(dim);
  Engine engine = make_engine(seed);
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      g(r, c) = standard_complex_gaussian(engine);
    }
  }
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

ComplexVector random_pure_state(Seed seed, std::size_t dim) {
  require_generator_dim(dim);
  for (std::uint64_t attempt = 0;; ++attempt) {
    Engine engine = make_engine(attempt == 0 ? seed : derive_seed(seed, attempt));
    ComplexVector v(dim);
    for (auto &z : v) {
      z = standard_complex_gaussian(engine);
    }
    const double n = norm(v);
    if (n > 0) {
      for (auto &z : v) {
        z /= n;
      }
      return v;
    }
  }
}

}  // namespace uncertainty
