#include "damposc/tridiagonal.hpp"

#include <cmath>

#include "damposc/errors.hpp"

namespace damposc {

TridiagonalSolver::TridiagonalSolver(std::span<const Complex> lower, std::span<const Complex> diag,
                                     std::span<const Complex> upper)
    : lower_(diag.size()), upper_(upper.begin(), upper.end()), pivot_(diag.size()) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n) {
    throw InvalidParameter("tridiagonal bands must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(lower[i]) : 0.0) + (i + 1 < n ? std::abs(upper[i]) : 0.0);
    if (!(std::abs(diag[i]) >= off)) throw SolveFailure("tridiagonal system is not diagonally dominant");
  }
  pivot_[0] = diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(pivot_[i - 1]) <= 1e-300) throw SolveFailure("zero pivot in tridiagonal elimination");
    lower_[i] = lower[i] / pivot_[i - 1];
    pivot_[i] = diag[i] - lower_[i] * upper[i - 1];
  }
  if (std::abs(pivot_[n - 1]) <= 1e-300) throw SolveFailure("zero pivot in tridiagonal elimination");
}

void TridiagonalSolver::solve(std::span<Complex> rhs) const {
  const std::size_t n = pivot_.size();
  if (rhs.size() != n) throw InvalidParameter("right-hand side has the wrong length");
  for (std::size_t i = 1; i < n; ++i) rhs[i] -= lower_[i] * rhs[i - 1];
  rhs[n - 1] /= pivot_[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper_[i] * rhs[i + 1]) / pivot_[i];
}

}  // namespace damposc
