#pragma once

#include <complex>
#include <span>
#include <vector>

namespace damposc {

// LU factorisation of a complex tridiagonal matrix (Thomas algorithm without pivoting).
// The matrix must be diagonally dominant; construction throws SolveFailure otherwise.
class TridiagonalSolver {
 public:
  using Complex = std::complex<double>;

  // lower[0] and upper[n-1] are ignored.
  TridiagonalSolver(std::span<const Complex> lower, std::span<const Complex> diag, std::span<const Complex> upper);

  [[nodiscard]] std::size_t size() const noexcept { return pivot_.size(); }

  // Solves A x = rhs in place.
  void solve(std::span<Complex> rhs) const;

 private:
  std::vector<Complex> lower_;
  std::vector<Complex> upper_;
  std::vector<Complex> pivot_;
};

}  // namespace damposc
