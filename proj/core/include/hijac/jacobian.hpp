#ifndef HIJAC_JACOBIAN_HPP
#define HIJAC_JACOBIAN_HPP

#include <string>
#include <vector>

#include "hijac/ideal.hpp"
#include "hijac/polynomial.hpp"

namespace hijac {

enum class JacVersion { ZeroDiagonal, FDiagonal, JacobiTaylor };

std::string to_string(JacVersion v);

/**
 * Higher Jacobian matrix of order n.
 *
 * Rows are indexed by beta with 0 <= |beta| <= n-1, columns by alpha with
 * 1 <= |alpha| <= n (plus the |alpha| = 0 column for JacobiTaylor), both in
 * listing order. The (beta, alpha) entry is zero unless alpha > beta, in
 * which case it is the normalized derivative d^(alpha-beta) f / (alpha-beta)!;
 * the diagonal alpha = beta is 0 (ZeroDiagonal) or f (FDiagonal/JacobiTaylor).
 */
class JacobianMatrix {
public:
    JacobianMatrix(Polynomial f, int n, JacVersion version);

    const Polynomial& source() const { return f_; }
    int order() const { return n_; }
    JacVersion version() const { return version_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return static_cast<int>(cols_.size()); }
    const std::vector<MultiIndex>& row_indices() const { return rows_; }
    const std::vector<MultiIndex>& col_indices() const { return cols_; }
    const Polynomial& entry(int r, int c) const {
        return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    const std::vector<std::vector<Polynomial>>& grid() const { return grid_; }

private:
    Polynomial f_;
    int n_;
    JacVersion version_;
    std::vector<MultiIndex> rows_, cols_;
    std::vector<std::vector<Polynomial>> grid_;
};

JacobianMatrix jac_matrix(const Polynomial& f, int n,
                          JacVersion version = JacVersion::ZeroDiagonal);

// All r x r minors of an r x c grid (r <= c), one per column subset, in lex
// order of subsets. Shared Laplace expansion over column subsets by default;
// set per_minor_bareiss to trade memory for time.
std::vector<Polynomial> maximal_minors(const std::vector<std::vector<Polynomial>>& grid,
                                       bool per_minor_bareiss = false);
std::vector<Polynomial> maximal_minors(const JacobianMatrix& M);

Polynomial grid_determinant(const std::vector<std::vector<Polynomial>>& grid);

// n-th Jacobian ideal: maximal minors of the ZeroDiagonal matrix, canonical.
IdealGens jacobian_ideal(const Polynomial& f, int n);

// i-th Fitting ideal of the module presented by relation matrix A (rows =
// generators, columns = relations): ideal of (N-i) x (N-i) minors, N = rows.
IdealGens fitting_ideal(const std::vector<std::vector<Polynomial>>& A, int i);

// Certifies the rows of Jac_n(f) as relations: for every row index beta the
// kernel-generator identity holds modulo the (n+1)-st power of the diagonal
// ideal in the 2d-variable ring.
bool verify_kernel_identity(const Polynomial& f, int n);

// Rank over the fraction field of the polynomial ring, exact.
int generic_rank(const std::vector<std::vector<Polynomial>>& grid);
int generic_rank(const JacobianMatrix& M);

}  // namespace hijac

#endif
