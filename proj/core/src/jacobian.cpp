#include "hijac/jacobian.hpp"

#include <map>
#include <stdexcept>

namespace hijac {

std::string to_string(JacVersion v) {
    switch (v) {
        case JacVersion::ZeroDiagonal: return "zero";
        case JacVersion::FDiagonal: return "f-diag";
        case JacVersion::JacobiTaylor: return "jacobi-taylor";
    }
    return "?";
}

JacobianMatrix::JacobianMatrix(Polynomial f, int n, JacVersion version)
    : f_(std::move(f)), n_(n), version_(version) {
    if (n < 1) throw std::invalid_argument("jac_matrix: order n must be >= 1");
    int d = f_.vars();
    rows_ = multiindices(d, 0, n - 1);
    cols_ = multiindices(d, version == JacVersion::JacobiTaylor ? 0 : 1, n);
    grid_.reserve(rows_.size());
    for (const auto& beta : rows_) {
        std::vector<Polynomial> row;
        row.reserve(cols_.size());
        for (const auto& alpha : cols_) {
            auto diff = alpha.minus(beta);
            if (!diff) {
                row.push_back(Polynomial::zero(d));
            } else if (diff->is_zero()) {
                row.push_back(version == JacVersion::ZeroDiagonal ? Polynomial::zero(d) : f_);
            } else {
                row.push_back(f_.taylor_coefficient(*diff));
            }
        }
        grid_.push_back(std::move(row));
    }
}

JacobianMatrix jac_matrix(const Polynomial& f, int n, JacVersion version) {
    return JacobianMatrix(f, n, version);
}

namespace {

// determinant by fraction-free Bareiss elimination with exact division
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> a) {
    std::size_t n = a.size();
    if (n == 0) return Polynomial::zero(1);
    int d = a[0][0].vars();
    Polynomial prev = Polynomial::constant(d, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return Polynomial::zero(d);
        if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("bareiss: non-exact division");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial::zero(d);
        }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

void next_combination(std::vector<int>& comb, int c, bool& done) {
    int r = static_cast<int>(comb.size());
    int i = r - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == c - r + i) --i;
    if (i < 0) { done = true; return; }
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
}

std::vector<std::vector<int>> combinations(int c, int r) {
    std::vector<std::vector<int>> out;
    if (r > c || r < 0) return out;
    std::vector<int> comb(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) comb[static_cast<std::size_t>(i)] = i;
    bool done = (r == 0);
    if (r == 0) { out.push_back({}); return out; }
    while (!done) {
        out.push_back(comb);
        next_combination(comb, c, done);
    }
    return out;
}

}  // namespace

std::vector<Polynomial> maximal_minors(const std::vector<std::vector<Polynomial>>& grid,
                                       bool per_minor_bareiss) {
    if (grid.empty()) throw std::invalid_argument("maximal_minors: empty matrix");
    int r = static_cast<int>(grid.size());
    int c = static_cast<int>(grid[0].size());
    if (r > c) throw std::invalid_argument("maximal_minors: more rows than columns");
    int d = grid[0][0].vars();

    auto subsets = combinations(c, r);
    if (per_minor_bareiss) {
        std::vector<Polynomial> out;
        out.reserve(subsets.size());
        for (const auto& S : subsets) {
            std::vector<std::vector<Polynomial>> sub;
            sub.reserve(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                std::vector<Polynomial> row;
                for (int j : S) row.push_back(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                sub.push_back(std::move(row));
            }
            out.push_back(bareiss_det(std::move(sub)));
        }
        return out;
    }

    // Laplace expansion along the bottom row of each level, sharing sub-minors
    // of the top j rows across column subsets.
    std::map<std::vector<int>, Polynomial> level;
    level[{}] = Polynomial::constant(d, 1);
    for (int j = 1; j <= r; ++j) {
        std::map<std::vector<int>, Polynomial> next;
        for (const auto& S : combinations(c, j)) {
            Polynomial det = Polynomial::zero(d);
            std::vector<int> rest(S.begin(), S.end() - 1);
            for (int p = j - 1; p >= 0; --p) {
                int col = S[static_cast<std::size_t>(p)];
                const Polynomial& e = grid[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(col)];
                if (!e.is_zero()) {
                    const Polynomial& sub = level.at(rest);
                    Polynomial term = e * sub;
                    if (((j - 1) + p) % 2) term = -term;
                    det = det + term;
                }
                if (p > 0) rest[static_cast<std::size_t>(p - 1)] = col;
            }
            next.emplace(S, std::move(det));
        }
        level = std::move(next);
    }
    std::vector<Polynomial> out;
    out.reserve(subsets.size());
    for (const auto& S : subsets) out.push_back(level.at(S));
    return out;
}

std::vector<Polynomial> maximal_minors(const JacobianMatrix& M) {
    return maximal_minors(M.grid());
}

Polynomial grid_determinant(const std::vector<std::vector<Polynomial>>& grid) {
    if (grid.empty() || grid.size() != grid[0].size())
        throw std::invalid_argument("grid_determinant: not square");
    return bareiss_det(grid);
}

IdealGens jacobian_ideal(const Polynomial& f, int n) {
    JacobianMatrix M = jac_matrix(f, n, JacVersion::ZeroDiagonal);
    return IdealGens(f.vars(), maximal_minors(M));
}

IdealGens fitting_ideal(const std::vector<std::vector<Polynomial>>& A, int i) {
    if (i < 0) throw std::invalid_argument("fitting_ideal: index must be >= 0");
    if (A.empty()) throw std::invalid_argument("fitting_ideal: empty matrix");
    int rows = static_cast<int>(A.size());
    int cols = static_cast<int>(A[0].size());
    int d = A[0][0].vars();
    int k = rows - i;
    if (k <= 0) return IdealGens::unit(d);
    if (k > rows || k > cols) return IdealGens(d);
    std::vector<Polynomial> gens;
    for (const auto& R : combinations(rows, k)) {
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(static_cast<std::size_t>(k));
        for (int r : R) sub.push_back(A[static_cast<std::size_t>(r)]);
        auto dets = maximal_minors(sub);
        gens.insert(gens.end(), dets.begin(), dets.end());
    }
    return IdealGens(d, std::move(gens));
}

bool verify_kernel_identity(const Polynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("verify_kernel_identity: n >= 1");
    int d = f.vars();
    int D = 2 * d;  // variables x1..xd, h1..hd with h = x' - x
    std::vector<Polynomial> im;
    for (int i = 0; i < d; ++i)
        im.push_back(Polynomial::variable(D, i) + Polynomial::variable(D, d + i));
    Polynomial f_shift = f.substitute(Substitution(im));  // f(x + h)
    Polynomial f_emb = f.embed(D);
    Polynomial delta = f_shift - f_emb;  // f(x') - f(x)

    auto h_monomial = [&](const MultiIndex& a) {
        std::vector<int> e(static_cast<std::size_t>(D), 0);
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(d + i)] = a[i];
        return Polynomial::monomial(MultiIndex(std::move(e)), 1);
    };
    auto h_degree = [&](const MultiIndex& m) {
        int t = 0;
        for (int i = 0; i < d; ++i) t += m[d + i];
        return t;
    };

    for (const auto& beta : multiindices(d, 0, n - 1)) {
        Polynomial lhs = Polynomial::zero(D);
        for (const auto& alpha : multiindices(d, 1, n)) {
            auto diff = alpha.minus(beta);
            if (!diff || diff->is_zero()) continue;
            lhs = lhs + f.taylor_coefficient(*diff).embed(D) * h_monomial(alpha);
        }
        Polynomial rhs = h_monomial(beta) * delta;
        Polynomial rem = lhs - rhs;
        for (const auto& [m, c] : rem.terms())
            if (h_degree(m) <= n) return false;
    }
    return true;
}

namespace {

int rational_rank(std::vector<std::vector<Rat>> a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat fct = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= fct * a[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// symbolic rank by fraction-free elimination with full pivoting
int bareiss_rank(std::vector<std::vector<Polynomial>> a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    int d = a[0][0].vars();
    Polynomial prev = Polynomial::constant(d, 1);
    std::size_t k = 0;
    while (k < rows && k < cols) {
        // pivot: fewest terms among nonzero entries of the remaining block
        std::size_t pr = rows, pc = cols, best = SIZE_MAX;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!a[i][j].is_zero() && a[i][j].num_terms() < best) {
                    best = a[i][j].num_terms();
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[pr], a[k]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("bareiss_rank: non-exact division");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial::zero(d);
        }
        prev = a[k][k];
        ++k;
    }
    return static_cast<int>(k);
}

}  // namespace

int generic_rank(const std::vector<std::vector<Polynomial>>& grid) {
    std::size_t rows = grid.size();
    if (rows == 0) return 0;
    std::size_t cols = grid[0].size();
    int bound = static_cast<int>(std::min(rows, cols));
    if (bound == 0) return 0;

    // Rank at any specialization is a lower bound on the generic rank, so a
    // full-rank evaluation settles the question without symbolic elimination.
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    int d = grid[0][0].vars();
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rat> point;
        for (int i = 0; i < d; ++i) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            long num = static_cast<long>((seed >> 33) % 2000) - 1000;
            long den = static_cast<long>((seed >> 13) % 50) + 1;
            point.push_back(make_rat(num == 0 ? 1 : num, den));
        }
        std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = grid[i][j].evaluate(point);
        if (rational_rank(std::move(a)) == bound) return bound;
    }
    return bareiss_rank(grid);
}

int generic_rank(const JacobianMatrix& M) { return generic_rank(M.grid()); }

}  // namespace hijac
