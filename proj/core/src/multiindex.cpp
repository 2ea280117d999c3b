#include "hijac/multiindex.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hijac {

MultiIndex MultiIndex::unit(int d, int i) {
    std::vector<int> e(d, 0);
    e.at(i) = 1;
    return MultiIndex(std::move(e));
}

int MultiIndex::total() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

Int MultiIndex::factorial() const {
    Int r = 1;
    for (int a : e_) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
        r *= f;
    }
    return r;
}

bool MultiIndex::is_zero() const {
    for (int a : e_)
        if (a != 0) return false;
    return true;
}

bool MultiIndex::leq(const MultiIndex& b) const {
    if (dim() != b.dim()) throw std::invalid_argument("MultiIndex dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        if (e_[i] > b.e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& b) const {
    if (dim() != b.dim()) throw std::invalid_argument("MultiIndex dimension mismatch");
    std::vector<int> e(e_);
    for (int i = 0; i < dim(); ++i) e[i] += b.e_[i];
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& b) const {
    if (dim() != b.dim()) throw std::invalid_argument("MultiIndex dimension mismatch");
    std::vector<int> e(e_);
    for (int i = 0; i < dim(); ++i) {
        e[i] -= b.e_[i];
        if (e[i] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

int grlex_cmp(const MultiIndex& a, const MultiIndex& b) {
    int da = a.total(), db = b.total();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool listing_before(const MultiIndex& a, const MultiIndex& b) {
    int da = a.total(), db = b.total();
    if (da != db) return da < db;
    return grlex_cmp(a, b) > 0;
}

std::vector<MultiIndex> multiindices(int d, int lo, int hi) {
    if (d < 1) throw std::invalid_argument("multiindices: d must be >= 1");
    if (lo < 0 || lo > hi) throw std::invalid_argument("multiindices: need 0 <= lo <= hi");
    std::vector<MultiIndex> out;
    std::vector<int> cur(d, 0);
    // enumerate all of degree k recursively, largest-first, per degree
    for (int k = lo; k <= hi; ++k) {
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == d - 1) {
                cur[pos] = remaining;
                out.emplace_back(cur);
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                cur[pos] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        rec(rec, 0, k);
    }
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace hijac
