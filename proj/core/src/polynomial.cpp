#include "hijac/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hijac {

Polynomial Polynomial::zero(int d) {
    Polynomial p;
    p.vars_ = d;
    return p;
}

Polynomial Polynomial::constant(int d, const Rat& c) {
    Polynomial p = zero(d);
    if (c != 0) p.terms_.emplace(MultiIndex::zero(d), c);
    return p;
}

Polynomial Polynomial::variable(int d, int i) {
    return monomial(MultiIndex::unit(d, i), 1);
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rat& c) {
    Polynomial p = zero(m.dim());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rat Polynomial::constant_term() const {
    return coeff(MultiIndex::zero(vars_));
}

Rat Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total();
}

int Polynomial::low_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return terms_.empty() ? -1 : d;
}

const MultiIndex& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& g) const {
    if (vars_ != g.vars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_same_ring(g);
    Polynomial r(*this);
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    check_same_ring(g);
    Polynomial r(*this);
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_ring(g);
    Polynomial r = zero(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    return vars_ == g.vars_ && terms_ == g.terms_;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r = zero(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, 1);
    Polynomial b(*this);
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r = zero(vars_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        auto lower = m.minus(MultiIndex::unit(vars_, var));
        r.add_term(*lower, c * e);
    }
    return r;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
    if (alpha.dim() != vars_) throw std::invalid_argument("derivative: multi-index dimension mismatch");
    Polynomial r(*this);
    for (int i = 0; i < vars_; ++i)
        for (int k = 0; k < alpha[i]; ++k) r = r.derivative(i);
    return r;
}

Polynomial Polynomial::taylor_coefficient(const MultiIndex& alpha) const {
    Polynomial d = derivative(alpha);
    Rat inv(1);
    inv /= Rat(alpha.factorial());
    return d.scaled(inv);
}

Polynomial Polynomial::substitute(const Substitution& s) const {
    if (s.dim() != vars_) throw std::invalid_argument("substitute: dimension mismatch");
    int out_d = s.dim() == 0 ? vars_ : s.image(0).vars();
    // memoized powers of each image
    std::vector<std::vector<Polynomial>> powers(vars_);
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& ps = powers[i];
        if (ps.empty()) ps.push_back(Polynomial::constant(out_d, 1));
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * s.image(i));
        return ps[e];
    };
    Polynomial r = zero(out_d);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(out_d, c);
        for (int i = 0; i < vars_; ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        r = r + t;
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& p) const {
    if (static_cast<int>(p.size()) != vars_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Rat r(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < vars_; ++i)
            if (m[i] > 0) t *= rat_pow(p[i], static_cast<unsigned long>(m[i]));
        r += t;
    }
    return r;
}

Polynomial Polynomial::eval_partial(int var, const Rat& value) const {
    Polynomial r = zero(vars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.entries();
        int k = e[var];
        e[var] = 0;
        r.add_term(MultiIndex(std::move(e)), c * rat_pow(value, static_cast<unsigned long>(k)));
    }
    return r;
}

Polynomial Polynomial::embed(int new_d, int shift) const {
    if (shift < 0 || vars_ + shift > new_d) throw std::invalid_argument("embed: bad target ring");
    Polynomial r = zero(new_d);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(new_d, 0);
        for (int i = 0; i < vars_; ++i) e[i + shift] = m[i];
        r.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return r;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != vars_) throw std::invalid_argument("permute_vars: bad permutation");
    Polynomial r = zero(vars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(vars_, 0);
        for (int i = 0; i < vars_; ++i) e[perm[i]] = m[i];
        r.add_term(MultiIndex(std::move(e)), c);
    }
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
    check_same_ring(g);
    if (g.is_zero()) return std::nullopt;
    Polynomial rem(*this);
    Polynomial q = zero(vars_);
    while (!rem.is_zero()) {
        auto diff = rem.leading_monomial().minus(g.leading_monomial());
        if (!diff) return std::nullopt;
        Rat c = rem.leading_coeff() / g.leading_coeff();
        Polynomial t = monomial(*diff, c);
        q = q + t;
        rem = rem - t * g;
    }
    return q;
}

int Polynomial::var_order(int var) const {
    if (terms_.empty()) return 0;
    int k = INT32_MAX;
    for (const auto& [m, c] : terms_) k = std::min(k, m[var]);
    return k;
}

Polynomial Polynomial::shift_down(int var, int k) const {
    if (k == 0) return *this;
    Polynomial r = zero(vars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.entries();
        e[var] -= k;
        if (e[var] < 0) throw std::invalid_argument("shift_down: not divisible");
        r.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return r;
}

Rat Polynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading_coeff() < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    Rat inv(1);
    inv /= c;
    return scaled(inv);
}

bool Polynomial::is_univariate_in(int var) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < vars_; ++i)
            if (i != var && m[i] != 0) return false;
    return true;
}

std::vector<Rat> Polynomial::univariate_coeffs(int var) const {
    if (!is_univariate_in(var)) throw std::invalid_argument("univariate_coeffs: not univariate");
    std::vector<Rat> cs(static_cast<std::size_t>(std::max(0, degree_in(var)) + 1), Rat(0));
    for (const auto& [m, c] : terms_) cs[static_cast<std::size_t>(m[var])] = c;
    return cs;
}

Polynomial Polynomial::from_univariate(int d, int var, const std::vector<Rat>& cs) {
    Polynomial r = zero(d);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        std::vector<int> e(d, 0);
        e[var] = static_cast<int>(k);
        r.terms_.emplace(MultiIndex(std::move(e)), cs[k]);
    }
    return r;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        int c = grlex_cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != vars_)
        throw std::invalid_argument("str: name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> fac;
        for (int i = 0; i < vars_; ++i) {
            if (m[i] == 0) continue;
            fac.push_back(m[i] == 1 ? names[i] : names[i] + "^" + std::to_string(m[i]));
        }
        if (fac.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << '*';
            for (std::size_t k = 0; k < fac.size(); ++k) {
                if (k) os << '*';
                os << fac[k];
            }
        }
    }
    return os.str();
}

std::string Polynomial::str() const { return str(x_names(vars_)); }

Substitution::Substitution(std::vector<Polynomial> images) : images_(std::move(images)) {
    for (const auto& p : images_)
        if (p.vars() != images_.front().vars())
            throw std::invalid_argument("Substitution: images in different rings");
}

Substitution Substitution::identity(int d) {
    std::vector<Polynomial> im;
    im.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) im.push_back(Polynomial::variable(d, i));
    return Substitution(std::move(im));
}

bool Substitution::fixes_origin() const {
    for (const auto& p : images_)
        if (p.constant_term() != 0) return false;
    return true;
}

Rat Substitution::linear_part_det() const {
    int d = dim();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
    for (int i = 0; i < d; ++i) {
        int n = images_[static_cast<std::size_t>(i)].vars();
        for (int j = 0; j < d && j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                images_[static_cast<std::size_t>(i)].coeff(MultiIndex::unit(n, j));
    }
    // fraction-full Gaussian elimination over Q on a small matrix
    Rat det(1);
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) { std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]); det = -det; }
        det *= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < d; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] == 0) continue;
            Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                    a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int cc = col; cc < d; ++cc)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
        }
    }
    return det;
}

Substitution Substitution::compose(const Substitution& inner) const {
    std::vector<Polynomial> im;
    im.reserve(images_.size());
    for (const auto& p : images_) im.push_back(p.substitute(inner));
    return Substitution(std::move(im));
}

std::vector<std::string> x_names(int d) {
    std::vector<std::string> n;
    for (int i = 1; i <= d; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

std::vector<std::string> y_names(int d) {
    std::vector<std::string> n;
    for (int i = 1; i <= d; ++i) n.push_back("y" + std::to_string(i));
    return n;
}

}  // namespace hijac
