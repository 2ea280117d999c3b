#include "hijac/nash.hpp"

#include <sstream>
#include <stdexcept>

#include "hijac/jacobian.hpp"

namespace hijac {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::UNDECIDED: return "UNDECIDED";
        case CheckStatus::NOT_APPLICABLE: return "NOT-APPLICABLE";
    }
    return "?";
}

void Report::add(const std::string& name, bool ok, const std::string& detail) {
    items.push_back({name, ok ? CheckStatus::PASS : CheckStatus::FAIL, detail});
}

void Report::add(const std::string& name, CheckStatus st, const std::string& detail) {
    items.push_back({name, st, detail});
}

void Report::fact(const std::string& key, const std::string& value) {
    facts.emplace_back(key, value);
}

std::string Report::get_fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
        if (k == key) return v;
    return "";
}

CheckStatus Report::overall() const {
    bool any_pass = false, any_undecided = false;
    for (const auto& it : items) {
        if (it.status == CheckStatus::FAIL) return CheckStatus::FAIL;
        if (it.status == CheckStatus::UNDECIDED) any_undecided = true;
        if (it.status == CheckStatus::PASS) any_pass = true;
    }
    if (any_undecided) return CheckStatus::UNDECIDED;
    if (!any_pass && !items.empty()) return CheckStatus::NOT_APPLICABLE;
    return CheckStatus::PASS;
}

std::string Report::text() const {
    std::ostringstream os;
    os << title << (truncated_mode ? "  [truncated mode]" : "") << "\n";
    for (const auto& [k, v] : facts) os << "  " << k << " = " << v << "\n";
    for (const auto& it : items) {
        os << "  [" << to_string(it.status) << "] " << it.name;
        if (!it.detail.empty()) os << ": " << it.detail;
        os << "\n";
    }
    os << "overall: " << to_string(overall()) << "\n";
    return os.str();
}

namespace {

const MonomialOrder kLocal{OrderKind::LocalGraded};

void require_local_input(const Polynomial& f) {
    if (f.constant_term() != 0)
        throw std::invalid_argument("expected f(0) = 0");
}

IdealGens with_f(const Polynomial& f, const IdealGens& J) {
    return ideal_sum(IdealGens(f.vars(), {f}), J);
}

std::string dim_str(const QuotientBasis& q) {
    return q.finite ? std::to_string(q.dimension) : std::string("INFINITE");
}

}  // namespace

NashAlgebra nash_algebra(const Polynomial& f, int n) {
    require_local_input(f);
    if (n < 1) throw std::invalid_argument("nash_algebra: n >= 1");
    IdealGens J = jacobian_ideal(f, n);
    IdealGens I = with_f(f, J);

    // the defining ideal does not depend on the matrix version
    IdealGens Jf(f.vars(), maximal_minors(jac_matrix(f, n, JacVersion::FDiagonal)));
    if (!ideal_equal(I, with_f(f, Jf), kLocal))
        throw std::logic_error("nash_algebra: matrix versions disagree on the local ideal");

    OrderedIdeal std_basis = OrderedIdeal::standard(I);
    QuotientBasis q = standard_monomials(std_basis.leading_ideal(), f.vars());
    return NashAlgebra{f, n, I, std_basis.basis(), q.finite, q.dimension, q.monomials};
}

Report check_unit_invariance(const Polynomial& f, const Polynomial& u, int n) {
    require_local_input(f);
    if (u.constant_term() == 0) throw std::invalid_argument("u(0) must be nonzero");
    Report rep;
    rep.title = "unit invariance of the local ideal, n = " + std::to_string(n);
    IdealGens If = with_f(f, jacobian_ideal(f, n));
    IdealGens Iuf = with_f(f, jacobian_ideal(u * f, n));
    rep.add("local ideal equality <f, J_n(f)> = <f, J_n(u*f)>", ideal_equal(If, Iuf, kLocal));
    QuotientBasis qf = local_dimension(If), qug = local_dimension(Iuf);
    bool dims = qf.finite == qug.finite && (!qf.finite || qf.dimension == qug.dimension);
    rep.add("local dimensions agree", dims, dim_str(qf) + " vs " + dim_str(qug));
    rep.fact("dimension", dim_str(qf));
    return rep;
}

Report check_det_congruence(const Polynomial& f, const Polynomial& u, int n) {
    require_local_input(f);
    if (u.constant_term() == 0) throw std::invalid_argument("u(0) must be nonzero");
    Report rep;
    rep.title = "determinant congruence det(M_i(u*f)) = u^binom(d-1+n,d) det(M_i(f)) mod <f>";
    JacobianMatrix Mf = jac_matrix(f, n);
    JacobianMatrix Muf = jac_matrix(u * f, n);
    auto minors_f = maximal_minors(Mf);
    auto minors_uf = maximal_minors(Muf);
    unsigned long e = binomial(f.vars() - 1 + n, f.vars()).get_ui();
    Polynomial upow = u.pow(static_cast<unsigned>(e));
    rep.fact("unit exponent", std::to_string(e));
    for (std::size_t k = 0; k < minors_f.size(); ++k) {
        Polynomial diff = minors_uf[k] - upow * minors_f[k];
        bool ok = diff.is_zero() || diff.divide_exact(f).has_value();
        rep.add("column selection " + std::to_string(k), ok, ok ? "" : diff.str());
    }
    return rep;
}

Report check_automorphism_equivariance(const Polynomial& f, const Substitution& sigma, int n) {
    require_local_input(f);
    if (!sigma.fixes_origin())
        throw std::invalid_argument("automorphism must fix the origin");
    if (sigma.linear_part_det() == 0)
        throw std::invalid_argument("linear part of the automorphism is singular");
    Report rep;
    rep.title = "automorphism equivariance sigma(J_n(f)) = J_n(sigma(f)), n = " + std::to_string(n);
    IdealGens lhs = apply_automorphism(jacobian_ideal(f, n), sigma);
    IdealGens rhs = jacobian_ideal(f.substitute(sigma), n);
    rep.add("local ideal equality", ideal_equal(lhs, rhs, kLocal));
    return rep;
}

Report check_contact_invariance(const Polynomial& f, const Polynomial& g,
                                const ContactWitness& w, int n) {
    require_local_input(f);
    require_local_input(g);
    Report rep;
    rep.title = "contact invariance of the Nash blowup local algebra, n = " + std::to_string(n);

    bool witness_shape = w.sigma.fixes_origin() && w.sigma.linear_part_det() != 0 &&
                         w.u.constant_term() != 0;
    rep.add("witness shape (sigma fixes 0, invertible linear part, u(0) != 0)", witness_shape);

    Polynomial residual = g - w.u * f.substitute(w.sigma);
    bool witness_ok;
    if (w.degree_bound < 0) {
        witness_ok = residual.is_zero();
    } else {
        rep.truncated_mode = true;
        witness_ok = residual.is_zero() || residual.low_degree() > w.degree_bound;
    }
    rep.add(w.degree_bound < 0 ? "witness identity g = u*sigma(f)"
                               : "witness identity up to degree " + std::to_string(w.degree_bound),
            witness_ok, witness_ok ? "" : residual.str());
    if (!witness_shape || !witness_ok) return rep;

    IdealGens If = with_f(f, jacobian_ideal(f, n));
    IdealGens Ig = with_f(g, jacobian_ideal(g, n));
    rep.add("sigma carries <f, J_n(f)> onto <g, J_n(g)> locally",
            ideal_equal(apply_automorphism(If, w.sigma), Ig, kLocal));

    NashAlgebra af = nash_algebra(f, n), ag = nash_algebra(g, n);
    bool dims = af.finite == ag.finite && (!af.finite || af.dimension == ag.dimension);
    QuotientBasis qf{af.finite, af.dimension, af.monomial_basis};
    QuotientBasis qg{ag.finite, ag.dimension, ag.monomial_basis};
    rep.add("algebra dimensions agree", dims, dim_str(qf) + " vs " + dim_str(qg));
    rep.fact("dimension f", dim_str(qf));
    rep.fact("dimension g", dim_str(qg));
    return rep;
}

Report check_inclusion_J1_power(const Polynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    int d = f.vars();
    Report rep;
    rep.title = "inclusion J_n(f) in J_1(f)^binom(d-2+n,d-1)";
    int e = static_cast<int>(binomial(d - 2 + n, d - 1).get_si());
    bool ge3 = (d >= 3 && n >= 2) || (d == 2 && n >= 3);
    rep.fact("exponent", std::to_string(e));
    rep.fact("exponent>=3", ge3 ? "yes" : "no");
    IdealGens Jn = jacobian_ideal(f, n);
    OrderedIdeal power = OrderedIdeal::groebner(ideal_power(jacobian_ideal(f, 1), e),
                                                MonomialOrder{OrderKind::GradedLex});
    for (std::size_t k = 0; k < Jn.gens().size(); ++k) {
        const Polynomial& gen = Jn.gens()[k];
        bool ok = power.contains(gen);
        rep.add("generator " + std::to_string(k), ok, ok ? "" : gen.str());
    }
    if (ge3 != (e >= 3))
        rep.add("case split consistency", false,
                "computed exponent " + std::to_string(e) + " contradicts the case split");
    return rep;
}

Report check_weighted_homogeneous_invariance(const Polynomial& f,
                                             const std::vector<int>& weights,
                                             const Polynomial& u, int n) {
    require_local_input(f);
    if (static_cast<int>(weights.size()) != f.vars())
        throw std::invalid_argument("weight count mismatch");
    if (u.constant_term() == 0) throw std::invalid_argument("u(0) must be nonzero");
    long wdeg = -1;
    for (const auto& [m, c] : f.terms()) {
        long wd = 0;
        for (int i = 0; i < f.vars(); ++i) wd += static_cast<long>(weights[static_cast<std::size_t>(i)]) * m[i];
        if (wdeg < 0) wdeg = wd;
        if (wd != wdeg)
            throw std::invalid_argument("f is not weighted homogeneous for the given weights");
    }
    Report rep;
    rep.title = "weighted-homogeneous unit invariance J_n(f) = J_n(u*f)";
    rep.fact("weighted degree", std::to_string(wdeg));
    rep.add("local ideal equality",
            ideal_equal(jacobian_ideal(f, n), jacobian_ideal(u * f, n), kLocal));
    return rep;
}

}  // namespace hijac
