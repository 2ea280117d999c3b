#include "hijac/motivic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hijac {

ClassSymbol stratum_symbol(const ResolutionGraph& G, const Stratum& s) {
    ClassSymbol sym;
    sym.origin = G.graph_id;
    sym.stratum = s.divisors;
    sym.cover_degree = s.N_I;
    sym.action_order = s.N_I;
    sym.name = s.class_name;
    return sym;
}

void GroVal::add_term(const ClassSymbol& s, long e, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(s, e);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroVal GroVal::term(const ClassSymbol& sym, long Lexp, Int coeff) {
    GroVal v;
    v.add_term(sym, Lexp, coeff);
    return v;
}

GroVal GroVal::L_power(long p) { return term(ClassSymbol{}, p, 1); }

GroVal GroVal::constant(Int c) { return term(ClassSymbol{}, 0, c); }

bool GroVal::is_laurent() const {
    for (const auto& [key, c] : terms_)
        if (!key.first.is_unit()) return false;
    return true;
}

GroVal GroVal::operator+(const GroVal& o) const {
    GroVal v(*this);
    for (const auto& [key, c] : o.terms_) v.add_term(key.first, key.second, c);
    return v;
}

GroVal GroVal::operator-(const GroVal& o) const {
    GroVal v(*this);
    for (const auto& [key, c] : o.terms_) v.add_term(key.first, key.second, -c);
    return v;
}

GroVal GroVal::operator-() const { return GroVal::zero() - *this; }

GroVal GroVal::scaled(const Int& c) const {
    GroVal v;
    if (c == 0) return v;
    for (const auto& [key, k] : terms_) v.terms_.emplace(key, k * c);
    return v;
}

GroVal GroVal::shifted(long Lexp) const {
    GroVal v;
    for (const auto& [key, c] : terms_) v.terms_.emplace(std::make_pair(key.first, key.second + Lexp), c);
    return v;
}

GroVal GroVal::operator*(const GroVal& o) const {
    const GroVal* laurent = nullptr;
    const GroVal* other = nullptr;
    if (o.is_laurent()) {
        laurent = &o;
        other = this;
    } else if (is_laurent()) {
        laurent = this;
        other = &o;
    } else {
        throw std::invalid_argument(
            "GroVal product needs one factor to be a Laurent polynomial in L");
    }
    GroVal v;
    for (const auto& [lk, lc] : laurent->terms_)
        for (const auto& [ok, oc] : other->terms_) v.add_term(ok.first, ok.second + lk.second, lc * oc);
    return v;
}

std::vector<std::string> GroVal::origins() const {
    std::vector<std::string> out;
    for (const auto& [key, c] : terms_) {
        if (key.first.is_unit()) continue;
        if (std::find(out.begin(), out.end(), key.first.origin) == out.end())
            out.push_back(key.first.origin);
    }
    return out;
}

GroVal GroVal::relabeled(const std::string& from, const std::string& to) const {
    GroVal v;
    for (const auto& [key, c] : terms_) {
        ClassSymbol s = key.first;
        if (s.origin == from) s.origin = to;
        v.add_term(s, key.second, c);
    }
    return v;
}

std::string GroVal::str() const {
    if (terms_.empty()) return "0";
    // group by symbol, unit class first; inside: descending L exponent
    std::map<ClassSymbol, std::map<long, Int, std::greater<long>>> grouped;
    for (const auto& [key, c] : terms_) grouped[key.first][key.second] = c;
    std::ostringstream os;
    bool first = true;
    for (const auto& [sym, poly] : grouped) {
        for (const auto& [e, c] : poly) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::vector<std::string> pieces;
            if (a != 1 || (e == 0 && sym.is_unit())) pieces.push_back(a.get_str());
            if (e != 0) pieces.push_back(e == 1 ? "L" : "L^" + std::to_string(e));
            if (!sym.is_unit()) pieces.push_back("[" + sym.name + "]");
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                if (i) os << "*";
                os << pieces[i];
            }
        }
    }
    return os.str();
}

GroVal L_minus_one_pow(int k) {
    if (k < 0) throw std::invalid_argument("L_minus_one_pow: negative power");
    GroVal v = GroVal::constant(1);
    GroVal lm1 = GroVal::L_power(1) - GroVal::constant(1);
    for (int i = 0; i < k; ++i) v = v * lm1;
    return v;
}

void RationalSeries::add_term(const GroVal& coeff, std::vector<std::pair<long, long>> factors) {
    for (const auto& [p, q] : factors)
        if (q < 1) throw std::invalid_argument("RationalSeries: factor needs q >= 1");
    std::sort(factors.begin(), factors.end());
    auto [it, inserted] = terms_.emplace(std::move(factors), coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    RationalSeries out(*this);
    for (const auto& [f, c] : o.terms_) out.add_term(c, f);
    return out;
}

std::string RationalSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [factors, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.str() << ")";
        for (const auto& [p, q] : factors) os << "*F(" << p << "," << q << ")";
    }
    return os.str();
}

namespace {

// all (k_i >= 1) with sum k_i * N_i = m; callback receives sum k_i * nu_i
void compositions(const std::vector<long>& Ns, const std::vector<long>& nus, long m,
                  std::size_t idx, long acc_nu,
                  const std::function<void(long)>& emit) {
    if (idx + 1 == Ns.size()) {
        long N = Ns[idx];
        if (m >= N && m % N == 0) emit(acc_nu + (m / N) * nus[idx]);
        return;
    }
    for (long k = 1; k * Ns[idx] < m; ++k)
        compositions(Ns, nus, m - k * Ns[idx], idx + 1, acc_nu + k * nus[idx], emit);
}

struct StratumData {
    ClassSymbol sym;
    std::vector<long> Ns, nus;
};

std::vector<StratumData> stratum_data(const ResolutionGraph& G) {
    std::vector<StratumData> out;
    for (const auto& s : G.strata) {
        StratumData d;
        d.sym = stratum_symbol(G, s);
        for (const auto& id : s.divisors) {
            const DivisorRecord* rec = G.find_divisor(id);
            if (!rec) throw std::invalid_argument("stratum references unknown divisor " + id);
            d.Ns.push_back(rec->N);
            d.nus.push_back(rec->nu);
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

GroVal contact_locus_class(const ResolutionGraph& G, long m, int d) {
    if (m < 1) throw std::invalid_argument("contact_locus_class: m >= 1");
    GroVal total;
    for (const auto& s : stratum_data(G)) {
        GroVal inner;
        compositions(s.Ns, s.nus, m, 0, 0,
                     [&](long nu_sum) { inner = inner + GroVal::L_power(-nu_sum); });
        if (inner.is_zero()) continue;
        GroVal cls = GroVal::term(s.sym, 0, 1);
        total = total + cls * (L_minus_one_pow(static_cast<int>(s.Ns.size()) - 1) * inner);
    }
    return total.shifted(m * d);
}

RationalSeries zeta(const ResolutionGraph& G, int d) {
    if (d != G.ambient_dim)
        throw std::invalid_argument("zeta: dimension disagrees with the graph header");
    RationalSeries Z;
    for (const auto& s : stratum_data(G)) {
        std::vector<std::pair<long, long>> factors;
        for (std::size_t i = 0; i < s.Ns.size(); ++i) factors.emplace_back(-s.nus[i], s.Ns[i]);
        GroVal coeff = GroVal::term(s.sym, 0, 1) * L_minus_one_pow(static_cast<int>(s.Ns.size()) - 1);
        Z.add_term(coeff, std::move(factors));
    }
    return Z;
}

std::vector<GroVal> expand(const RationalSeries& Z, int M, int d) {
    std::vector<GroVal> out(static_cast<std::size_t>(M));
    for (const auto& [factors, coeff] : Z.terms()) {
        if (factors.empty()) continue;  // the constant term has no T^m part, m >= 1
        std::vector<long> qs, ps;
        for (const auto& [p, q] : factors) {
            ps.push_back(p);
            qs.push_back(q);
        }
        for (int m = 1; m <= M; ++m) {
            GroVal inner;
            compositions(qs, ps, m, 0, 0,
                         [&](long p_sum) { inner = inner + GroVal::L_power(p_sum); });
            if (!inner.is_zero())
                out[static_cast<std::size_t>(m - 1)] =
                    out[static_cast<std::size_t>(m - 1)] + (coeff * inner).shifted(static_cast<long>(d) * m);
        }
    }
    return out;
}

GroVal limit_T_infinity(const RationalSeries& Z) {
    GroVal out;
    for (const auto& [factors, coeff] : Z.terms())
        out = out + (factors.size() % 2 ? -coeff : coeff);
    return out;
}

GroVal nearby_cycle(const ResolutionGraph& G, int d) {
    GroVal via_limit = -limit_T_infinity(zeta(G, d));
    GroVal closed;
    for (const auto& s : stratum_data(G)) {
        GroVal one_minus_L_pow = GroVal::constant(1);
        GroVal oml = GroVal::constant(1) - GroVal::L_power(1);
        for (std::size_t i = 1; i < s.Ns.size(); ++i) one_minus_L_pow = one_minus_L_pow * oml;
        closed = closed + GroVal::term(s.sym, 0, 1) * one_minus_L_pow;
    }
    if (!(via_limit == closed))
        throw std::logic_error("nearby_cycle: the two evaluation routes disagree");
    return via_limit;
}

Report check_separating_specialization(const ResolutionGraph& G, long m, int d) {
    Report rep;
    rep.title = "m-separating specialization of the contact-locus formula, m = " + std::to_string(m);
    if (!G.is_m_separating(m)) {
        rep.add("graph is m-separating", CheckStatus::NOT_APPLICABLE,
                "some crossing has N_i + N_j <= m");
        return rep;
    }
    rep.add("graph is m-separating", true);
    // multi-divisor strata cannot meet sum k_i N_i = m
    bool empty_ok = true;
    for (const auto& s : stratum_data(G)) {
        if (s.Ns.size() < 2) continue;
        compositions(s.Ns, s.nus, m, 0, 0, [&](long) { empty_ok = false; });
    }
    rep.add("multi-divisor strata contribute nothing", empty_ok);

    GroVal general = contact_locus_class(G, m, d);
    GroVal special;
    for (const auto& s : stratum_data(G)) {
        if (s.Ns.size() != 1 || m % s.Ns[0] != 0) continue;
        special = special + GroVal::term(s.sym, static_cast<long>(d) * m - (m / s.Ns[0]) * s.nus[0], 1);
    }
    rep.add("general formula equals the single-divisor specialization", gro_equal(general, special));
    return rep;
}

bool gro_equal(const GroVal& a, const GroVal& b) {
    std::vector<std::string> origins = a.origins();
    for (const auto& o : b.origins())
        if (std::find(origins.begin(), origins.end(), o) == origins.end()) origins.push_back(o);
    if (origins.size() > 1)
        throw std::invalid_argument(
            "gro_equal: symbols from different graphs are incomparable without a covering "
            "comparison certificate");
    return a == b;
}

}  // namespace hijac
