#include "hijac/resolve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hijac/factor.hpp"
#include "hijac/rg_io.hpp"

namespace hijac {

const DivisorRecord* ResolutionGraph::find_divisor(const std::string& id) const {
    for (const auto& d : divisors)
        if (d.id == id) return &d;
    return nullptr;
}

const ChartRecord* ResolutionGraph::find_chart(const std::string& id) const {
    for (const auto& c : charts)
        if (c.id == id) return &c;
    return nullptr;
}

const Stratum* ResolutionGraph::find_stratum(const std::vector<std::string>& ids) const {
    for (const auto& s : strata)
        if (s.divisors == ids) return &s;
    return nullptr;
}

bool ResolutionGraph::is_m_separating(long m) const {
    for (const auto& ix : intersections) {
        long sum = find_divisor(ix.a)->N + find_divisor(ix.b)->N;
        if (sum <= m) return false;
    }
    return true;
}

void ResolutionGraph::refresh_id() {
    graph_id = "";
    std::string body = write_rg(*this);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : body) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "g%016llx", static_cast<unsigned long long>(h));
    graph_id = buf;
}

namespace {

Rat eval2(const Polynomial& p, const std::array<Rat, 2>& q) {
    return p.evaluate({q[0], q[1]});
}

// p(q1 + y1, q2 + y2)
Polynomial shift_point(const Polynomial& p, const std::array<Rat, 2>& q) {
    Substitution s({Polynomial::variable(2, 0) + Polynomial::constant(2, q[0]),
                    Polynomial::variable(2, 1) + Polynomial::constant(2, q[1])});
    return p.substitute(s);
}

int mult_at(const Polynomial& p, const std::array<Rat, 2>& q) {
    Polynomial sh = shift_point(p, q);
    return sh.is_zero() ? 0 : sh.low_degree();
}

// A strict transform through the center may straighten into a coordinate
// axis of the child chart; it must then be tracked as a coordinate divisor.
// Constant equations mean the divisor misses the chart entirely.
void attach_strict(ChartRecord& child, const std::string& id, Polynomial w) {
    if (w.is_constant()) return;
    if (w.num_terms() == 1 && w.leading_monomial().total() == 1) {
        int j = w.leading_monomial()[0] == 1 ? 0 : 1;
        child.coord_divisors.emplace_back(id, j);
        return;
    }
    child.strict_eqs.emplace_back(id, std::move(w));
}

// the two standard blowup charts centered at q
Substitution blowup_map(const std::array<Rat, 2>& q, bool chart_a) {
    Polynomial y1 = Polynomial::variable(2, 0), y2 = Polynomial::variable(2, 1);
    Polynomial c1 = Polynomial::constant(2, q[0]), c2 = Polynomial::constant(2, q[1]);
    if (chart_a) return Substitution({c1 + y1, c2 + y1 * y2});  // E: y1 = 0
    return Substitution({c1 + y1 * y2, c2 + y2});               // E: y2 = 0
}

// roots and irreducible non-linear parts of the restriction of w to an axis:
// axis = 0 restricts y1 := 0 leaving a polynomial in y2, and conversely
struct AxisRestriction {
    std::vector<Rat> roots;
    std::vector<Polynomial> irrational;  // irreducible factors of degree >= 2
    bool vanishes_identically = false;
};

AxisRestriction restrict_to_axis(const Polynomial& w, int axis) {
    AxisRestriction out;
    Polynomial u = w.eval_partial(axis, Rat(0));
    if (u.is_zero()) {
        out.vanishes_identically = true;
        return out;
    }
    if (u.is_constant()) return out;
    int var = 1 - axis;
    for (const auto& [p, e] : factor_polynomial(u).factors) {
        if (p.degree() == 1 && p.is_univariate_in(var)) {
            auto cs = p.univariate_coeffs(var);
            out.roots.push_back(-cs[0] / cs[1]);
        } else if (p.degree_in(var) >= 2) {
            out.irrational.push_back(p);
        }
        // a factor free of `var` cannot vanish on the axis: u is univariate
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

struct Builder {
    Polynomial f;
    ResolutionGraph G;
    std::vector<std::pair<Polynomial, int>> germ;  // component polynomial, multiplicity
    std::map<std::string, std::array<std::string, 2>> birth_charts;
    int blow_count = 0;
    int divisor_counter = 0;
    static constexpr int kMaxBlowups = 400;

    long nu_of(const std::string& id) const { return G.find_divisor(id)->nu; }

    bool center_blown(const ChartRecord& c, const std::array<Rat, 2>& q) const {
        return std::find(c.blown_centers.begin(), c.blown_centers.end(), q) !=
               c.blown_centers.end();
    }

    // branch data at a point of a chart
    struct PointView {
        std::vector<std::pair<std::string, int>> coords;     // coordinate divisors vanishing
        std::vector<std::pair<std::string, Polynomial>> stricts;  // strict components vanishing
        int branches() const { return static_cast<int>(coords.size() + stricts.size()); }
    };

    PointView view_at(const ChartRecord& c, const std::array<Rat, 2>& q) const {
        PointView v;
        for (const auto& [id, ci] : c.coord_divisors)
            if (q[static_cast<std::size_t>(ci)] == 0) v.coords.emplace_back(id, ci);
        for (const auto& [id, w] : c.strict_eqs)
            if (eval2(w, q) == 0) v.stricts.emplace_back(id, w);
        return v;
    }

    // simple-normal-crossing test at a rational point
    bool snc_ok(const ChartRecord& c, const std::array<Rat, 2>& q) const {
        PointView v = view_at(c, q);
        int b = v.branches();
        if (b > 2) return false;
        if (b == 0) return true;
        // strict branches must be smooth there and transverse to everything
        std::vector<std::array<Rat, 2>> grads;
        for (const auto& [id, ci] : v.coords) {
            std::array<Rat, 2> g{Rat(0), Rat(0)};
            g[static_cast<std::size_t>(ci)] = 1;
            grads.push_back(g);
        }
        for (const auto& [id, w] : v.stricts) {
            std::array<Rat, 2> g{eval2(w.derivative(0), q), eval2(w.derivative(1), q)};
            if (g[0] == 0 && g[1] == 0) return false;  // singular branch
            grads.push_back(g);
        }
        if (b == 2)
            return grads[0][0] * grads[1][1] - grads[0][1] * grads[1][0] != 0;
        return true;
    }

    void blow_up(std::size_t chart_idx, const std::array<Rat, 2>& q) {
        if (++blow_count > kMaxBlowups)
            throw ResolveError("blowup budget exceeded; the resolution is not converging");
        // copies: G.charts reallocates below
        Substitution parent_map;
        Polynomial parent_transform = Polynomial::zero(2);
        std::vector<std::pair<std::string, int>> parent_coords;
        std::vector<std::pair<std::string, Polynomial>> parent_stricts;
        {
            ChartRecord& C = G.charts[chart_idx];
            C.blown_centers.push_back(q);
            parent_map = C.map_to_root;
            parent_transform = C.transform;
            parent_coords = C.coord_divisors;
            parent_stricts = C.strict_eqs;
        }

        long N_new = mult_at(parent_transform, q);
        long nu_new = 2;
        for (const auto& [id, ci] : parent_coords)
            if (q[static_cast<std::size_t>(ci)] == 0) nu_new += nu_of(id) - 1;
        for (const auto& [id, w] : parent_stricts)
            if (eval2(w, q) == 0) nu_new += nu_of(id) - 1;

        std::string eid = "E" + std::to_string(divisor_counter++);
        G.divisors.push_back({eid, N_new, nu_new, DivisorKind::Exceptional});
        int k = blow_count;

        std::array<std::size_t, 2> child_idx{};
        for (int side = 0; side < 2; ++side) {
            bool is_a = side == 0;
            Substitution B = blowup_map(q, is_a);
            int ecoord = is_a ? 0 : 1;
            ChartRecord child;
            child.id = "c" + std::to_string(k) + (is_a ? "a" : "b");
            child.map_to_root = parent_map.compose(B);
            child.transform = parent_transform.substitute(B);
            child.has_transform = true;
            child.coord_divisors.emplace_back(eid, ecoord);
            for (const auto& [id, ci] : parent_coords) {
                if (q[static_cast<std::size_t>(ci)] != 0) continue;  // not through the center
                // the coordinate surviving as a coordinate is the one opposite
                // to the exceptional coordinate of this chart
                if (ci != ecoord) child.coord_divisors.emplace_back(id, ci);
            }
            for (const auto& [id, w] : parent_stricts) {
                if (eval2(w, q) != 0) continue;
                Polynomial wc = w.substitute(B);
                wc = wc.shift_down(ecoord, wc.var_order(ecoord));
                attach_strict(child, id, std::move(wc));
            }
            G.charts.push_back(std::move(child));
            child_idx[static_cast<std::size_t>(side)] = G.charts.size() - 1;
        }
        birth_charts[eid] = {G.charts[child_idx[0]].id, G.charts[child_idx[1]].id};

        scan_chart(child_idx[0], 0, false);
        scan_chart(child_idx[1], 1, true);
    }

    // find and blow up the SNC failures on the new exceptional axis of a
    // chart; chart B contributes only the direction at infinity (its origin)
    void scan_chart(std::size_t chart_idx, int axis, bool origin_only) {
        std::set<Rat> candidates;
        {
            const ChartRecord& c = G.charts[chart_idx];
            if (origin_only) {
                PointView v = view_at(c, {Rat(0), Rat(0)});
                if (v.branches() >= 2) candidates.insert(Rat(0));
            } else {
                bool second_coord = c.coord_divisors.size() > 1;
                if (second_coord) candidates.insert(Rat(0));
                for (const auto& [id, w] : c.strict_eqs) {
                    AxisRestriction r = restrict_to_axis(w, axis);
                    if (r.vanishes_identically)
                        throw ResolveError("strict transform contains the exceptional axis");
                    for (const Rat& t : r.roots) candidates.insert(t);
                    for (const auto& phi : r.irrational) check_irrational(c, axis, id, phi);
                }
            }
        }
        for (const Rat& t : candidates) {
            std::array<Rat, 2> p{Rat(0), Rat(0)};
            p[static_cast<std::size_t>(1 - axis)] = t;
            if (!snc_ok(G.charts[chart_idx], p)) blow_up(chart_idx, p);
        }
    }

    // conjugate non-rational axis points: fine if transverse there, fatal if
    // a blowup would be needed
    void check_irrational(const ChartRecord& c, int axis, const std::string& id,
                          const Polynomial& phi) const {
        int var = 1 - axis;
        auto shares_root = [&](const Polynomial& other) {
            Polynomial g = poly_gcd(phi, other);
            return g.degree() > 0;
        };
        const Polynomial& w = *[&]() {
            for (const auto& [sid, sw] : c.strict_eqs)
                if (sid == id) return &sw;
            throw ResolveError("internal: strict equation missing");
        }();
        Polynomial dw = w.derivative(var).eval_partial(axis, Rat(0));
        if (shares_root(dw))
            throw ResolveError("non-rational singular point encountered; minimal polynomial " +
                               phi.str(y_names(2)));
        for (const auto& [oid, ow] : c.strict_eqs) {
            if (oid == id) continue;
            if (shares_root(ow.eval_partial(axis, Rat(0))))
                throw ResolveError("non-rational singular point encountered; minimal polynomial " +
                                   phi.str(y_names(2)));
        }
    }

    void assemble_intersections() {
        auto add = [&](std::string a, std::string b, const std::string& chart,
                       const std::array<Rat, 2>& p) {
            if (a > b) std::swap(a, b);
            G.intersections.push_back({a, b, chart, true, {p[0], p[1]}, Polynomial::zero(2)});
        };
        if (blow_count == 0) {
            if (germ.size() == 2)
                add(G.divisors[0].id, G.divisors[1].id, "root", {Rat(0), Rat(0)});
            return;
        }
        for (const auto& d : G.divisors) {
            if (d.kind != DivisorKind::Exceptional) continue;
            const auto& bc = birth_charts.at(d.id);
            // chart a: full axis except the direction at infinity
            {
                const ChartRecord& A = *G.find_chart(bc[0]);
                std::array<Rat, 2> origin{Rat(0), Rat(0)};
                for (const auto& [oid, ci] : A.coord_divisors)
                    if (oid != d.id && !center_blown(A, origin)) add(d.id, oid, A.id, origin);
                for (const auto& [sid, w] : A.strict_eqs) {
                    AxisRestriction r = restrict_to_axis(w, 0);
                    for (const Rat& t : r.roots) {
                        std::array<Rat, 2> p{Rat(0), t};
                        if (!center_blown(A, p)) add(d.id, sid, A.id, p);
                    }
                    for (const auto& phi : r.irrational) {
                        std::string a = d.id, b = sid;
                        if (a > b) std::swap(a, b);
                        G.intersections.push_back({a, b, A.id, false, {}, phi});
                    }
                }
            }
            // chart b: only its origin is new
            {
                const ChartRecord& B = *G.find_chart(bc[1]);
                std::array<Rat, 2> origin{Rat(0), Rat(0)};
                if (!center_blown(B, origin)) {
                    for (const auto& [oid, ci] : B.coord_divisors)
                        if (oid != d.id) add(d.id, oid, B.id, origin);
                    for (const auto& [sid, w] : B.strict_eqs)
                        if (eval2(w, origin) == 0) add(d.id, sid, B.id, origin);
                }
            }
        }
        std::sort(G.intersections.begin(), G.intersections.end(),
                  [](const Intersection& x, const Intersection& y) {
                      if (x.a != y.a) return x.a < y.a;
                      if (x.b != y.b) return x.b < y.b;
                      if (x.chart != y.chart) return x.chart < y.chart;
                      return x.point < y.point;
                  });
    }

    void assemble_strata() {
        for (const auto& d : G.divisors) {
            Stratum s;
            s.divisors = {d.id};
            s.N_I = d.N;
            s.class_name = "cl_" + d.id;
            G.strata.push_back(std::move(s));
        }
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto& ix : G.intersections) pairs.insert({ix.a, ix.b});
        for (const auto& [a, b] : pairs) {
            Stratum s;
            s.divisors = {a, b};
            long na = G.find_divisor(a)->N, nb = G.find_divisor(b)->N;
            s.N_I = std::gcd(na, nb);
            s.class_name = "cl_" + a + "_" + b;
            G.strata.push_back(std::move(s));
        }
    }
};

}  // namespace

ResolutionGraph resolve_curve(const Polynomial& f) {
    if (f.vars() != 2) throw std::invalid_argument("resolve_curve: expected two variables");
    if (f.is_zero()) throw std::invalid_argument("resolve_curve: f = 0");
    if (f.constant_term() != 0) throw std::invalid_argument("resolve_curve: f(0) != 0");

    Builder b;
    b.f = f;
    b.G.ambient_dim = 2;

    // germ components: irreducible factors through the origin
    try {
        for (const auto& [p, e] : factor_polynomial(f).factors)
            if (p.constant_term() == 0) b.germ.emplace_back(p, e);
    } catch (const std::runtime_error& e) {
        throw ResolveError(std::string("cannot split the germ components: ") + e.what());
    }
    std::sort(b.germ.begin(), b.germ.end(), [](const auto& x, const auto& y) {
        return Polynomial::cmp(x.first, y.first) < 0;
    });

    ChartRecord root;
    root.id = "root";
    root.map_to_root = Substitution::identity(2);
    root.transform = f;
    root.has_transform = true;
    for (const auto& [p, e] : b.germ) {
        std::string id = "E" + std::to_string(b.divisor_counter++);
        b.G.divisors.push_back({id, e, 1, DivisorKind::Strict});
        if (p == Polynomial::variable(2, 0))
            root.coord_divisors.emplace_back(id, 0);
        else if (p == Polynomial::variable(2, 1))
            root.coord_divisors.emplace_back(id, 1);
        else
            root.strict_eqs.emplace_back(id, p);
    }
    b.G.charts.push_back(std::move(root));

    std::array<Rat, 2> origin{Rat(0), Rat(0)};
    if (!b.snc_ok(b.G.charts[0], origin)) b.blow_up(0, origin);

    b.assemble_intersections();
    b.assemble_strata();
    covering_units(b.G);
    b.G.refresh_id();
    return b.G;
}

namespace {

// local equation of a divisor on a chart: a coordinate or a tracked strict
// transform; nullopt when the divisor does not meet the chart usefully
std::optional<Polynomial> local_equation(const ChartRecord& c, const std::string& id) {
    for (const auto& [did, ci] : c.coord_divisors)
        if (did == id) return Polynomial::variable(2, ci);
    for (const auto& [did, w] : c.strict_eqs)
        if (did == id) return w;
    return std::nullopt;
}

Polynomial stratum_unit(const ResolutionGraph& G, const ChartRecord& c,
                        const std::vector<std::string>& members) {
    if (!c.has_transform)
        throw std::runtime_error("covering_units: chart lacks total-transform data");
    Polynomial u = c.transform;
    // all coordinate powers come off
    for (int v = 0; v < 2; ++v) u = u.shift_down(v, u.var_order(v));
    // non-coordinate local equations of the stratum members come off too
    for (const auto& id : members) {
        bool is_coord = false;
        for (const auto& [did, ci] : c.coord_divisors)
            if (did == id) is_coord = true;
        if (is_coord) continue;
        auto eq = local_equation(c, id);
        if (!eq) throw std::runtime_error("covering_units: no local equation for " + id);
        long N = G.find_divisor(id)->N;
        for (long k = 0; k < N; ++k) {
            auto q = u.divide_exact(*eq);
            if (!q) throw std::runtime_error("covering_units: transform not divisible by " + id);
            u = *q;
        }
    }
    return u;
}

}  // namespace

void covering_units(ResolutionGraph& G) {
    for (auto& s : G.strata) {
        if (s.divisors.size() == 1) {
            const std::string& id = s.divisors[0];
            const DivisorRecord* d = G.find_divisor(id);
            const ChartRecord* home = nullptr;
            if (d->kind == DivisorKind::Strict) {
                home = G.find_chart("root");
                if (!home) {  // parsed graph without a root chart
                    for (const auto& c : G.charts)
                        if (local_equation(c, id)) { home = &c; break; }
                }
            } else {
                for (const auto& c : G.charts)
                    if (local_equation(c, id)) { home = &c; break; }
            }
            if (!home) throw std::runtime_error("covering_units: no chart sees " + id);
            s.chart = home->id;
            s.unit = stratum_unit(G, *home, s.divisors);
            s.has_unit = true;
        } else {
            // the meeting chart of the first recorded crossing of the pair
            const Intersection* home = nullptr;
            for (const auto& ix : G.intersections)
                if (std::vector<std::string>{ix.a, ix.b} == s.divisors) { home = &ix; break; }
            if (!home) throw std::runtime_error("covering_units: pair stratum without crossing");
            s.chart = home->chart;
            s.unit = stratum_unit(G, *G.find_chart(home->chart), s.divisors);
            s.has_unit = true;
        }
    }
}

bool verify_pullback_orders(const Polynomial& f, const ResolutionGraph& G) {
    for (const auto& d : G.divisors) {
        bool checked = false;
        for (const auto& c : G.charts) {
            auto eq = local_equation(c, d.id);
            if (!eq) continue;
            Polynomial pulled = f.substitute(c.map_to_root);
            long order = 0;
            if (eq->num_terms() == 1) {
                int v = eq->leading_monomial()[0] == 1 ? 0 : 1;
                order = pulled.var_order(v);
            } else {
                while (true) {
                    auto q = pulled.divide_exact(*eq);
                    if (!q) break;
                    pulled = *q;
                    ++order;
                }
            }
            if (order != d.N) return false;
            checked = true;
            break;
        }
        if (!checked) return false;
    }
    return true;
}

ResolutionGraph m_separate(const ResolutionGraph& G_in, long m) {
    if (m < 1) throw std::invalid_argument("m_separate: m >= 1");
    ResolutionGraph G = G_in;
    int round = 0;
    while (true) {
        if (++round > 400) throw std::runtime_error("m_separate: did not terminate");
        const Intersection* target = nullptr;
        for (const auto& ix : G.intersections) {
            long sum = G.find_divisor(ix.a)->N + G.find_divisor(ix.b)->N;
            if (sum <= m) { target = &ix; break; }
        }
        if (!target) break;
        if (!target->rational)
            throw ResolveError("m_separate: non-rational intersection point; minimal polynomial " +
                               target->min_poly.str(y_names(2)));
        Intersection ix = *target;
        const ChartRecord* parent = G.find_chart(ix.chart);
        if (!parent || !parent->has_transform)
            throw std::runtime_error("m_separate: graph lacks chart transform data");
        if (ix.point.size() != 2)
            throw std::runtime_error("m_separate: only plane graphs can be separated");

        const DivisorRecord* da = G.find_divisor(ix.a);
        const DivisorRecord* db = G.find_divisor(ix.b);
        long N_new = da->N + db->N;
        long nu_new = da->nu + db->nu;
        // fresh ids: continue the E numbering
        int max_idx = -1;
        for (const auto& d : G.divisors)
            if (d.id.size() > 1 && d.id[0] == 'E')
                max_idx = std::max(max_idx, std::atoi(d.id.c_str() + 1));
        std::string eid = "E" + std::to_string(max_idx + 1);
        G.divisors.push_back({eid, N_new, nu_new, DivisorKind::Exceptional});

        // charts of the separating blowup
        std::array<Rat, 2> q{ix.point[0], ix.point[1]};
        int sep_index = 0;
        for (const auto& c : G.charts)
            if (c.id.rfind("s", 0) == 0) ++sep_index;
        std::array<std::string, 2> child_ids{"s" + std::to_string(sep_index + 1) + "a",
                                             "s" + std::to_string(sep_index + 1) + "b"};
        std::vector<std::pair<std::string, int>> parent_coords = parent->coord_divisors;
        std::vector<std::pair<std::string, Polynomial>> parent_stricts = parent->strict_eqs;
        Substitution parent_map = parent->map_to_root;
        Polynomial parent_transform = parent->transform;
        for (auto& c : G.charts)
            if (c.id == ix.chart) { c.blown_centers.push_back(q); break; }
        std::array<std::string, 2> birth{};
        for (int side = 0; side < 2; ++side) {
            bool is_a = side == 0;
            Substitution B = blowup_map(q, is_a);
            int ecoord = is_a ? 0 : 1;
            ChartRecord child;
            child.id = child_ids[static_cast<std::size_t>(side)];
            child.map_to_root = parent_map.compose(B);
            child.transform = parent_transform.substitute(B);
            child.has_transform = true;
            child.coord_divisors.emplace_back(eid, ecoord);
            for (const auto& [id, ci] : parent_coords) {
                if (q[static_cast<std::size_t>(ci)] != 0) continue;
                if (ci != ecoord) child.coord_divisors.emplace_back(id, ci);
            }
            for (const auto& [id, w] : parent_stricts) {
                if (eval2(w, q) != 0) continue;
                Polynomial wc = w.substitute(B);
                wc = wc.shift_down(ecoord, wc.var_order(ecoord));
                attach_strict(child, id, std::move(wc));
            }
            G.charts.push_back(std::move(child));
            birth[static_cast<std::size_t>(side)] = child_ids[static_cast<std::size_t>(side)];
        }

        // replace the separated crossing by the two new ones
        G.intersections.erase(
            std::remove_if(G.intersections.begin(), G.intersections.end(),
                           [&](const Intersection& j) {
                               return j.a == ix.a && j.b == ix.b && j.chart == ix.chart &&
                                      j.point == ix.point;
                           }),
            G.intersections.end());
        for (const std::string& cid : birth) {
            const ChartRecord& c = *G.find_chart(cid);
            std::array<Rat, 2> origin{Rat(0), Rat(0)};
            for (const auto& [oid, ci] : c.coord_divisors) {
                if (oid == eid) continue;
                std::string a = eid, bb = oid;
                if (a > bb) std::swap(a, bb);
                G.intersections.push_back({a, bb, cid, true, {origin[0], origin[1]}, Polynomial::zero(2)});
            }
            for (const auto& [sid, w] : c.strict_eqs) {
                int axis = (cid == birth[0]) ? 0 : 1;
                if (cid == birth[1]) {
                    if (eval2(w, origin) == 0) {
                        std::string a = eid, bb = sid;
                        if (a > bb) std::swap(a, bb);
                        G.intersections.push_back({a, bb, cid, true, {origin[0], origin[1]}, Polynomial::zero(2)});
                    }
                    continue;
                }
                AxisRestriction r = restrict_to_axis(w, axis);
                for (const Rat& t : r.roots) {
                    std::string a = eid, bb = sid;
                    if (a > bb) std::swap(a, bb);
                    G.intersections.push_back({a, bb, cid, true, {Rat(0), t}, Polynomial::zero(2)});
                }
                for (const auto& phi : r.irrational) {
                    std::string a = eid, bb = sid;
                    if (a > bb) std::swap(a, bb);
                    G.intersections.push_back({a, bb, cid, false, {}, phi});
                }
            }
        }
        std::sort(G.intersections.begin(), G.intersections.end(),
                  [](const Intersection& x, const Intersection& y) {
                      if (x.a != y.a) return x.a < y.a;
                      if (x.b != y.b) return x.b < y.b;
                      if (x.chart != y.chart) return x.chart < y.chart;
                      return x.point < y.point;
                  });
        // rebuild strata from scratch
        G.strata.clear();
        for (const auto& d : G.divisors) {
            Stratum s;
            s.divisors = {d.id};
            s.N_I = d.N;
            s.class_name = "cl_" + d.id;
            G.strata.push_back(std::move(s));
        }
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto& j : G.intersections) pairs.insert({j.a, j.b});
        for (const auto& [a, bb] : pairs) {
            Stratum s;
            s.divisors = {a, bb};
            s.N_I = std::gcd(G.find_divisor(a)->N, G.find_divisor(bb)->N);
            s.class_name = "cl_" + a + "_" + bb;
            G.strata.push_back(std::move(s));
        }
        covering_units(G);
    }
    G.refresh_id();
    return G;
}

Report compare_coverings(const ResolutionGraph& Gf, const ResolutionGraph& Gg) {
    Report rep;
    rep.title = "covering comparison on a shared resolution";

    // structural identity of the blowup sequences
    bool charts_ok = Gf.charts.size() == Gg.charts.size();
    for (std::size_t i = 0; charts_ok && i < Gf.charts.size(); ++i) {
        charts_ok = Gf.charts[i].id == Gg.charts[i].id &&
                    Gf.charts[i].map_to_root == Gg.charts[i].map_to_root;
    }
    if (!charts_ok) {
        rep.add("identical blowup sequence", false, "charts or centers differ; comparison refused");
        return rep;
    }
    rep.add("identical blowup sequence", true);

    bool div_ok = Gf.divisors.size() == Gg.divisors.size();
    for (std::size_t i = 0; div_ok && i < Gf.divisors.size(); ++i) {
        const auto &a = Gf.divisors[i], &b = Gg.divisors[i];
        div_ok = a.id == b.id && a.N == b.N && a.nu == b.nu && a.kind == b.kind;
    }
    rep.add("divisor data (N, nu) match", div_ok);

    bool ix_ok = Gf.intersections.size() == Gg.intersections.size();
    for (std::size_t i = 0; ix_ok && i < Gf.intersections.size(); ++i) {
        const auto &a = Gf.intersections[i], &b = Gg.intersections[i];
        ix_ok = a.a == b.a && a.b == b.b && a.chart == b.chart && a.rational == b.rational &&
                a.point == b.point && a.min_poly == b.min_poly;
    }
    rep.add("intersections match", ix_ok);

    bool strata_ok = Gf.strata.size() == Gg.strata.size();
    for (std::size_t i = 0; strata_ok && i < Gf.strata.size(); ++i)
        strata_ok = Gf.strata[i].divisors == Gg.strata[i].divisors &&
                    Gf.strata[i].N_I == Gg.strata[i].N_I;
    rep.add("strata and covering degrees match", strata_ok);
    if (!div_ok || !ix_ok || !strata_ok) return rep;

    // unit agreement where the covering is nontrivial
    for (std::size_t i = 0; i < Gf.strata.size(); ++i) {
        const Stratum& sf = Gf.strata[i];
        const Stratum& sg = Gg.strata[i];
        std::string label = "units on " + sf.class_name;
        if (sf.N_I < 2) {
            rep.add(label + " (trivial covering)", true);
            continue;
        }
        if (!sf.has_unit || !sg.has_unit || sf.chart != sg.chart) {
            rep.add(label, false, "unit data missing or charts differ");
            continue;
        }
        const ChartRecord& c = *Gf.find_chart(sf.chart);
        Polynomial diff = sf.unit - sg.unit;
        bool member;
        Polynomial ratio_probe = Polynomial::zero(2);
        if (sf.divisors.size() == 1) {
            auto eq = local_equation(c, sf.divisors[0]);
            member = eq && (diff.is_zero() || diff.divide_exact(*eq).has_value());
            if (eq) ratio_probe = *eq;
        } else {
            // the stratum is the crossing point set; evaluate there
            member = true;
            for (const auto& ix : Gf.intersections) {
                if (std::vector<std::string>{ix.a, ix.b} != sf.divisors) continue;
                if (!ix.rational) { member = false; continue; }
                const ChartRecord& mc = *Gf.find_chart(ix.chart);
                Polynomial du = stratum_unit(Gf, mc, sf.divisors) - stratum_unit(Gg, mc, sf.divisors);
                if (du.evaluate(ix.point) != 0) member = false;
            }
        }
        if (member) {
            rep.add(label, true);
            continue;
        }
        // constant-ratio fallback: v = c * u on the stratum with c an N_I-th
        // power still glues to isomorphic coverings
        std::optional<Rat> ratio;
        if (sf.divisors.size() == 1 && !ratio_probe.is_zero()) {
            Polynomial uf = sf.unit, ug = sg.unit;
            // compare restrictions along the divisor
            for (const auto& [did, ci] : c.coord_divisors) {
                if (did != sf.divisors[0]) continue;
                Polynomial rf = uf.eval_partial(ci, Rat(0));
                Polynomial rg = ug.eval_partial(ci, Rat(0));
                if (!rf.is_zero()) {
                    auto q = rg.divide_exact(rf);
                    if (q && q->is_constant()) ratio = q->constant_term();
                }
            }
        }
        if (ratio && *ratio != 0) {
            auto root = rat_root(*ratio, static_cast<unsigned long>(sf.N_I));
            if (root) {
                rep.add(label, true, "unit ratio " + rat_str(*ratio) + " is an N_I-th power");
            } else {
                rep.add(label, CheckStatus::UNDECIDED,
                        "unit ratio " + rat_str(*ratio) +
                            " needs an N_I-th root not available over Q");
            }
        } else {
            rep.add(label, false, "unit difference does not vanish on the stratum");
        }
    }
    return rep;
}

}  // namespace hijac
