#include "hijac/rg_io.hpp"

#include <map>
#include <sstream>

#include "hijac/parse.hpp"

namespace hijac {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string kind_str(DivisorKind k) {
    return k == DivisorKind::Exceptional ? "exceptional" : "strict";
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s;
}

}  // namespace

std::string write_rg(const ResolutionGraph& G) {
    std::ostringstream os;
    auto ynames = y_names(G.ambient_dim);
    os << "# resolution graph\n";
    os << "ambient d=" << G.ambient_dim << "\n";
    for (const auto& d : G.divisors)
        os << "divisor id=" << d.id << " N=" << d.N << " nu=" << d.nu
           << " kind=" << kind_str(d.kind) << "\n";
    for (const auto& ix : G.intersections) {
        os << "intersect " << ix.a << " " << ix.b << " chart=" << ix.chart;
        if (ix.rational)
            os << " point=" << join_rats(ix.point);
        else
            os << " minpoly=" << quote(ix.min_poly.str(ynames));
        os << "\n";
    }
    for (const auto& s : G.strata) {
        os << "stratum I=";
        for (std::size_t i = 0; i < s.divisors.size(); ++i) {
            if (i) os << ",";
            os << s.divisors[i];
        }
        os << " class=" << s.class_name << " cover=" << s.N_I;
        if (s.has_unit) os << " unit=" << quote(s.unit.str(ynames));
        os << " chart=" << s.chart << "\n";
    }
    for (const auto& c : G.charts) {
        os << "chart id=" << c.id << " map=\"";
        for (int i = 0; i < G.ambient_dim; ++i) {
            if (i) os << ";";
            os << c.map_to_root.image(i).str(ynames);
        }
        os << "\"";
        if (!c.coord_divisors.empty()) {
            os << " divisors=\"";
            for (std::size_t i = 0; i < c.coord_divisors.size(); ++i) {
                if (i) os << ",";
                os << c.coord_divisors[i].first << ":" << (c.coord_divisors[i].second + 1);
            }
            os << "\"";
        }
        os << "\n";
    }
    for (const auto& c : G.charts)
        if (c.has_transform)
            os << "transform chart=" << c.id << " f=" << quote(c.transform.str(ynames)) << "\n";
    for (const auto& c : G.charts)
        for (const auto& [id, w] : c.strict_eqs)
            os << "stricteq divisor=" << id << " chart=" << c.id << " eq=" << quote(w.str(ynames))
               << "\n";
    return os.str();
}

namespace {

// whitespace-split respecting double quotes
std::vector<std::string> tokenize(const std::string& line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false;
    for (char ch : line) {
        if (ch == '"') {
            in_quotes = !in_quotes;
            continue;
        }
        if (!in_quotes && std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (in_quotes) throw RgParseError("unbalanced quotes", lineno);
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::map<std::string, std::string> attrs_of(const std::vector<std::string>& toks,
                                            std::size_t start, std::size_t lineno) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = start; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw RgParseError("expected key=value: " + toks[i], lineno);
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key,
                 std::size_t lineno) {
    auto it = kv.find(key);
    if (it == kv.end()) throw RgParseError("missing attribute " + key, lineno);
    return it->second;
}

}  // namespace

ResolutionGraph parse_rg(const std::string& text) {
    ResolutionGraph G;
    G.ambient_dim = 0;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> ynames;
    auto poly = [&](const std::string& s, std::size_t ln) {
        try {
            return parse_poly(s, ynames);
        } catch (const ParseError& e) {
            throw RgParseError(std::string("bad polynomial: ") + e.what(), ln);
        }
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line, lineno);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& head = toks[0];
        if (head == "ambient") {
            auto kv = attrs_of(toks, 1, lineno);
            G.ambient_dim = std::stoi(need(kv, "d", lineno));
            if (G.ambient_dim < 1) throw RgParseError("ambient dimension must be positive", lineno);
            ynames = y_names(G.ambient_dim);
            continue;
        }
        if (G.ambient_dim == 0) throw RgParseError("ambient line must come first", lineno);
        if (head == "divisor") {
            auto kv = attrs_of(toks, 1, lineno);
            DivisorRecord d;
            d.id = need(kv, "id", lineno);
            d.N = std::stol(need(kv, "N", lineno));
            d.nu = std::stol(need(kv, "nu", lineno));
            std::string k = need(kv, "kind", lineno);
            if (k == "exceptional")
                d.kind = DivisorKind::Exceptional;
            else if (k == "strict")
                d.kind = DivisorKind::Strict;
            else
                throw RgParseError("kind must be exceptional or strict", lineno);
            if (d.N < 1 || d.nu < 1) throw RgParseError("N and nu must be positive", lineno);
            G.divisors.push_back(std::move(d));
        } else if (head == "intersect") {
            if (toks.size() < 3) throw RgParseError("intersect needs two divisor ids", lineno);
            Intersection ix;
            ix.a = toks[1];
            ix.b = toks[2];
            if (ix.a > ix.b) std::swap(ix.a, ix.b);
            auto kv = attrs_of(toks, 3, lineno);
            ix.chart = need(kv, "chart", lineno);
            ix.min_poly = Polynomial::zero(G.ambient_dim);
            if (kv.count("point")) {
                std::istringstream ps(kv.at("point"));
                std::string piece;
                while (std::getline(ps, piece, ',')) ix.point.push_back(parse_rat(piece));
                if (static_cast<int>(ix.point.size()) != G.ambient_dim)
                    throw RgParseError("point arity mismatch", lineno);
            } else if (kv.count("minpoly")) {
                ix.rational = false;
                ix.min_poly = poly(kv.at("minpoly"), lineno);
            } else {
                throw RgParseError("intersect needs point= or minpoly=", lineno);
            }
            G.intersections.push_back(std::move(ix));
        } else if (head == "stratum") {
            auto kv = attrs_of(toks, 1, lineno);
            Stratum s;
            std::istringstream ids(need(kv, "I", lineno));
            std::string piece;
            while (std::getline(ids, piece, ',')) s.divisors.push_back(piece);
            std::sort(s.divisors.begin(), s.divisors.end());
            s.class_name = need(kv, "class", lineno);
            s.N_I = std::stol(need(kv, "cover", lineno));
            s.chart = need(kv, "chart", lineno);
            if (kv.count("unit")) {
                s.unit = poly(kv.at("unit"), lineno);
                s.has_unit = true;
            }
            G.strata.push_back(std::move(s));
        } else if (head == "chart") {
            auto kv = attrs_of(toks, 1, lineno);
            ChartRecord c;
            c.id = need(kv, "id", lineno);
            std::vector<Polynomial> images;
            std::istringstream ms(need(kv, "map", lineno));
            std::string piece;
            while (std::getline(ms, piece, ';')) images.push_back(poly(piece, lineno));
            if (static_cast<int>(images.size()) != G.ambient_dim)
                throw RgParseError("map arity mismatch", lineno);
            c.map_to_root = Substitution(std::move(images));
            if (kv.count("divisors")) {
                std::istringstream ds(kv.at("divisors"));
                while (std::getline(ds, piece, ',')) {
                    auto colon = piece.find(':');
                    if (colon == std::string::npos)
                        throw RgParseError("divisors entries are id:coord", lineno);
                    int coord = std::stoi(piece.substr(colon + 1)) - 1;
                    if (coord < 0 || coord >= G.ambient_dim)
                        throw RgParseError("coordinate index out of range", lineno);
                    c.coord_divisors.emplace_back(piece.substr(0, colon), coord);
                }
            }
            G.charts.push_back(std::move(c));
        } else if (head == "transform") {
            auto kv = attrs_of(toks, 1, lineno);
            std::string cid = need(kv, "chart", lineno);
            bool found = false;
            for (auto& c : G.charts)
                if (c.id == cid) {
                    c.transform = poly(need(kv, "f", lineno), lineno);
                    c.has_transform = true;
                    found = true;
                }
            if (!found) throw RgParseError("transform references unknown chart " + cid, lineno);
        } else if (head == "stricteq") {
            auto kv = attrs_of(toks, 1, lineno);
            std::string cid = need(kv, "chart", lineno);
            bool found = false;
            for (auto& c : G.charts)
                if (c.id == cid) {
                    c.strict_eqs.emplace_back(need(kv, "divisor", lineno),
                                              poly(need(kv, "eq", lineno), lineno));
                    found = true;
                }
            if (!found) throw RgParseError("stricteq references unknown chart " + cid, lineno);
        } else {
            throw RgParseError("unknown line type " + head, lineno);
        }
    }
    if (G.ambient_dim == 0) throw RgParseError("missing ambient line", 0);
    for (const auto& ix : G.intersections)
        if (!G.find_divisor(ix.a) || !G.find_divisor(ix.b))
            throw RgParseError("intersection references unknown divisor", 0);
    for (const auto& s : G.strata)
        for (const auto& id : s.divisors)
            if (!G.find_divisor(id)) throw RgParseError("stratum references unknown divisor", 0);
    G.refresh_id();
    return G;
}

}  // namespace hijac
