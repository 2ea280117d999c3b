#ifndef HIJAC_RESOLVE_HPP
#define HIJAC_RESOLVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hijac/polynomial.hpp"
#include "hijac/report.hpp"

namespace hijac {

enum class DivisorKind { Exceptional, Strict };

struct DivisorRecord {
    std::string id;
    long N = 1;   // multiplicity of the pulled-back function along the divisor
    long nu = 1;  // 1 + discrepancy
    DivisorKind kind = DivisorKind::Strict;
};

/**
 * A chart of the resolved surface. Coordinates are always named y1, y2; the
 * map gives the root coordinates as polynomials in the chart coordinates and
 * is a composition of point blowups. coord_divisors lists the divisors whose
 * local equation on this chart is a coordinate; strict_eqs the tracked strict
 * transforms whose local equation is a genuine polynomial.
 */
struct ChartRecord {
    std::string id;
    Substitution map_to_root;
    bool has_transform = false;
    Polynomial transform;  // pullback of f to this chart, when known
    std::vector<std::pair<std::string, int>> coord_divisors;
    std::vector<std::pair<std::string, Polynomial>> strict_eqs;
    std::vector<std::array<Rat, 2>> blown_centers;
};

struct Intersection {
    std::string a, b;  // divisor ids, a < b
    std::string chart;
    bool rational = true;
    std::vector<Rat> point;  // chart coordinates, ambient_dim entries
    // for a non-rational crossing: the minimal polynomial of the free
    // coordinate along the chart axis, as a chart-coordinate polynomial
    Polynomial min_poly;
};

struct Stratum {
    std::vector<std::string> divisors;  // sorted ids
    long N_I = 1;                       // gcd of the member multiplicities
    std::string class_name;
    std::string chart;
    bool has_unit = false;
    Polynomial unit;
};

struct ResolutionGraph {
    int ambient_dim = 2;
    std::string graph_id;
    std::vector<DivisorRecord> divisors;
    std::vector<Intersection> intersections;
    std::vector<Stratum> strata;
    std::vector<ChartRecord> charts;

    const DivisorRecord* find_divisor(const std::string& id) const;
    const ChartRecord* find_chart(const std::string& id) const;
    const Stratum* find_stratum(const std::vector<std::string>& ids) const;
    bool is_m_separating(long m) const;
    // recompute graph_id from current content (FNV-1a over the serialization)
    void refresh_id();
};

// Embedded resolution of the germ of {f = 0} at the origin by iterated point
// blowups; f in two variables with f(0) = 0. Strata units are populated.
// Throws ResolveError when a needed center or crossing is not Q-rational.
ResolutionGraph resolve_curve(const Polynomial& f);

struct ResolveError : std::runtime_error {
    explicit ResolveError(const std::string& msg) : std::runtime_error(msg) {}
};

// Blow up intersection points with N_i + N_j <= m until the graph is
// m-separating. Requires chart transform data (resolve-produced graphs).
ResolutionGraph m_separate(const ResolutionGraph& G, long m);

// Recompute every divisor multiplicity from the chart maps and compare.
bool verify_pullback_orders(const Polynomial& f, const ResolutionGraph& G);

// Populate the Denef-Loeser covering units of all strata from chart data.
void covering_units(ResolutionGraph& G);

// Structural and unit-level comparison of two resolutions built by the same
// blowup sequence. Unit agreement is required on strata with a nontrivial
// covering (N_I >= 2); N_I = 1 coverings are trivially isomorphic.
Report compare_coverings(const ResolutionGraph& Gf, const ResolutionGraph& Gg);

}  // namespace hijac

#endif
