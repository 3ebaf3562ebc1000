#include "sombor/families.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <sstream>

namespace sombor {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& msg) {
    throw Error(ErrorKind::InvalidParameter, msg);
}

void check_cycle_chain(std::uint32_t q, std::uint32_t h, std::uint32_t k, const char* family) {
    if (q < 3) invalid(std::string(family) + ": q must be >= 3");
    if (k < 1) invalid(std::string(family) + ": k must be >= 1");
    if (h < 1 || h > q / 2) {
        invalid(std::string(family) + ": h must lie in 1.." + std::to_string(q / 2));
    }
}

Integer pow2(std::uint32_t e) {
    return Integer(1) << e;
}

RadicalSum sqrt_term(const Integer& coefficient, std::uint64_t radicand) {
    return RadicalSum::term(Rational(coefficient), radicand);
}

}  // namespace

// ---------------------------------------------------------------------------
// Spec plumbing

std::string_view to_string(CactusName name) noexcept {
    switch (name) {
        case CactusName::T: return "Tn";
        case CactusName::Q: return "Qn";
        case CactusName::O: return "On";
        case CactusName::Oh: return "Ohn";
        case CactusName::L: return "Ln";
        case CactusName::M: return "Mn";
    }
    return "?";
}

SpiroSpec spiro_equivalent(const CactusSpec& spec) {
    switch (spec.name) {
        case CactusName::T: return {3, 1, spec.n};
        case CactusName::Q: return {4, 2, spec.n};
        case CactusName::O: return {4, 1, spec.n};
        case CactusName::Oh: return {6, 1, spec.n};
        case CactusName::L: return {6, 3, spec.n};
        case CactusName::M: return {6, 2, spec.n};
    }
    invalid("unknown cactus alias");
}

void validate(const FamilySpec& spec) {
    std::visit(Overloaded{
                   [](const QSpec& s) {
                       if (s.m < 1 || s.n < 1) invalid("q: m and n must be >= 1");
                   },
                   [](const SpiroSpec& s) { check_cycle_chain(s.q, s.h, s.k, "spiro"); },
                   [](const PolySpec& s) { check_cycle_chain(s.q, s.h, s.k, "poly"); },
                   [](const CactusSpec& s) {
                       if (s.n < 1) invalid("cactus: n must be >= 1");
                   },
                   [](const TriangulaneSpec& s) {
                       if (s.k < 1) invalid("triangulane: k must be >= 1");
                   },
                   [](const DendrimerSpec&) {},
               },
               spec);
}

std::string to_string(const FamilySpec& spec) {
    std::ostringstream out;
    std::visit(Overloaded{
                   [&](const QSpec& s) { out << "q:m=" << s.m << ",n=" << s.n; },
                   [&](const SpiroSpec& s) { out << "spiro:q=" << s.q << ",h=" << s.h << ",k=" << s.k; },
                   [&](const PolySpec& s) { out << "poly:q=" << s.q << ",h=" << s.h << ",k=" << s.k; },
                   [&](const CactusSpec& s) { out << "cactus:name=" << to_string(s.name) << ",n=" << s.n; },
                   [&](const TriangulaneSpec& s) { out << "triangulane:k=" << s.k; },
                   [&](const DendrimerSpec& s) { out << "d3:n=" << s.n; },
               },
               spec);
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error(ErrorKind::Parse, "family spec `" + std::string(text) + "`: " + why);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

CactusName parse_cactus_name(std::string_view text, std::string_view name) {
    static const std::map<std::string_view, CactusName> names{
        {"T", CactusName::T},   {"Tn", CactusName::T},   {"Q", CactusName::Q},  {"Qn", CactusName::Q},
        {"O", CactusName::O},   {"On", CactusName::O},   {"Oh", CactusName::Oh}, {"Ohn", CactusName::Oh},
        {"L", CactusName::L},   {"Ln", CactusName::L},   {"M", CactusName::M},  {"Mn", CactusName::M},
    };
    auto it = names.find(name);
    if (it == names.end()) parse_fail(text, "unknown cactus name `" + std::string(name) + "`");
    return it->second;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    const auto body = trim(text);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) parse_fail(text, "expected `<family>:<key>=<value>,...`");
    const auto family = body.substr(0, colon);

    std::map<std::string, std::string, std::less<>> fields;
    auto rest = body.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) parse_fail(text, "expected key=value, got `" + std::string(item) + "`");
        auto [it, inserted] = fields.emplace(std::string(trim(item.substr(0, eq))),
                                             std::string(trim(item.substr(eq + 1))));
        if (!inserted) parse_fail(text, "duplicate key `" + it->first + "`");
    }

    auto take = [&](std::string_view key) -> std::string {
        auto it = fields.find(key);
        if (it == fields.end()) parse_fail(text, "missing key `" + std::string(key) + "`");
        auto value = it->second;
        fields.erase(it);
        return value;
    };
    auto take_uint = [&](std::string_view key) -> std::uint32_t {
        const auto value = take(key);
        std::uint32_t out = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
            parse_fail(text, "key `" + std::string(key) + "` needs a non-negative integer");
        }
        return out;
    };

    FamilySpec spec;
    if (family == "q") {
        const auto m = take_uint("m");
        spec = QSpec{m, take_uint("n")};
    } else if (family == "spiro" || family == "poly") {
        const auto q = take_uint("q");
        const auto h = take_uint("h");
        const auto k = take_uint("k");
        if (family == "spiro") {
            spec = SpiroSpec{q, h, k};
        } else {
            spec = PolySpec{q, h, k};
        }
    } else if (family == "cactus") {
        const auto name = parse_cactus_name(text, take("name"));
        spec = CactusSpec{name, take_uint("n")};
    } else if (family == "triangulane") {
        spec = TriangulaneSpec{take_uint("k")};
    } else if (family == "d3") {
        spec = DendrimerSpec{take_uint("n")};
    } else {
        parse_fail(text, "unknown family `" + std::string(family) + "`");
    }
    if (!fields.empty()) parse_fail(text, "unexpected key `" + fields.begin()->first + "`");
    validate(spec);
    return spec;
}

bool uses_adjacent_contact_formula(const FamilySpec& spec) {
    return std::visit(Overloaded{
                          [](const SpiroSpec& s) { return s.h == 1 && s.k >= 2; },
                          [](const PolySpec& s) { return s.h == 1 && s.k >= 2; },
                          [](const CactusSpec& s) {
                              const auto sp = spiro_equivalent(s);
                              return sp.h == 1 && sp.k >= 2;
                          },
                          [](const auto&) { return false; },
                      },
                      spec);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<RootedUnit> cycle_units(std::uint32_t q, std::uint32_t h, std::uint32_t k) {
    std::vector<RootedUnit> units;
    units.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) units.emplace_back(cycle_graph(q), 0, h);
    return units;
}

Assembly generate_q(const QSpec& s) {
    std::vector<Graph> parts{complete_graph(s.m)};
    for (std::uint32_t i = 0; i < s.m; ++i) parts.push_back(complete_graph(s.n));
    auto u = disjoint_union(parts);
    Assembly out;
    out.graph = std::move(u.graph);
    out.unit_maps = std::move(u.maps);
    for (VertexId i = 0; i < s.m; ++i) {
        auto r = identify(out.graph, out.unit_maps[0](i), out.unit_maps[i + 1](0));
        out.graph = std::move(r.graph);
        for (auto& m : out.unit_maps) m = m.then(r.map);
    }
    for (VertexId i = 0; i < s.m; ++i) out.contact_ids.push_back(out.unit_maps[0](i));
    return out;
}

/// G_1 is a triangle rooted at a vertex; G_k = circuit(G_{k-1}, G_{k-1}, K_1)
/// rooted at the K_1 position.
RootedUnit triangulane_branch(std::uint32_t k) {
    RootedUnit g(cycle_graph(3), 0);
    for (std::uint32_t level = 2; level <= k; ++level) {
        const std::vector<RootedUnit> parts{g, g, RootedUnit(complete_graph(1), 0)};
        auto a = circuit(parts);
        const auto root = a.unit_maps[2](0);
        g = RootedUnit(std::move(a.graph), root);
    }
    return g;
}

Assembly generate_triangulane(const TriangulaneSpec& s) {
    const auto branch = triangulane_branch(s.k);
    const std::vector<RootedUnit> parts{branch, branch, branch};
    return circuit(parts);
}

// Hexagon 0..5 with pendant leaves 6 (at 0) and 7 (at 3).
constexpr VertexId kLinkerIn = 6;
constexpr VertexId kLinkerOut = 7;

Graph dendrimer_linker() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 7}};
    return Graph::from_edges(8, edges);
}

/// G_1 = hexagon plus a pendant leaf (the root); G_k = bouquet(G_{k-1},
/// G_{k-1}, F) at roots, re-rooted at F's free leaf.
RootedUnit dendrimer_branch(std::uint32_t k) {
    const std::vector<Edge> g1{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}};
    RootedUnit g(Graph::from_edges(7, g1), 6);
    const RootedUnit linker(dendrimer_linker(), kLinkerIn);
    for (std::uint32_t level = 2; level <= k; ++level) {
        const std::vector<RootedUnit> parts{g, g, linker};
        auto a = bouquet(parts);
        const auto root = a.unit_maps[2](kLinkerOut);
        g = RootedUnit(std::move(a.graph), root);
    }
    return g;
}

Assembly generate_dendrimer(const DendrimerSpec& s) {
    const auto branch = dendrimer_branch(s.n + 1);
    const std::vector<RootedUnit> parts{branch, branch, branch};
    return bouquet(parts);
}

}  // namespace

Assembly generate(const FamilySpec& spec) {
    validate(spec);
    return std::visit(Overloaded{
                          [](const QSpec& s) { return generate_q(s); },
                          [](const SpiroSpec& s) { return chain(cycle_units(s.q, s.h, s.k)); },
                          [](const PolySpec& s) { return link(cycle_units(s.q, s.h, s.k)); },
                          [](const CactusSpec& s) { return generate(spiro_equivalent(s)); },
                          [](const TriangulaneSpec& s) { return generate_triangulane(s); },
                          [](const DendrimerSpec& s) { return generate_dendrimer(s); },
                      },
                      spec);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

RadicalSum q_closed_form(const QSpec& s) {
    const Integer m = s.m;
    const Integer n = s.n;
    const Rational sqrt2_coef =
        Rational(m) * (Rational((m + n - 2) * (m - 1), 2) + Rational((n - 1) * (n - 1)) * (Rational(n, 2) - 1));
    auto out = RadicalSum::term(sqrt2_coef, 2);
    const Integer mixed = m * (n - 1);
    if (mixed != 0) {
        const Integer hub = m + n - 2;
        out += radical_of((hub * hub + (n - 1) * (n - 1)).convert_to<std::int64_t>()) * Rational(mixed);
    }
    return out;
}

RadicalSum spiro_closed_form(const SpiroSpec& s) {
    const Integer q = s.q;
    const Integer k = s.k;
    if (s.h == 1 && s.k >= 2) {
        return sqrt_term(2 * q * k - 2 * k - 4, 2) + sqrt_term(4 * k, 5);
    }
    return sqrt_term(2 * q * k - 8 * k + 8, 2) + sqrt_term(8 * k - 8, 5);
}

RadicalSum poly_closed_form(const PolySpec& s) {
    const Integer q = s.q;
    const Integer k = s.k;
    if (s.h == 1 && s.k >= 2) {
        return sqrt_term(2 * q * k - 5, 2) + sqrt_term(2 * k, 13);
    }
    return sqrt_term(2 * q * k - 5 * k + 5, 2) + sqrt_term(4 * k - 4, 13);
}

/// Chain values for n >= 2; a single unit is the bare cycle.
RadicalSum cactus_closed_form(const CactusSpec& s) {
    const Integer n = s.n;
    if (s.n == 1) return sqrt_term(2 * Integer(spiro_equivalent(s).q), 2);
    switch (s.name) {
        case CactusName::T: return sqrt_term(4 * n - 4, 2) + sqrt_term(4 * n, 5);
        case CactusName::Q: return sqrt_term(8, 2) + sqrt_term(8 * n - 8, 5);
        case CactusName::O: return sqrt_term(6 * n - 4, 2) + sqrt_term(4 * n, 5);
        case CactusName::Oh: return sqrt_term(10 * n - 4, 2) + sqrt_term(4 * n, 5);
        case CactusName::L: return sqrt_term(4 * n + 8, 2) + sqrt_term(8 * n - 8, 5);
        case CactusName::M: return sqrt_term(4 * n + 8, 2) + sqrt_term(8 * n - 8, 5);
    }
    invalid("unknown cactus alias");
}

RadicalSum triangulane_closed_form(const TriangulaneSpec& s) {
    const Integer half = pow2(s.k - 1);
    return sqrt_term(36 * (half - 1) + 6 * half + 12, 2) + sqrt_term(6 * pow2(s.k), 5);
}

RadicalSum dendrimer_closed_form(const DendrimerSpec& s) {
    const Integer p = pow2(s.n);
    return sqrt_term(63 * p - 30, 2) + sqrt_term(18 * p - 12, 13);
}

}  // namespace

RadicalSum closed_form(const FamilySpec& spec) {
    validate(spec);
    return std::visit(Overloaded{
                          [](const QSpec& s) { return q_closed_form(s); },
                          [](const SpiroSpec& s) { return spiro_closed_form(s); },
                          [](const PolySpec& s) { return poly_closed_form(s); },
                          [](const CactusSpec& s) { return cactus_closed_form(s); },
                          [](const TriangulaneSpec& s) { return triangulane_closed_form(s); },
                          [](const DendrimerSpec& s) { return dendrimer_closed_form(s); },
                      },
                      spec);
}

// ---------------------------------------------------------------------------
// Census predictions

namespace {

Census q_census(const QSpec& s) {
    const std::uint64_t m = s.m;
    const std::uint64_t n = s.n;
    const auto hub = static_cast<std::uint32_t>(m + n - 2);
    const auto leaf = static_cast<std::uint32_t>(n - 1);
    Census c;
    c.add(DegreePair::of(hub, hub), m * (m - 1) / 2);
    c.add(DegreePair::of(hub, leaf), m * (n - 1));
    c.add(DegreePair::of(leaf, leaf), m * (n - 1) * (n - 2) / 2);
    return c;
}

Census cycle_chain_census(std::uint64_t q, std::uint32_t h, std::uint64_t k, std::uint32_t contact_degree,
                          bool linked) {
    Census c;
    const auto d = contact_degree;
    if (h == 1 && k >= 2) {
        c.add(DegreePair::of(d, d), linked ? 2 * k - 3 : k - 2);
        c.add(DegreePair::of(d, 2), 2 * k);
        c.add(DegreePair::of(2, 2), q * k - 3 * k + 2);
    } else {
        if (linked) c.add(DegreePair::of(d, d), k - 1);
        c.add(DegreePair::of(d, 2), 4 * (k - 1));
        c.add(DegreePair::of(2, 2), q * k - 4 * (k - 1));
    }
    return c;
}

Census triangulane_census(const TriangulaneSpec& s) {
    const std::uint64_t half = std::uint64_t{1} << (s.k - 1);
    Census c;
    c.add(DegreePair::of(4, 4), 3 + 9 * (half - 1));
    c.add(DegreePair::of(4, 2), 3 * 2 * half);
    c.add(DegreePair::of(2, 2), 3 * half);
    return c;
}

Census dendrimer_census(const DendrimerSpec& s) {
    const std::uint64_t p = std::uint64_t{1} << s.n;
    Census c;
    c.add(DegreePair::of(3, 3), 9 * p - 6);
    c.add(DegreePair::of(3, 2), 18 * p - 12);
    c.add(DegreePair::of(2, 2), 18 * p - 6);
    return c;
}

}  // namespace

Census census_prediction(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        Overloaded{
            [](const QSpec& s) { return q_census(s); },
            [](const SpiroSpec& s) { return cycle_chain_census(s.q, s.h, s.k, 4, false); },
            [](const PolySpec& s) { return cycle_chain_census(s.q, s.h, s.k, 3, true); },
            [](const CactusSpec& s) { return census_prediction(spiro_equivalent(s)); },
            [](const TriangulaneSpec& s) { return triangulane_census(s); },
            [](const DendrimerSpec& s) { return dendrimer_census(s); },
        },
        spec);
}

// ---------------------------------------------------------------------------
// Grids

std::vector<FamilySpec> default_family_grid() {
    std::vector<FamilySpec> grid;
    for (std::uint32_t m = 1; m <= 8; ++m) {
        for (std::uint32_t n = 2; n <= 8; ++n) grid.emplace_back(QSpec{m, n});
    }
    for (std::uint32_t q = 3; q <= 10; ++q) {
        for (std::uint32_t h = 1; h <= q / 2; ++h) {
            for (std::uint32_t k = 1; k <= 12; ++k) grid.emplace_back(SpiroSpec{q, h, k});
        }
    }
    for (std::uint32_t q = 3; q <= 10; ++q) {
        for (std::uint32_t h = 1; h <= q / 2; ++h) {
            for (std::uint32_t k = 1; k <= 12; ++k) grid.emplace_back(PolySpec{q, h, k});
        }
    }
    for (auto name : {CactusName::T, CactusName::Q, CactusName::O, CactusName::Oh, CactusName::L, CactusName::M}) {
        for (std::uint32_t n = 2; n <= 12; ++n) grid.emplace_back(CactusSpec{name, n});
    }
    for (std::uint32_t k = 1; k <= 6; ++k) grid.emplace_back(TriangulaneSpec{k});
    for (std::uint32_t n = 0; n <= 5; ++n) grid.emplace_back(DendrimerSpec{n});
    return grid;
}

std::vector<FamilySpec> read_family_grid(std::istream& in) {
    std::vector<FamilySpec> grid;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        const auto body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        grid.push_back(parse_family_spec(body));
    }
    return grid;
}

}  // namespace sombor
