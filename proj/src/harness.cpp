#include "sombor/harness.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace sombor {

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::ExactPass: return "exact-pass";
        case Status::NumericPass: return "numeric-pass";
        case Status::Fail: return "fail";
        case Status::NotApplicable: return "not-applicable";
        case Status::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Report

void VerificationReport::append(const VerificationReport& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [s](const auto& r) { return r.status == s; }));
}

void VerificationReport::write_json_lines(std::ostream& out) const {
    for (const auto& r : records_) {
        nlohmann::ordered_json line;
        line["case"] = r.case_id;
        line["check"] = r.check;
        line["status"] = to_string(r.status);
        line["lhs"] = terms_to_json(r.lhs);
        line["rhs"] = terms_to_json(r.rhs);
        line["gap"] = r.gap;
        if (!r.detail.empty()) line["detail"] = r.detail;
        out << line.dump() << '\n';
    }
}

std::string VerificationReport::json_lines() const {
    std::ostringstream out;
    write_json_lines(out);
    return out.str();
}

void VerificationReport::write_summary(std::ostream& out) const {
    out << records_.size() << " records:";
    for (auto s : {Status::ExactPass, Status::NumericPass, Status::Fail, Status::NotApplicable,
                   Status::Inconclusive}) {
        out << ' ' << to_string(s) << '=' << count(s);
    }
    out << '\n';
    for (const auto& r : records_) {
        if (r.status != Status::Fail) continue;
        out << "FAIL " << r.case_id << " [" << r.check << "] lhs=" << r.lhs.to_string()
            << " rhs=" << r.rhs.to_string() << " gap=" << r.gap;
        if (!r.detail.empty()) out << " (" << r.detail << ')';
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Families

VerificationReport verify_families(std::span<const FamilySpec> grid) {
    VerificationReport report;
    for (const auto& spec : grid) {
        const auto name = to_string(spec);
        const auto assembly = generate(spec);

        const auto so = sombor_index(assembly.graph);
        const auto expected = closed_form(spec);
        VerificationRecord value{name, "closed-form", so == expected ? Status::ExactPass : Status::Fail,
                                 so, expected, (so - expected).to_double(), ""};
        report.add(std::move(value));

        const auto census = edge_census(assembly.graph);
        const auto predicted = census_prediction(spec);
        VerificationRecord counts{name, "census", census == predicted ? Status::ExactPass : Status::Fail,
                                  {}, {}, 0.0, census.to_string() + " vs " + predicted.to_string()};
        report.add(std::move(counts));

        VerificationRecord connected{name, "connected",
                                     is_connected(assembly.graph) ? Status::ExactPass : Status::Fail,
                                     {}, {}, 0.0, ""};
        report.add(std::move(connected));

        const bool single_cycle_h1 =
            (std::holds_alternative<SpiroSpec>(spec) && std::get<SpiroSpec>(spec).h == 1 &&
             std::get<SpiroSpec>(spec).k == 1) ||
            (std::holds_alternative<PolySpec>(spec) && std::get<PolySpec>(spec).h == 1 &&
             std::get<PolySpec>(spec).k == 1);
        if (single_cycle_h1) {
            report.add({name, "adjacent-contact-formula", Status::NotApplicable, {}, {}, 0.0,
                        "single cycle; value checked against the general-h formula"});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Random polymers

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = 0;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + draw % range;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

bool needs_two_contacts(Operator op) {
    return op == Operator::Link || op == Operator::Chain;
}

std::pair<std::string, Graph> draw_primitive(SeededRng& rng, bool allow_k1) {
    // 0-5: C_3..C_8, 6-9: K_2..K_5, 10-13: P_2..P_5, 14: K_1
    const auto pick = rng.uniform(0, allow_k1 ? 14 : 13);
    if (pick < 6) {
        const auto q = pick + 3;
        return {"C" + std::to_string(q), cycle_graph(q)};
    }
    if (pick < 10) {
        const auto n = pick - 4;
        return {"K" + std::to_string(n), complete_graph(n)};
    }
    if (pick < 14) {
        const auto n = pick - 8;
        return {"P" + std::to_string(n), path_graph(n)};
    }
    return {"K1", complete_graph(1)};
}

// Circuits whose units are all K_1 are the equality case of the 2k*sqrt(2)
// bound; independent draws would almost never produce one.
constexpr std::uint64_t kAllK1CircuitOdds = 8;

}  // namespace

RandomPolymer random_polymer(const RandomPolymerSpec& spec, std::uint64_t instance) {
    const auto op_stream = static_cast<std::uint64_t>(spec.op);
    SeededRng rng(mix_seed(spec.seed, (op_stream << 40) ^ instance));

    const auto min_units = std::max<std::uint32_t>(spec.min_units, spec.op == Operator::Circuit ? 3 : 1);
    const auto max_units = std::max(min_units, spec.max_units);
    const auto count = rng.uniform(min_units, max_units);
    const bool two_contacts = needs_two_contacts(spec.op);
    const bool all_k1 = spec.op == Operator::Circuit && rng.uniform(0, kAllK1CircuitOdds - 1) == 0;

    RandomPolymer out;
    out.op = spec.op;
    std::ostringstream desc;
    desc << to_string(spec.op) << '#' << instance << " seed=" << spec.seed << " [";
    for (std::uint64_t i = 0; i < count; ++i) {
        auto [label, graph] = all_k1 ? std::pair<std::string, Graph>{"K1", complete_graph(1)}
                                     : draw_primitive(rng, !two_contacts);
        const auto n = graph.vertex_count();
        const auto x = static_cast<VertexId>(rng.uniform(0, n - 1));
        std::optional<VertexId> y;
        if (two_contacts) {
            auto other = static_cast<VertexId>(rng.uniform(0, n - 2));
            y = other >= x ? other + 1 : other;
        }
        if (i > 0) desc << ", ";
        desc << label << "(x=" << x;
        if (y) desc << ",y=" << *y;
        desc << ')';
        out.units.push_back({label, RootedUnit(std::move(graph), x, y)});
    }
    desc << ']';
    out.descriptor = desc.str();

    std::vector<RootedUnit> units;
    for (const auto& u : out.units) units.push_back(u.unit);
    switch (spec.op) {
        case Operator::Link: out.assembly = link(units); break;
        case Operator::Chain: out.assembly = chain(units); break;
        case Operator::Circuit: out.assembly = circuit(units); break;
        case Operator::Bouquet: out.assembly = bouquet(units); break;
    }

    for (const auto& u : units) out.monomers.push_back(u.graph());
    if (spec.op == Operator::Link) {
        for (std::size_t i = 0; i + 1 < units.size(); ++i) out.monomers.push_back(complete_graph(2));
    } else if (spec.op == Operator::Circuit) {
        out.monomers.push_back(cycle_graph(units.size()));
    }
    return out;
}

namespace {

Status strict_status(const StrictCheck& c) {
    if (!c.applicable) return Status::NotApplicable;
    if (c.holds()) return Status::NumericPass;
    if (c.ordering == Ordering::Inconclusive) return Status::Inconclusive;
    return Status::Fail;
}

VerificationRecord from_strict(const std::string& case_id, std::string check, const StrictCheck& c,
                               std::string detail = "") {
    return {case_id, std::move(check), strict_status(c), c.lhs, c.rhs, c.gap, std::move(detail)};
}

VerificationRecord edge_deletion_record(const std::string& case_id, const Graph& g) {
    std::optional<StrictCheck> tightest;
    Edge tightest_edge{};
    Status status = Status::NumericPass;
    for (const auto& [u, v] : g.edges()) {
        auto c = deletion_bound(g, u, v);
        const auto s = strict_status(c);
        if (s == Status::Fail) {
            status = Status::Fail;
        } else if (s == Status::Inconclusive && status != Status::Fail) {
            status = Status::Inconclusive;
        }
        // Keep the edge with the least slack (largest lhs - rhs).
        if (!tightest || c.gap > tightest->gap) {
            tightest = std::move(c);
            tightest_edge = {u, v};
        }
    }
    if (!tightest) return {case_id, "edge-deletion", Status::NotApplicable, {}, {}, 0.0, "no edges"};
    std::ostringstream detail;
    detail << "edges=" << g.edge_count() << " tightest=" << tightest_edge.first << '-' << tightest_edge.second;
    return {case_id, "edge-deletion", status, tightest->lhs, tightest->rhs, tightest->gap, detail.str()};
}

/// A strict operator bound needs two units, and for bouquets two units with
/// edges: a K_1 glued onto the hub leaves the graph unchanged.
bool bound_applicable(const RandomPolymer& p, std::span<const RootedUnit> units) {
    if (units.size() < 2) return false;
    if (p.op != Operator::Bouquet) return true;
    return std::count_if(units.begin(), units.end(), [](const auto& u) { return u.graph().edge_count() > 0; }) >= 2;
}

template <class BoundFn>
void add_operator_bound(VerificationReport& report, const std::string& case_id, const std::string& name,
                        const RandomPolymer& p, std::span<const RootedUnit> units, BoundFn bound) {
    const auto so = sombor_index(p.assembly.graph);
    const bool applicable = bound_applicable(p, units);
    for (auto convention : {DegreeConvention::Unit, DegreeConvention::Assembly}) {
        const auto label = name + "[" + std::string(to_string(convention)) + "]";
        if (!applicable) {
            report.add({case_id, label, Status::NotApplicable, so, {}, 0.0, ""});
            continue;
        }
        report.add(from_strict(case_id, label, check_strict(so, StrictCheck::Relation::Greater, bound(convention))));
    }
}

}  // namespace

VerificationReport verify_polymer(const RandomPolymer& p) {
    const auto op = p.op;
    VerificationReport report;
    const auto& id = p.descriptor;
    const auto& g = p.assembly.graph;
    std::vector<RootedUnit> units;
    for (const auto& u : p.units) units.push_back(u.unit);

    report.add(from_strict(id, "monomer-sum", monomer_sum_bound(g, p.monomers)));
    report.add(edge_deletion_record(id, g));

    switch (op) {
        case Operator::Link:
            add_operator_bound(report, id, "link-bound", p, units,
                               [&](auto c) { return link_lower_bound(p.assembly, units, c); });
            break;
        case Operator::Chain:
            add_operator_bound(report, id, "chain-bound-i", p, units,
                               [&](auto c) { return chain_lower_bound_i(p.assembly, units, c); });
            add_operator_bound(report, id, "chain-bound-ii", p, units,
                               [&](auto c) { return chain_lower_bound_ii(p.assembly, units, c); });
            break;
        case Operator::Bouquet:
            add_operator_bound(report, id, "bouquet-bound", p, units,
                               [&](auto c) { return bouquet_lower_bound(p.assembly, units, c); });
            break;
        case Operator::Circuit: {
            add_operator_bound(report, id, "circuit-deg-bound", p, units,
                               [&](auto c) { return circuit_lower_bound_deg(p.assembly, units, c); });
            const auto so = sombor_index(g);
            const auto bound = circuit_lower_bound_2k(units);
            const bool all_k1 = std::all_of(units.begin(), units.end(),
                                            [](const auto& u) { return u.graph().vertex_count() == 1; });
            Status status = Status::Fail;
            const auto order = cmp_numeric(so, bound);
            if (all_k1) {
                status = so == bound ? Status::ExactPass : Status::Fail;
            } else if (order == Ordering::Greater) {
                status = Status::NumericPass;
            } else if (order == Ordering::Inconclusive) {
                status = Status::Inconclusive;
            }
            report.add({id, "circuit-2k-bound", status, so, bound, (so - bound).to_double(),
                        all_k1 ? "equality case" : "strict case"});
            break;
        }
    }
    return report;
}

VerificationReport verify_bounds(const RandomPolymerSpec& spec, std::uint64_t instances) {
    VerificationReport report;
    for (std::uint64_t i = 0; i < instances; ++i) {
        report.append(verify_polymer(random_polymer(spec, i)));
    }
    return report;
}

bool is_universal_bound_check(const std::string& check) {
    return check == "monomer-sum" || check == "edge-deletion" || check == "circuit-2k-bound";
}

}  // namespace sombor
