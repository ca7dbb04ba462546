#include "izeta/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace izeta {

using ordered_json = nlohmann::ordered_json;

const Component* DualGraph::find(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const Component& DualGraph::at(const std::string& id) const {
    const Component* c = find(id);
    if (!c) throw InputError("unknown component id '" + id + "'");
    return *c;
}

std::vector<const Component*> DualGraph::neighbors(const std::string& id) const {
    std::vector<const Component*> out;
    for (const auto& e : edges) {
        if (e.a == id) out.push_back(&at(e.b));
        if (e.b == id) out.push_back(&at(e.a));
    }
    return out;
}

int DualGraph::edge_endpoint_count(const std::string& id) const {
    int n = 0;
    for (const auto& e : edges) {
        if (e.a == id) ++n;
        if (e.b == id) ++n;
    }
    return n;
}

std::vector<std::string> DualGraph::exceptional_ids() const {
    std::vector<std::string> out;
    for (const auto& c : components)
        if (c.kind == ComponentKind::Exceptional) out.push_back(c.id);
    return out;
}

long long chi_open(const DualGraph& g, const std::string& id) {
    const Component& c = g.at(id);
    if (c.kind != ComponentKind::Exceptional)
        throw InputError("chi of open stratum is only defined for exceptional components, got '" +
                         id + "'");
    return 2 - g.edge_endpoint_count(id);
}

std::map<std::string, long long> derive_generic_counts(const DualGraph& g) {
    std::map<std::string, long long> out;
    for (const auto& c : g.components) {
        if (c.kind != ComponentKind::Exceptional) continue;
        if (!c.self_intersection)
            throw InputError("component '" + c.id +
                             "' has no self_intersection; cannot derive generic count");
        long long kappa = -*c.self_intersection;
        long long n = kappa * c.N;
        for (const Component* nb : g.neighbors(c.id)) n -= nb->N;
        if (n < 0)
            throw InputError("derived generic count is negative at '" + c.id +
                             "': invalid graph data");
        out[c.id] = n;
    }
    return out;
}

DualGraph with_generic_counts(const DualGraph& g) {
    DualGraph out = g;
    bool any_missing = false;
    for (const auto& c : out.components)
        if (c.kind == ComponentKind::Exceptional && !c.n_generic) any_missing = true;
    if (!any_missing) return out;
    auto derived = derive_generic_counts(g);
    for (auto& c : out.components) {
        if (c.kind != ComponentKind::Exceptional) continue;
        if (!c.n_generic) c.n_generic = derived.at(c.id);
    }
    return out;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.pass ? "pass" : "FAIL") << "  " << c.name
            << (c.details.empty() ? "" : ": " + c.details) << "\n";
    return out.str();
}

ValidationReport validate(const DualGraph& g) {
    ValidationReport rep;
    auto check = [&rep](const std::string& name, bool ok, const std::string& details) {
        rep.checks.push_back({name, ok, details});
    };

    // Structural invariants.
    {
        std::ostringstream bad;
        std::set<std::string> seen;
        for (const auto& c : g.components) {
            if (!seen.insert(c.id).second) bad << "duplicate id " << c.id << "; ";
            if (c.N < 1) bad << c.id << ": N < 1; ";
            if (c.kind == ComponentKind::Weak && c.nu != 1) bad << c.id << ": weak with nu != 1; ";
            if (c.kind == ComponentKind::Exceptional) {
                if (c.nu < 2) bad << c.id << ": exceptional with nu < 2; ";
                if (c.self_intersection && *c.self_intersection > -1)
                    bad << c.id << ": self-intersection > -1; ";
            }
            if (c.n_generic && *c.n_generic < 0) bad << c.id << ": negative n_generic; ";
        }
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (!g.find(g.edges[i].a) || !g.find(g.edges[i].b))
                bad << "edge " << i << " references unknown component; ";
        }
        check("structure", bad.str().empty(), bad.str());
    }
    if (!rep.checks.back().pass) return rep;  // later checks assume structure

    // Consistency of supplied vs derived generic counts.
    {
        bool all_selfs = true;
        for (const auto& c : g.components)
            if (c.kind == ComponentKind::Exceptional && !c.self_intersection) all_selfs = false;
        if (all_selfs && !g.exceptional_ids().empty()) {
            std::ostringstream bad;
            std::map<std::string, long long> derived;
            try {
                derived = derive_generic_counts(g);
            } catch (const Error& e) {
                check("generic-counts", false, e.what());
                return rep;
            }
            for (const auto& c : g.components)
                if (c.kind == ComponentKind::Exceptional && c.n_generic &&
                    *c.n_generic != derived.at(c.id))
                    bad << c.id << ": supplied " << *c.n_generic << " != derived "
                        << derived.at(c.id) << "; ";
            check("generic-counts", bad.str().empty(), bad.str());
        } else {
            check("generic-counts", true, "skipped (self-intersections not all present)");
        }
    }

    // Numerical-data relations around each exceptional curve E0(N, nu) with
    // m neighbors and n generic intersections:
    //   sum alpha_i = m - 2 + nu*n/N  with  alpha_i = nu_i - (nu/N) N_i,
    //   -1 <= alpha_i < 1, and alpha_i = -1 only when m = 1.
    {
        DualGraph gc;
        bool have_counts = true;
        try {
            gc = with_generic_counts(g);
        } catch (const Error&) {
            have_counts = false;
        }
        if (have_counts) {
            std::ostringstream bad_sum, bad_range;
            for (const auto& c : gc.components) {
                if (c.kind != ComponentKind::Exceptional) continue;
                auto nbs = gc.neighbors(c.id);
                Rational ratio(Int(c.nu), Int(c.N));
                Rational sum(0);
                long long m = static_cast<long long>(nbs.size());
                for (const Component* nb : nbs) {
                    Rational alpha = Rational(nb->nu) - ratio * Rational(nb->N);
                    sum += alpha;
                    if (alpha < -1 || alpha >= 1)
                        bad_range << c.id << "/" << nb->id << ": alpha=" << to_string(alpha)
                                  << " out of [-1,1); ";
                    else if (alpha == -1 && m != 1)
                        bad_range << c.id << "/" << nb->id << ": alpha=-1 with m=" << m << "; ";
                }
                Rational rhs = Rational(m - 2) + ratio * Rational(*c.n_generic);
                if (sum != rhs)
                    bad_sum << c.id << ": sum alpha = " << to_string(sum)
                            << " != " << to_string(rhs) << "; ";
            }
            check("alpha-sum", bad_sum.str().empty(), bad_sum.str());
            check("alpha-range", bad_range.str().empty(), bad_range.str());
        } else {
            check("alpha-sum", true, "skipped (no generic counts available)");
            check("alpha-range", true, "skipped");
        }
    }

    // The exceptional components form a connected tree; equivalently the
    // chi-sum over the tree, 2 minus internal degree per node, equals 2.
    {
        auto exc = g.exceptional_ids();
        if (exc.empty()) {
            check("exceptional-tree", true, "skipped (no exceptional components)");
        } else {
            std::map<std::string, std::vector<std::string>> adj;
            long long internal_edges = 0;
            for (const auto& e : g.edges) {
                const Component &a = g.at(e.a), &b = g.at(e.b);
                if (a.kind == ComponentKind::Exceptional && b.kind == ComponentKind::Exceptional) {
                    adj[e.a].push_back(e.b);
                    adj[e.b].push_back(e.a);
                    ++internal_edges;
                }
            }
            std::set<std::string> visited;
            std::function<void(const std::string&)> dfs = [&](const std::string& v) {
                if (!visited.insert(v).second) return;
                for (const auto& w : adj[v]) dfs(w);
            };
            dfs(exc.front());
            long long chi_sum = 0;
            for (const auto& id : exc) chi_sum += 2 - static_cast<long long>(adj[id].size());
            bool connected = visited.size() == exc.size();
            bool acyclic = internal_edges == static_cast<long long>(exc.size()) - 1;
            std::ostringstream details;
            if (!connected) details << "not connected; ";
            if (!acyclic) details << "not a tree (" << internal_edges << " internal edges for "
                                  << exc.size() << " nodes); ";
            if (chi_sum != 2 && connected && acyclic) details << "chi-sum " << chi_sum << " != 2; ";
            check("exceptional-tree", connected && acyclic && chi_sum == 2,
                  details.str().empty() ? "" : details.str());
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string to_json(const DualGraph& g) {
    ordered_json j;
    j["components"] = ordered_json::array();
    for (const auto& c : g.components) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["kind"] = c.kind == ComponentKind::Exceptional ? "exceptional" : "weak";
        cj["N"] = c.N;
        cj["nu"] = c.nu;
        if (c.self_intersection) cj["self_intersection"] = *c.self_intersection;
        if (c.n_generic) cj["n_generic"] = *c.n_generic;
        cj["over_origin"] = c.over_origin;
        j["components"].push_back(cj);
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) j["edges"].push_back(ordered_json::array({e.a, e.b}));
    j["metadata"] = ordered_json::object();
    for (const auto& [k, v] : g.metadata) j["metadata"][k] = v;
    return j.dump(2) + "\n";
}

namespace {

long long require_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError("expected integer", path);
    return j.get<long long>();
}

std::string require_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError("expected string", path);
    return j.get<std::string>();
}

}  // namespace

DualGraph from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
    }
    if (!j.is_object()) throw SchemaError("expected object", "$");
    if (!j.contains("components") || !j["components"].is_array())
        throw SchemaError("expected array", "$.components");

    DualGraph g;
    std::size_t i = 0;
    for (const auto& cj : j["components"]) {
        std::string path = "$.components[" + std::to_string(i++) + "]";
        if (!cj.is_object()) throw SchemaError("expected object", path);
        Component c;
        if (!cj.contains("id")) throw SchemaError("missing field 'id'", path);
        c.id = require_string(cj["id"], path + ".id");
        if (!cj.contains("kind")) throw SchemaError("missing field 'kind'", path);
        std::string kind = require_string(cj["kind"], path + ".kind");
        if (kind == "exceptional")
            c.kind = ComponentKind::Exceptional;
        else if (kind == "weak")
            c.kind = ComponentKind::Weak;
        else
            throw SchemaError("kind must be 'exceptional' or 'weak'", path + ".kind");
        if (!cj.contains("N")) throw SchemaError("missing field 'N'", path);
        c.N = require_int(cj["N"], path + ".N");
        if (c.N < 1) throw SchemaError("N must be positive", path + ".N");
        if (!cj.contains("nu")) throw SchemaError("missing field 'nu'", path);
        c.nu = require_int(cj["nu"], path + ".nu");
        if (c.nu < 1) throw SchemaError("nu must be positive", path + ".nu");
        if (cj.contains("self_intersection"))
            c.self_intersection = require_int(cj["self_intersection"], path + ".self_intersection");
        if (cj.contains("n_generic"))
            c.n_generic = require_int(cj["n_generic"], path + ".n_generic");
        if (!cj.contains("over_origin")) throw SchemaError("missing field 'over_origin'", path);
        if (!cj["over_origin"].is_boolean())
            throw SchemaError("expected boolean", path + ".over_origin");
        c.over_origin = cj["over_origin"].get<bool>();
        g.components.push_back(std::move(c));
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw SchemaError("expected array", "$.edges");
        std::size_t k = 0;
        for (const auto& ej : j["edges"]) {
            std::string path = "$.edges[" + std::to_string(k++) + "]";
            if (!ej.is_array() || ej.size() != 2) throw SchemaError("expected pair of ids", path);
            GraphEdge e;
            e.a = require_string(ej[0], path + "[0]");
            e.b = require_string(ej[1], path + "[1]");
            if (!g.find(e.a)) throw SchemaError("unknown component '" + e.a + "'", path + "[0]");
            if (!g.find(e.b)) throw SchemaError("unknown component '" + e.b + "'", path + "[1]");
            g.edges.push_back(std::move(e));
        }
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw SchemaError("expected object", "$.metadata");
        for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
            g.metadata[it.key()] = require_string(it.value(), "$.metadata." + it.key());
    }
    return g;
}

std::string to_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "graph dual {\n";
    for (const auto& c : g.components) {
        out << "  \"" << c.id << "\" [label=\"" << c.id << " (" << c.N << "," << c.nu << ")\"";
        if (c.kind == ComponentKind::Weak) out << ", shape=box, style=dashed";
        out << "];\n";
    }
    for (const auto& e : g.edges) {
        out << "  \"" << e.a << "\" -- \"" << e.b << "\"";
        if (!e.point_label.empty()) out << " [label=\"" << e.point_label << "\"]";
        out << ";\n";
    }
    bool any_generic = false;
    for (const auto& c : g.components)
        if (c.n_generic && *c.n_generic > 0) any_generic = true;
    if (any_generic) {
        out << "  \"generic\" [label=\"generic curve\", shape=plaintext];\n";
        for (const auto& c : g.components)
            if (c.n_generic && *c.n_generic > 0) {
                out << "  \"" << c.id << "\" -- \"generic\" [style=dashed";
                if (*c.n_generic > 1) out << ", label=\"x" << *c.n_generic << "\"";
                out << "];\n";
            }
    }
    out << "}\n";
    return out.str();
}

}  // namespace izeta
