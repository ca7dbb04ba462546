#include "izeta/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace izeta {

using ordered_json = nlohmann::ordered_json;

namespace {

PoleList merged_poles(const RationalFunctionS& z, const DualGraph& g) {
    PoleList from_zeta = poles_of(z, &g);
    PoleList from_conditions = pole_characterization(g);
    if (!same_pole_values(from_zeta, from_conditions))
        throw InternalError(
            "pole sets disagree between the reduced zeta function and the characterization");
    for (auto& p : from_zeta)
        for (const auto& q : from_conditions)
            if (q.value == p.value) p.conditions = q.conditions;
    return from_zeta;
}

ordered_json graph_json_object(const DualGraph& g) { return ordered_json::parse(to_json(g)); }

ordered_json zeta_json(const RationalFunctionS& z) {
    ordered_json out;
    out["numerator"] = ordered_json::array();
    for (int k = 0; k <= z.numerator.degree(); ++k)
        out["numerator"].push_back(to_string(z.numerator.coeff(k)));
    out["denominator"] = ordered_json::array();
    for (const auto& f : z.factors)
        out["denominator"].push_back(ordered_json::array({f.nu, f.N, f.mult}));
    out["text"] = z.to_string();
    return out;
}

ordered_json poles_json(const PoleList& poles) {
    ordered_json out = ordered_json::array();
    for (const auto& p : poles) {
        ordered_json pj;
        pj["value"] = to_string(p.value);
        pj["order"] = p.order;
        pj["provenance"] = p.provenance;
        pj["conditions"] = p.conditions;
        out.push_back(pj);
    }
    return out;
}

ordered_json cyclotomic_json(const CyclotomicFactored& z) {
    ordered_json out = ordered_json::array();
    for (const auto& [N, e] : z.exponents) out.push_back(ordered_json::array({N, e}));
    return out;
}

ordered_json mono_json(const MonodromyAnalysis& mono) {
    ordered_json out;
    out["contracted"] = ordered_json::array();
    for (const auto& id : mono.contracted) out["contracted"].push_back(id);
    out["clusters"] = ordered_json::array();
    for (const auto& c : mono.clusters) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["members"] = c.members;
        cj["attached"] = c.attached;
        cj["image"] = c.image_label;
        cj["zeta"] = cyclotomic_json(c.zeta);
        cj["zeta_text"] = c.zeta.to_string();
        out["clusters"].push_back(cj);
    }
    out["image_groups"] = ordered_json::array();
    for (const auto& g : mono.groups) {
        ordered_json gj;
        gj["id"] = g.id;
        gj["weak"] = g.weak;
        gj["image_degree"] = g.image_degree;
        gj["image"] = g.image_desc;
        gj["members"] = ordered_json::array();
        for (const auto& m : g.members) {
            ordered_json mj;
            mj["id"] = m.id;
            mj["degree"] = m.degree;
            gj["members"].push_back(mj);
        }
        gj["zeta"] = cyclotomic_json(g.zeta);
        gj["zeta_text"] = g.zeta.to_string();
        out["image_groups"].push_back(gj);
    }
    return out;
}

ordered_json certificates_json(const ConjectureReport& rep) {
    ordered_json out = ordered_json::array();
    for (const auto& c : rep.certificates) {
        ordered_json cj;
        cj["pole"] = to_string(c.pole);
        cj["variant"] = c.kind == CertificateKind::WitnessComponent  ? "witness"
                        : c.kind == CertificateKind::ClusterWitness ? "cluster"
                                                                    : "violation";
        cj["witness"] = c.witness;
        if (!c.group_id.empty()) cj["group"] = c.group_id;
        if (c.kind == CertificateKind::ClusterWitness) cj["chi_sum"] = c.chi_sum;
        cj["zeta"] = cyclotomic_json(c.zeta);
        cj["eigenvalue"] = c.eigenvalue;
        cj["order"] = c.order;
        if (!c.diagnostics.empty()) cj["diagnostics"] = c.diagnostics;
        out.push_back(cj);
    }
    return out;
}

void text_graph(std::ostream& out, const DualGraph& g) {
    out << "dual graph (id (N,nu" << ") | self | neighbors | generic-curve hits)\n";
    for (const auto& c : g.components) {
        out << "  " << c.id << " (" << c.N << "," << c.nu << ")";
        if (c.self_intersection) out << "  self " << *c.self_intersection;
        std::vector<const Component*> nbs = g.neighbors(c.id);
        out << "  --";
        if (nbs.empty()) out << "  (isolated)";
        for (const auto* nb : nbs) out << "  " << nb->id;
        if (c.n_generic && *c.n_generic > 0) out << "  [generic x" << *c.n_generic << "]";
        if (!c.over_origin) out << "  (away from origin)";
        out << "\n";
    }
}

void text_poles(std::ostream& out, const PoleList& poles) {
    out << "poles:";
    if (poles.empty()) out << " none";
    for (const auto& p : poles) {
        out << "  " << to_string(p.value);
        if (p.order > 0) out << " (order " << p.order << ")";
    }
    out << "\n";
    for (const auto& p : poles) {
        out << "  " << to_string(p.value) << ": from";
        for (const auto& id : p.provenance) out << " " << id;
        if (!p.conditions.empty()) {
            out << "; ";
            for (std::size_t i = 0; i < p.conditions.size(); ++i)
                out << (i ? ", " : "") << p.conditions[i];
        }
        out << "\n";
    }
}

void text_mono(std::ostream& out, const MonodromyAnalysis& mono) {
    out << "contracted:";
    if (mono.contracted.empty()) out << " none";
    for (const auto& id : mono.contracted) out << " " << id;
    out << "\n";
    for (const auto& c : mono.clusters) {
        out << "cluster " << c.id << " {";
        for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? " " : "") << c.members[i];
        out << "} -> " << c.image_label << "; monodromy zeta " << c.zeta.to_string() << "\n";
    }
    for (const auto& g : mono.groups) {
        out << "image group " << g.id << (g.weak ? " (weak)" : "") << ": ";
        for (std::size_t i = 0; i < g.members.size(); ++i)
            out << (i ? ", " : "") << g.members[i].id << " (degree " << g.members[i].degree << ")";
        out << " -> " << g.image_desc << "; generic-point zeta " << g.zeta.to_string() << "\n";
    }
}

void text_conjecture(std::ostream& out, const ConjectureReport& rep) {
    out << "monodromy conjecture: " << (rep.verified() ? "VERIFIED" : "VIOLATION") << "\n";
    for (const auto& c : rep.certificates) {
        out << "  pole " << to_string(c.pole) << ": ";
        switch (c.kind) {
            case CertificateKind::WitnessComponent:
                out << "witness " << c.witness;
                if (!c.group_id.empty()) out << " (group " << c.group_id << ")";
                break;
            case CertificateKind::ClusterWitness:
                out << "cluster " << c.witness << " (chi-sum " << c.chi_sum << ")";
                break;
            case CertificateKind::Violation:
                out << "VIOLATION";
                for (const auto& d : c.diagnostics) out << "; " << d;
                break;
        }
        out << ", order " << c.order << " at " << c.eigenvalue << "\n";
    }
}

}  // namespace

AnalysisReport analyze_ideal(const std::string& ideal_text, long long seed, bool run_conjecture) {
    auto start = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.ideal_text = ideal_text;
    rep.seed = seed;

    Ideal ideal = Ideal::from_text(ideal_text);
    ResolutionOutput res = principalize(ideal);
    rep.h_text = res.split.h.to_string();
    for (const auto& f : res.split.residual) rep.residual_texts.push_back(f.to_string());
    rep.residual_is_unit = res.split.residual_is_unit;
    rep.blow_ups = res.blow_up_count;

    if (!res.split.residual_is_unit) {
        // Exercises the geometric counting; agreement with the combinatorial
        // counts is enforced inside.
        generic_member(res, seed);
    }
    res.graph.metadata["seed"] = std::to_string(seed);
    rep.graph = res.graph;

    ValidationReport val = validate(rep.graph);
    if (!val.all_pass())
        throw InternalError("pipeline graph failed validation:\n" + val.to_string());

    rep.zeta = topological_zeta_local(rep.graph);
    rep.poles = merged_poles(rep.zeta, rep.graph);
    rep.mono = analyze_monodromy(rep.graph, &res);
    rep.warnings = rep.mono.warnings;
    if (run_conjecture) rep.conjecture = check_conjecture(rep.graph, rep.mono, rep.poles);

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string report_to_json(const AnalysisReport& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["input"]["ideal"] = rep.ideal_text;
    j["input"]["seed"] = rep.seed;
    j["principal_part"]["h"] = rep.h_text;
    j["principal_part"]["residual"] = rep.residual_texts;
    j["principal_part"]["residual_is_unit"] = rep.residual_is_unit;
    j["blow_ups"] = rep.blow_ups;
    j["graph"] = graph_json_object(rep.graph);
    j["zeta"] = zeta_json(rep.zeta);
    j["poles"] = poles_json(rep.poles);
    j["pole_methods_agree"] = true;
    j["monodromy"] = mono_json(rep.mono);
    if (rep.conjecture) {
        j["certificates"] = certificates_json(*rep.conjecture);
        j["verdict"] = rep.conjecture->verified() ? "VERIFIED" : "VIOLATION";
    }
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "ideal: (" << rep.ideal_text << ")\n";
    out << "principal part h = " << rep.h_text << "; residual "
        << (rep.residual_is_unit ? "unit" : std::to_string(rep.residual_texts.size()) +
                                                " generator(s)")
        << "; seed " << rep.seed << "\n";
    out << "blow-ups: " << rep.blow_ups << "\n\n";
    text_graph(out, rep.graph);
    out << "\nlocal topological zeta function:\n  Z(s) = " << rep.zeta.to_string() << "\n";
    text_poles(out, rep.poles);
    out << "(pole characterization agrees with the reduced function)\n\n";
    text_mono(out, rep.mono);
    if (rep.conjecture) {
        out << "\n";
        text_conjecture(out, *rep.conjecture);
    }
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    out << "\nelapsed: " << rep.elapsed_ms << " ms\n";
    return out.str();
}

GraphReport analyze_graph(const DualGraph& g, bool want_zeta, bool want_monodromy,
                          bool want_conjecture) {
    GraphReport rep;
    rep.graph = g;
    rep.validation = validate(g);
    if (!rep.validation.all_pass()) return rep;
    if (want_zeta || want_conjecture) {
        rep.zeta = topological_zeta_local(g);
        rep.poles = merged_poles(*rep.zeta, g);
    }
    if (want_monodromy || want_conjecture) {
        rep.mono = analyze_monodromy(g, nullptr);
        rep.warnings = rep.mono->warnings;
    }
    if (want_conjecture) rep.conjecture = check_conjecture(g, *rep.mono, rep.poles);
    return rep;
}

std::string graph_report_to_json(const GraphReport& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["graph"] = graph_json_object(rep.graph);
    j["validation"]["pass"] = rep.validation.all_pass();
    j["validation"]["checks"] = ordered_json::array();
    for (const auto& c : rep.validation.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.details.empty()) cj["details"] = c.details;
        j["validation"]["checks"].push_back(cj);
    }
    if (rep.zeta) {
        j["zeta"] = zeta_json(*rep.zeta);
        j["poles"] = poles_json(rep.poles);
    }
    if (rep.mono) j["monodromy"] = mono_json(*rep.mono);
    if (rep.conjecture) {
        j["certificates"] = certificates_json(*rep.conjecture);
        j["verdict"] = rep.conjecture->verified() ? "VERIFIED" : "VIOLATION";
    }
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string graph_report_to_text(const GraphReport& rep) {
    std::ostringstream out;
    text_graph(out, rep.graph);
    out << "\nvalidation:\n" << rep.validation.to_string();
    if (!rep.validation.all_pass()) return out.str();
    if (rep.zeta) {
        out << "\nlocal topological zeta function:\n  Z(s) = " << rep.zeta->to_string() << "\n";
        text_poles(out, rep.poles);
    }
    if (rep.mono) {
        out << "\n";
        text_mono(out, *rep.mono);
    }
    if (rep.conjecture) {
        out << "\n";
        text_conjecture(out, *rep.conjecture);
    }
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace izeta
