#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "izeta/rational.hpp"

namespace izeta {

enum class ComponentKind { Exceptional, Weak };

// A component of the support of the total transform with its numerical
// data: N is the multiplicity in the total transform, nu - 1 the
// multiplicity in the relative canonical divisor.
struct Component {
    std::string id;
    ComponentKind kind = ComponentKind::Exceptional;
    long long N = 1;
    long long nu = 1;
    std::optional<long long> self_intersection;  // exceptional only
    std::optional<long long> n_generic;          // derived or supplied
    bool over_origin = true;
};

struct GraphEdge {
    std::string a;
    std::string b;
    std::string point_label;  // optional crossing-point annotation
};

struct DualGraph {
    std::vector<Component> components;
    std::vector<GraphEdge> edges;
    std::map<std::string, std::string> metadata;

    const Component* find(const std::string& id) const;
    const Component& at(const std::string& id) const;
    std::vector<const Component*> neighbors(const std::string& id) const;
    int edge_endpoint_count(const std::string& id) const;
    std::vector<std::string> exceptional_ids() const;
};

// Euler characteristic of the open stratum of an exceptional curve:
// 2 minus the number of edge endpoints at it (the curve is rational).
// Generic-curve intersections are not components and are not subtracted.
long long chi_open(const DualGraph& g, const std::string& id);

// n_i = kappa_i * N_i - sum of neighbor multiplicities, with kappa the
// negated self-intersection. Requires self-intersections on all
// exceptional components; errors if any count comes out negative.
std::map<std::string, long long> derive_generic_counts(const DualGraph& g);

// Returns a graph whose exceptional components carry n_generic, deriving
// them when absent (self-intersections present) and validating consistency
// when both are supplied.
DualGraph with_generic_counts(const DualGraph& g);

struct ValidationCheck {
    std::string name;
    bool pass = true;
    std::string details;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    std::string to_string() const;
};

ValidationReport validate(const DualGraph& g);

std::string to_json(const DualGraph& g);
DualGraph from_json(const std::string& text);
std::string to_dot(const DualGraph& g);

}  // namespace izeta
