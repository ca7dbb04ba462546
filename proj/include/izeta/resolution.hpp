#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/ideal.hpp"
#include "izeta/poly.hpp"

namespace izeta {

// Fractional-linear coordinate change v -> (a v + b) / (c v + d), used to
// map a point on a chart axis to the birth parametrization of the component
// that axis carries.
struct Mobius {
    Rational a{1}, b{0}, c{0}, d{1};
    static Mobius identity() { return {}; }
    static Mobius translation(const Rational& t) { return {Rational(1), t, Rational(0), Rational(1)}; }
    static Mobius inversion() { return {Rational(0), Rational(1), Rational(1), Rational(0)}; }
    // outer(inner(v))
    static Mobius compose(const Mobius& outer, const Mobius& inner);
};

// A point coordinate in a component's birth parametrization. Batch stands
// for a conjugate set of non-rational coordinates, described collectively
// by a squarefree polynomial; Unknown marks coordinates that were never
// computed (only produced by the testing-oriented edge blow-up).
struct ParamCoord {
    enum class Kind { Finite, Infinity, Batch, Unknown } kind = Kind::Finite;
    Rational value;
    UnivariatePoly batch;

    static ParamCoord finite(Rational v) { return {Kind::Finite, std::move(v), {}}; }
    static ParamCoord infinity() { return {Kind::Infinity, {}, {}}; }
    static ParamCoord batch_of(UnivariatePoly p) { return {Kind::Batch, {}, std::move(p)}; }
    static ParamCoord unknown() { return {Kind::Unknown, {}, {}}; }
    std::string to_string() const;
};

ParamCoord mobius_eval(const Mobius& m, const Rational& v);
ParamCoord mobius_eval_infinity(const Mobius& m);

struct AxisInfo {
    std::optional<int> comp;  // component index carried by this axis
    Mobius to_birth;          // axis coordinate -> birth parametrization
};

struct WeakBranchSlice {
    int layer = -1;        // index into ResolutionOutput::layers
    BivariatePoly strict;  // strict transform of the layer in this chart
};

// An affine chart of some stage of the blow-up tree. Coordinates are always
// called (u, v) and stored in the x/y slots of BivariatePoly. axis_u is the
// curve {u = 0}, axis_v the curve {v = 0}.
struct Chart {
    int id = -1;
    int parent = -1;
    enum class Subst { Root, A, B } subst = Subst::Root;
    Rational center_t;  // translation applied to the parent v before blowing up

    AxisInfo axis_u, axis_v;
    BivariatePoly X, Y;  // composed substitution down to the base plane

    std::vector<BivariatePoly> w_res;  // weak transform of the residual ideal
    bool w_res_unit = false;
    std::vector<WeakBranchSlice> branches;

    bool blown = false;  // a point of this chart has been blown up
    Rational blown_t;
    int child_a = -1, child_b = -1;
};

struct ComponentRecord {
    int index = -1;
    std::string id;
    ComponentKind kind = ComponentKind::Exceptional;
    long long N = 1;   // multiplicity in the total transform of the ideal
    long long M = 0;   // multiplicity in the pullback of the residual ideal
    long long nu = 1;
    long long self_int = -1;   // exceptional only
    int birth_chart_a = -1;    // chart where the component is {u = 0}, param v
    int birth_chart_b = -1;
    int layer = -1;            // weak only: index into layers
    std::string where;         // weak only: human-readable crossing location
    // Parameters of later blow-up centers on this component at which the
    // residual ideal still vanished. Every member of the linear system goes
    // through these points at this component's stage of the tower, so the
    // strict-transform counting must discard them.
    std::vector<ParamCoord> base_params;
};

struct EdgeRecord {
    int a = -1, b = -1;     // component indices
    ParamCoord on_a, on_b;  // crossing coordinate on each side
    bool alive = true;
    std::string label;
};

struct WeakLayer {
    BivariatePoly poly;  // squarefree factor of h
    int multiplicity = 1;
};

struct ResolutionOutput {
    Ideal input;
    SplitIdeal split;
    std::vector<WeakLayer> layers;

    std::vector<Chart> charts;
    std::vector<ComponentRecord> components;
    std::vector<EdgeRecord> edges;
    int blow_up_count = 0;

    DualGraph graph;  // extracted model with derived generic counts

    const ComponentRecord& comp(const std::string& id) const;
    int comp_index(const std::string& id) const;
};

struct PrincipalizeOptions {
    int max_blow_ups = 2000;
    // Recompute every exceptional multiplicity from scratch, as the order of
    // vanishing of each pulled-back input generator along the component, and
    // compare with the incremental bookkeeping.
    bool verify_multiplicities = true;
};

// Iterated point blow-ups over the origin until the pulled-back residual
// ideal is trivial along the fiber, every weak-transform branch is smooth,
// and the support of the total transform has simple normal crossings there.
ResolutionOutput principalize(const Ideal& ideal, const PrincipalizeOptions& opts = {});

// The state before any blow-up: the root chart carrying the residual ideal
// and the squarefree layers of the principal part.
ResolutionOutput initial_resolution_state(const Ideal& ideal);

// One point blow-up at (0, t) on the u-axis of the given chart (t = 0 with a
// labelled v-axis is the corner case). extra_incident names a component
// passing through the center that the chart does not show as an axis; it is
// only needed by the blow-up-invariance tests. Returns the new component
// index. The caller must rebuild the graph afterwards.
int blow_up_point(ResolutionOutput& state, int chart_id, const Rational& t,
                  std::optional<int> extra_incident = std::nullopt);

void rebuild_graph(ResolutionOutput& state);

// Finds the live chart hosting the point of the component at the given birth
// parameter, following the strict transform through later blow-ups. The
// point sits at (0, t) on the u-axis of the returned chart (or at its corner
// when t = 0 and the v-axis is labelled).
struct LocatedPoint {
    int chart_id;
    Rational t;
};
LocatedPoint locate_point(const ResolutionOutput& state, const std::string& comp_id,
                          const Rational& param);

// Blows up one free rational point of the component (a parameter avoiding
// every crossing); used by the zeta blow-up-invariance property.
int blow_up_extra_free_point(ResolutionOutput& state, const std::string& comp_id);

// Blows up the crossing point of an alive edge; returns the new component
// index, or nullopt when neither endpoint coordinate is finite.
std::optional<int> blow_up_extra_edge_point(ResolutionOutput& state, std::size_t edge_index);

// All crossing coordinates on a component in its birth parametrization.
struct OccupiedParams {
    std::vector<Rational> finite;
    bool infinity = false;
    std::vector<UnivariatePoly> batches;
};
OccupiedParams occupied_params(const ResolutionOutput& state, const std::string& comp_id);

struct GenericMemberResult {
    BivariatePoly g;
    std::vector<Rational> lambdas;
    std::map<std::string, long long> counts;  // per exceptional component
    int attempts = 0;
};

// Draws g = sum lambda_k f_k' with deterministic pseudorandom coefficients,
// computes the strict transform chart-wise, and counts its intersections
// with every exceptional component. Retries with fresh coefficients while
// any transversality or distinctness condition fails.
GenericMemberResult generic_member(const ResolutionOutput& res, long long seed);

}  // namespace izeta
