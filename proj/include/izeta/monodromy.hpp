#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/poly.hpp"
#include "izeta/resolution.hpp"

namespace izeta {

// A monodromy zeta function kept in factored form prod_N (1 - t^N)^{e_N}.
struct CyclotomicFactored {
    std::map<long long, long long> exponents;  // no zero entries

    void multiply(long long N, long long e);
    CyclotomicFactored operator*(const CyclotomicFactored& o) const;
    bool is_one() const { return exponents.empty(); }
    bool operator==(const CyclotomicFactored& o) const { return exponents == o.exponents; }
    std::string to_string() const;
};

// Vanishing order of z at the primitive root of unity exp(2 pi i a / d):
// the sum of e_N over all N divisible by d. Positive means zero, negative
// means pole; a nonzero value certifies a monodromy eigenvalue.
long long eigenvalue_order(const CyclotomicFactored& z, const Rational& a_over_d);

// The projective coordinates of the residual system restricted to one
// exceptional curve, in its birth-chart parametrization.
struct ProjectiveParam {
    std::string component;
    std::vector<UnivariatePoly> coords;  // coprime; size = residual generators
    int chart = -1;

    bool is_constant() const;
    int degree() const;  // max coordinate degree after reduction
    // Normalized projective point at a parameter value / at infinity
    // (first nonzero coordinate scaled to 1).
    std::vector<Rational> value_at(const Rational& v) const;
    std::vector<Rational> value_at_infinity() const;
};

ProjectiveParam restrict_projective_map(const ResolutionOutput& res, const std::string& comp_id);

// A connected set of curves contracted to one point.
struct Cluster {
    std::string id;
    std::vector<std::string> members;
    std::vector<std::string> attached;       // non-contracted neighbours
    std::string image_label;                 // point description
    std::vector<Rational> image_value;       // projective tuple; empty when unknown
    CyclotomicFactored zeta;
};

struct GroupMember {
    std::string id;
    long long degree = 1;  // mapping degree onto the image curve
};

struct ComponentImageGroup {
    std::string id;
    std::vector<GroupMember> members;
    long long image_degree = 1;  // n' of the image curve
    bool weak = false;
    std::string image_desc;
    CyclotomicFactored zeta;  // at a generic point of the image
};

std::set<std::string> contracted_set(const DualGraph& g);
std::vector<Cluster> clusters_of(const DualGraph& g);

// Groups the non-contracted exceptional components by their image curves and
// computes the mapping degrees. With two residual generators the image is a
// single rational line and the degree equals the parametrization degree; with
// more, images are compared point-by-point beyond the Bezout bound and the
// degree comes from the exact coincidence gcd. Weak components always form
// singleton groups of degree one. Zeta fields are left empty.
std::vector<ComponentImageGroup> image_grouping_and_degrees(
    const std::map<std::string, ProjectiveParam>& params, const DualGraph& g, int residual_rank);

// Number of points of the open stratum of a non-contracted component that
// map to the cluster's image point, counted exactly through gcd degrees.
long long extra_fiber_points(const ResolutionOutput& res, const ProjectiveParam& param,
                             const std::vector<Rational>& image_value);

// prod over cluster members of (1 - t^N)^chi, corrected by the extra fiber
// points of non-contracted components when the resolution data is available;
// without it the correction is assumed zero and a warning is appended.
CyclotomicFactored monodromy_zeta_at_cluster(const DualGraph& g, const Cluster& cluster,
                                             const ResolutionOutput* res,
                                             const std::map<std::string, ProjectiveParam>* params,
                                             std::vector<std::string>* warnings);

CyclotomicFactored monodromy_zeta_at_generic(const DualGraph& g,
                                             const ComponentImageGroup& group);

// Full monodromy picture. When `res` is supplied the mapping degrees, the
// cluster images and the extra fiber corrections are computed from the
// parametrizations; otherwise the combinatorial data is used and every
// assumption is recorded as a warning.
struct MonodromyAnalysis {
    int residual_rank = 0;  // 0 when the residual ideal is the unit ideal
    bool from_resolution = false;
    std::set<std::string> contracted;
    std::vector<Cluster> clusters;
    std::vector<ComponentImageGroup> groups;
    std::map<std::string, ProjectiveParam> params;
    std::vector<std::string> warnings;

    const ComponentImageGroup* group_of(const std::string& comp_id) const;
    const Cluster* cluster_of(const std::string& comp_id) const;
};

MonodromyAnalysis analyze_monodromy(const DualGraph& g, const ResolutionOutput* res);

// Implicit equation of the image curve of a three-generator parametrization
// in the affine chart of its highest-degree coordinate; intended for
// cross-checking image degrees. May fail on degenerate pivots.
std::optional<BivariatePoly> implicit_plane_curve(const ProjectiveParam& p);

}  // namespace izeta
