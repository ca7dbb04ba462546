#include "izeta/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace izeta {

void CyclotomicFactored::multiply(long long N, long long e) {
    if (e == 0) return;
    auto it = exponents.find(N);
    if (it == exponents.end()) {
        exponents[N] = e;
    } else {
        it->second += e;
        if (it->second == 0) exponents.erase(it);
    }
}

CyclotomicFactored CyclotomicFactored::operator*(const CyclotomicFactored& o) const {
    CyclotomicFactored out = *this;
    for (const auto& [N, e] : o.exponents) out.multiply(N, e);
    return out;
}

std::string CyclotomicFactored::to_string() const {
    if (exponents.empty()) return "1";
    std::ostringstream num, den;
    for (const auto& [N, e] : exponents) {
        std::ostringstream& out = e > 0 ? num : den;
        long long k = e > 0 ? e : -e;
        out << "(1-t";
        if (N != 1) out << "^" << N;
        out << ")";
        if (k > 1) out << "^" << k;
    }
    std::string n = num.str(), d = den.str();
    if (n.empty()) n = "1";
    if (d.empty()) return n;
    return n + " / " + d;
}

long long eigenvalue_order(const CyclotomicFactored& z, const Rational& a_over_d) {
    // The rational type keeps a/d reduced with d >= 1 by construction.
    long long dd = den(a_over_d).convert_to<long long>();
    long long order = 0;
    for (const auto& [N, e] : z.exponents)
        if (N % dd == 0) order += e;
    return order;
}

// ---------------------------------------------------------------------------
// Parametrizations
// ---------------------------------------------------------------------------

bool ProjectiveParam::is_constant() const { return degree() == 0; }

int ProjectiveParam::degree() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree());
    return d;
}

namespace {

std::vector<Rational> normalize_point(std::vector<Rational> v) {
    for (const auto& c : v)
        if (c != 0) {
            Rational inv = Rational(1) / c;
            for (auto& x : v) x *= inv;
            return v;
        }
    throw InternalError("projective point with all coordinates zero");
}

std::string point_to_string(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " : ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

std::vector<Rational> ProjectiveParam::value_at(const Rational& v) const {
    std::vector<Rational> out;
    for (const auto& c : coords) out.push_back(c.eval(v));
    return normalize_point(std::move(out));
}

std::vector<Rational> ProjectiveParam::value_at_infinity() const {
    int d = degree();
    std::vector<Rational> out;
    for (const auto& c : coords) out.push_back(c.coeff(d));
    return normalize_point(std::move(out));
}

ProjectiveParam restrict_projective_map(const ResolutionOutput& res, const std::string& comp_id) {
    const ComponentRecord& comp = res.comp(comp_id);
    if (comp.kind != ComponentKind::Exceptional)
        throw InputError("projective restriction expects an exceptional component");
    ProjectiveParam out;
    out.component = comp_id;
    out.chart = comp.birth_chart_a;
    if (res.split.residual_is_unit) {
        // The blow-up of an invertible ideal is the identity; everything is
        // contracted to the base point.
        out.coords = {UnivariatePoly(Rational(1))};
        return out;
    }
    const Chart& A = res.charts[static_cast<std::size_t>(comp.birth_chart_a)];
    std::vector<BivariatePoly> pulls;
    int m = -1;
    for (const auto& f : res.split.residual) {
        BivariatePoly p = f.subst(A.X, A.Y);
        if (p.is_zero()) throw InternalError("zero residual generator pullback");
        m = m < 0 ? p.order_x() : std::min(m, p.order_x());
        pulls.push_back(std::move(p));
    }
    if (m != comp.M)
        throw InternalError("residual multiplicity mismatch on " + comp_id);
    UnivariatePoly common;
    for (auto& p : pulls) {
        UnivariatePoly c = p.shift_down_x(m).at_x_zero();
        if (!c.is_zero()) common = common.is_zero() ? c.normalized() : gcd(common, c);
        out.coords.push_back(std::move(c));
    }
    if (common.is_zero()) throw InternalError("all restricted coordinates vanish on " + comp_id);
    if (common.degree() >= 1 || !(common == UnivariatePoly(Rational(1)))) {
        for (auto& c : out.coords) {
            if (c.is_zero()) continue;
            auto q = c.divide_exact(common);
            if (!q) throw InternalError("coordinate reduction failed on " + comp_id);
            c = *q;
        }
    }
    // Deterministic scaling: the first nonzero coordinate becomes primitive
    // with positive leading coefficient.
    for (const auto& c : out.coords) {
        if (c.is_zero()) continue;
        UnivariatePoly n = c.normalized();
        Rational scale = n.leading() / c.leading();
        for (auto& x : out.coords) x = x * scale;
        break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Contraction and clusters
// ---------------------------------------------------------------------------

std::set<std::string> contracted_set(const DualGraph& gin) {
    DualGraph g = with_generic_counts(gin);
    std::set<std::string> out;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional && c.over_origin && *c.n_generic == 0)
            out.insert(c.id);
    return out;
}

std::vector<Cluster> clusters_of(const DualGraph& g) {
    std::set<std::string> contracted = contracted_set(g);
    std::vector<Cluster> out;
    std::set<std::string> seen;
    for (const auto& c : g.components) {
        if (!contracted.count(c.id) || seen.count(c.id)) continue;
        Cluster cl;
        std::vector<std::string> stack{c.id};
        std::set<std::string> members;
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (!members.insert(v).second) continue;
            for (const Component* nb : g.neighbors(v))
                if (contracted.count(nb->id) && !members.count(nb->id)) stack.push_back(nb->id);
        }
        std::set<std::string> attached;
        for (const auto& m : members)
            for (const Component* nb : g.neighbors(m))
                if (!members.count(nb->id)) attached.insert(nb->id);
        // Keep graph component order for determinism.
        for (const auto& gc : g.components) {
            if (members.count(gc.id)) cl.members.push_back(gc.id);
            if (attached.count(gc.id)) cl.attached.push_back(gc.id);
        }
        seen.insert(members.begin(), members.end());
        cl.id = "a" + std::to_string(out.size() + 1);
        out.push_back(std::move(cl));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Image membership and degrees
// ---------------------------------------------------------------------------

namespace {

bool point_on_image(const ProjectiveParam& c, const std::vector<Rational>& P) {
    if (c.coords.size() != P.size()) throw InternalError("dimension mismatch in membership test");
    if (c.is_constant()) return c.value_at(Rational(0)) == P;
    UnivariatePoly H;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        for (std::size_t l = i + 1; l < c.coords.size(); ++l) {
            UnivariatePoly m = c.coords[i] * P[l] - c.coords[l] * P[i];
            if (m.is_zero()) continue;
            H = H.is_zero() ? m.normalized() : gcd(H, m);
        }
    if (H.is_zero()) throw InternalError("nonconstant parametrization with identically zero minors");
    if (H.degree() >= 1) return true;
    return c.value_at_infinity() == P;
}

// Degree of the map onto its image: the w-degree of the gcd of the
// coincidence minors c_i(w) c_l(v) - c_l(w) c_i(v) over Q[v, w].
long long generic_fiber_degree(const ProjectiveParam& c) {
    BivariatePoly G;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        for (std::size_t l = i + 1; l < c.coords.size(); ++l) {
            BivariatePoly m = BivariatePoly::from_univariate_y(c.coords[i]) *
                                  BivariatePoly::from_univariate_x(c.coords[l]) -
                              BivariatePoly::from_univariate_y(c.coords[l]) *
                                  BivariatePoly::from_univariate_x(c.coords[i]);
            if (m.is_zero()) continue;
            G = G.is_zero() ? m.normalized() : gcd_bivariate(G, m);
        }
    if (G.is_zero()) throw InternalError("fiber degree of a constant parametrization");
    return G.degree_y();
}

std::vector<std::vector<Rational>> sample_points(const ProjectiveParam& c, std::size_t count) {
    std::vector<std::vector<Rational>> pts;
    for (long long w = 0; pts.size() < count; ++w) {
        if (w > 100000) throw InternalError("sampling failed to produce distinct image points");
        auto p = c.value_at(Rational(w));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return pts;
}

// Two parametrized curves coincide iff each contains more of the other's
// points than the Bezout bound for distinct curves allows.
bool same_image(const ProjectiveParam& a, long long deg_a, const ProjectiveParam& b,
                long long deg_b) {
    std::size_t needed = static_cast<std::size_t>(deg_a * deg_b + 1);
    for (const auto& p : sample_points(a, needed))
        if (!point_on_image(b, p)) return false;
    for (const auto& p : sample_points(b, needed))
        if (!point_on_image(a, p)) return false;
    return true;
}

}  // namespace

std::vector<ComponentImageGroup> image_grouping_and_degrees(
    const std::map<std::string, ProjectiveParam>& params, const DualGraph& gin,
    int residual_rank) {
    DualGraph g = with_generic_counts(gin);
    std::set<std::string> contracted = contracted_set(g);
    std::vector<std::string> non_contracted_exc;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional && c.over_origin && !contracted.count(c.id))
            non_contracted_exc.push_back(c.id);

    std::vector<ComponentImageGroup> groups;
    if (residual_rank == 2) {
        if (!non_contracted_exc.empty()) {
            ComponentImageGroup grp;
            grp.id = "C1";
            grp.image_degree = 1;
            grp.image_desc = "the exceptional line of the ideal blow-up";
            for (const auto& id : non_contracted_exc) {
                long long D = params.at(id).degree();
                if (D != *g.at(id).n_generic)
                    throw InternalError(
                        "parametrization degree differs from the generic count at " + id);
                grp.members.push_back({id, D});
            }
            groups.push_back(std::move(grp));
        }
    } else if (residual_rank >= 3) {
        std::map<std::string, long long> image_deg, map_deg;
        for (const auto& id : non_contracted_exc) {
            const auto& p = params.at(id);
            long long D = p.degree();
            if (D != *g.at(id).n_generic)
                throw InternalError("parametrization degree differs from the generic count at " +
                                    id);
            long long m = generic_fiber_degree(p);
            if (m < 1 || D % m != 0)
                throw InternalError("map degree does not divide the parametrization degree at " +
                                    id);
            map_deg[id] = m;
            image_deg[id] = D / m;
        }
        std::vector<std::string> left = non_contracted_exc;
        while (!left.empty()) {
            std::string head = left.front();
            ComponentImageGroup grp;
            grp.id = "C" + std::to_string(groups.size() + 1);
            grp.image_degree = image_deg.at(head);
            grp.members.push_back({head, map_deg.at(head)});
            std::vector<std::string> rest;
            for (std::size_t i = 1; i < left.size(); ++i) {
                const std::string& cand = left[i];
                if (image_deg.at(cand) == grp.image_degree &&
                    same_image(params.at(head), grp.image_degree, params.at(cand),
                               image_deg.at(cand))) {
                    grp.members.push_back({cand, map_deg.at(cand)});
                } else {
                    rest.push_back(cand);
                }
            }
            grp.image_desc = grp.image_degree == 1
                                 ? "a rational line in the exceptional set"
                                 : "an image curve of degree " + std::to_string(grp.image_degree);
            groups.push_back(std::move(grp));
            left = std::move(rest);
        }
    } else if (!non_contracted_exc.empty()) {
        throw InternalError("non-contracted exceptional curve without residual generators");
    }

    for (const auto& c : g.components) {
        if (c.kind != ComponentKind::Weak || !c.over_origin) continue;
        ComponentImageGroup grp;
        grp.id = "C" + std::to_string(groups.size() + 1);
        grp.weak = true;
        grp.image_degree = 1;
        grp.image_desc = "branch of the non-exceptional part";
        grp.members.push_back({c.id, 1});
        groups.push_back(std::move(grp));
    }
    return groups;
}

CyclotomicFactored monodromy_zeta_at_cluster(const DualGraph& gin, const Cluster& cluster,
                                             const ResolutionOutput* res,
                                             const std::map<std::string, ProjectiveParam>* params,
                                             std::vector<std::string>* warnings) {
    DualGraph g = with_generic_counts(gin);
    CyclotomicFactored z;
    for (const auto& m : cluster.members) z.multiply(g.at(m).N, chi_open(g, m));

    std::set<std::string> contracted = contracted_set(g);
    std::vector<std::string> non_contracted_exc;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional && c.over_origin && !contracted.count(c.id))
            non_contracted_exc.push_back(c.id);
    if (non_contracted_exc.empty()) return z;

    if (res && params) {
        std::vector<Rational> image = cluster.image_value;
        if (image.empty()) image = params->at(cluster.members.front()).value_at(Rational(0));
        for (const auto& id : non_contracted_exc) {
            long long extra = extra_fiber_points(*res, params->at(id), image);
            if (extra > 0) z.multiply(g.at(id).N, extra);
        }
    } else if (warnings) {
        warnings->push_back(
            "cluster zeta functions assume no extra fiber points on non-contracted components");
    }
    return z;
}

long long extra_fiber_points(const ResolutionOutput& res, const ProjectiveParam& param,
                             const std::vector<Rational>& image_value) {
    if (param.is_constant())
        throw InputError("extra fiber points are not applicable to a contracted component");
    OccupiedParams occ = occupied_params(res, param.component);
    UnivariatePoly H;
    for (std::size_t i = 0; i < param.coords.size(); ++i)
        for (std::size_t l = i + 1; l < param.coords.size(); ++l) {
            UnivariatePoly m = param.coords[i] * image_value[l] - param.coords[l] * image_value[i];
            if (m.is_zero()) continue;
            H = H.is_zero() ? m.normalized() : gcd(H, m);
        }
    long long count = 0;
    if (!H.is_zero() && H.degree() >= 1) {
        UnivariatePoly Hs = squarefree_part(H);
        for (const auto& p : occ.finite) {
            UnivariatePoly lin({-p, Rational(1)});
            while (!Hs.is_constant() && Hs.eval(p) == 0) {
                auto d = Hs.divide_exact(lin);
                if (!d) throw InternalError("fiber-point deflation failed");
                Hs = *d;
            }
        }
        for (const auto& batch : occ.batches) {
            UnivariatePoly gpart = gcd(Hs, batch);
            if (gpart.degree() >= 1) {
                auto d = Hs.divide_exact(gpart);
                if (!d) throw InternalError("fiber-point batch deflation failed");
                Hs = *d;
            }
        }
        count += Hs.degree();
    }
    if (!occ.infinity && param.value_at_infinity() == image_value) count += 1;
    return count;
}

CyclotomicFactored monodromy_zeta_at_generic(const DualGraph& g,
                                             const ComponentImageGroup& group) {
    CyclotomicFactored z;
    for (const auto& m : group.members) z.multiply(g.at(m.id).N, m.degree);
    return z;
}

const ComponentImageGroup* MonodromyAnalysis::group_of(const std::string& comp_id) const {
    for (const auto& g : groups)
        for (const auto& m : g.members)
            if (m.id == comp_id) return &g;
    return nullptr;
}

const Cluster* MonodromyAnalysis::cluster_of(const std::string& comp_id) const {
    for (const auto& c : clusters)
        for (const auto& m : c.members)
            if (m == comp_id) return &c;
    return nullptr;
}

MonodromyAnalysis analyze_monodromy(const DualGraph& gin, const ResolutionOutput* res) {
    DualGraph g = with_generic_counts(gin);
    MonodromyAnalysis A;
    A.from_resolution = res != nullptr;
    A.contracted = contracted_set(g);
    A.clusters = clusters_of(g);
    A.residual_rank =
        res ? (res->split.residual_is_unit ? 0 : static_cast<int>(res->split.residual.size()))
            : -1;

    std::vector<std::string> non_contracted_exc;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional && c.over_origin && !A.contracted.count(c.id))
            non_contracted_exc.push_back(c.id);

    if (res && A.residual_rank >= 2) {
        for (const auto& c : g.components) {
            if (c.kind != ComponentKind::Exceptional || !c.over_origin) continue;
            ProjectiveParam p = restrict_projective_map(*res, c.id);
            bool constant = p.is_constant();
            if (constant != (A.contracted.count(c.id) > 0))
                throw InternalError("contraction criterion disagrees with the parametrization at " +
                                    c.id);
            A.params.emplace(c.id, std::move(p));
        }
        A.groups = image_grouping_and_degrees(A.params, g, A.residual_rank);
    } else if (res && A.residual_rank == 0) {
        A.groups = image_grouping_and_degrees(A.params, g, 0);
    } else {
        if (!non_contracted_exc.empty()) {
            A.warnings.push_back(
                "mapping degrees assume two residual generators (a single rational image line)");
            ComponentImageGroup grp;
            grp.id = "C1";
            grp.image_degree = 1;
            grp.image_desc = "assumed single image line";
            for (const auto& id : non_contracted_exc)
                grp.members.push_back({id, *g.at(id).n_generic});
            A.groups.push_back(std::move(grp));
        }
        for (const auto& c : g.components) {
            if (c.kind != ComponentKind::Weak || !c.over_origin) continue;
            ComponentImageGroup grp;
            grp.id = "C" + std::to_string(A.groups.size() + 1);
            grp.weak = true;
            grp.image_degree = 1;
            grp.image_desc = "branch of the non-exceptional part";
            grp.members.push_back({c.id, 1});
            A.groups.push_back(std::move(grp));
        }
    }

    for (auto& grp : A.groups) grp.zeta = monodromy_zeta_at_generic(g, grp);

    // Cluster images and zeta functions.
    std::vector<std::string> cluster_warnings;
    for (auto& cl : A.clusters) {
        if (!A.params.empty()) {
            for (const auto& m : cl.members) {
                auto v = A.params.at(m).value_at(Rational(0));
                if (cl.image_value.empty()) {
                    cl.image_value = v;
                } else if (cl.image_value != v) {
                    throw InternalError("cluster members map to different points: " + cl.id);
                }
            }
            cl.image_label = point_to_string(cl.image_value);
        } else if (A.residual_rank == 0) {
            cl.image_label = "the origin";
        } else {
            cl.image_label = "point " + cl.id;
        }
        cl.zeta = monodromy_zeta_at_cluster(g, cl, res, A.params.empty() ? nullptr : &A.params,
                                            &cluster_warnings);
    }
    for (const auto& w : cluster_warnings) {
        if (std::find(A.warnings.begin(), A.warnings.end(), w) == A.warnings.end())
            A.warnings.push_back(w);
    }
    for (std::size_t i = 0; i < A.clusters.size(); ++i)
        for (std::size_t j = i + 1; j < A.clusters.size(); ++j)
            if (!A.clusters[i].image_value.empty() &&
                A.clusters[i].image_value == A.clusters[j].image_value)
                A.warnings.push_back("clusters " + A.clusters[i].id + " and " + A.clusters[j].id +
                                     " share the image value " + A.clusters[i].image_label);

    return A;
}

std::optional<BivariatePoly> implicit_plane_curve(const ProjectiveParam& p) {
    if (p.coords.size() != 3 || p.is_constant()) return std::nullopt;
    std::vector<std::size_t> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return p.coords[a].degree() > p.coords[b].degree();
    });
    for (std::size_t pivot : order) {
        std::size_t i = pivot == 0 ? 1 : 0;
        std::size_t k = pivot == 2 ? 1 : 2;
        int D = p.degree();
        std::vector<BivariatePoly> line1, line2;
        for (int m = 0; m <= D; ++m) {
            line1.push_back(BivariatePoly(p.coords[i].coeff(m)) -
                            BivariatePoly::var_x() * BivariatePoly(p.coords[pivot].coeff(m)));
            line2.push_back(BivariatePoly(p.coords[k].coeff(m)) -
                            BivariatePoly::var_y() * BivariatePoly(p.coords[pivot].coeff(m)));
        }
        BivariatePoly F = resultant_bivariate_coeffs(line1, line2);
        if (!F.is_zero() && !F.is_constant()) return F.normalized();
    }
    return std::nullopt;
}

}  // namespace izeta
