#include "izeta/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace izeta {

Mobius Mobius::compose(const Mobius& o, const Mobius& i) {
    return {o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d,
            o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d};
}

ParamCoord mobius_eval(const Mobius& m, const Rational& v) {
    Rational denom = m.c * v + m.d;
    if (denom == 0) return ParamCoord::infinity();
    return ParamCoord::finite((m.a * v + m.b) / denom);
}

ParamCoord mobius_eval_infinity(const Mobius& m) {
    if (m.c == 0) return ParamCoord::infinity();
    return ParamCoord::finite(m.a / m.c);
}

std::string ParamCoord::to_string() const {
    switch (kind) {
        case Kind::Finite: return izeta::to_string(value);
        case Kind::Infinity: return "inf";
        case Kind::Batch: return "roots of " + batch.to_string("v");
        default: return "?";
    }
}

const ComponentRecord& ResolutionOutput::comp(const std::string& id) const {
    return components[static_cast<std::size_t>(comp_index(id))];
}

int ResolutionOutput::comp_index(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return c.index;
    throw InputError("unknown component '" + id + "'");
}

namespace {

BivariatePoly translate_y(const BivariatePoly& p, const Rational& t) {
    if (t == 0) return p;
    return p.subst(BivariatePoly::var_x(), BivariatePoly::var_y() + BivariatePoly(t));
}

int order_at_axis_point(const BivariatePoly& p, const Rational& t) {
    BivariatePoly q = translate_y(p, t);
    if (q.is_zero()) throw InternalError("order of zero polynomial at a point");
    return q.order_at_origin();
}

std::string next_id(const std::vector<ComponentRecord>& comps, ComponentKind kind) {
    int n = 0;
    for (const auto& c : comps)
        if (c.kind == kind) ++n;
    return (kind == ComponentKind::Exceptional ? "E" : "W") + std::to_string(n + 1);
}

}  // namespace

ResolutionOutput initial_resolution_state(const Ideal& ideal);

int blow_up_point(ResolutionOutput& R, int chart_id, const Rational& t,
                  std::optional<int> extra_incident) {
    const Chart parent = R.charts.at(static_cast<std::size_t>(chart_id));  // copy: vector grows
    if (parent.blown) throw InternalError("chart was already blown up");

    const bool corner = (t == 0) && parent.axis_v.comp.has_value();
    if (!parent.axis_u.comp) {
        const bool root_origin = parent.subst == Chart::Subst::Root && t == 0;
        if (!root_origin && !corner)
            throw InputError("blow-up center does not lie over the origin");
    }

    std::vector<int> incident;
    if (parent.axis_u.comp) incident.push_back(*parent.axis_u.comp);
    if (corner) incident.push_back(*parent.axis_v.comp);
    if (extra_incident) incident.push_back(*extra_incident);
    if (incident.size() > 2)
        throw InputError("blow-up center lies on more than two components");

    // Multiplicity of the weak part of the total transform at the center.
    long long weak_order = 0;
    for (const auto& br : parent.branches) {
        BivariatePoly tr = translate_y(br.strict, t);
        if (tr.eval(Rational(0), Rational(0)) != 0) continue;
        weak_order +=
            static_cast<long long>(R.layers[static_cast<std::size_t>(br.layer)].multiplicity) *
            tr.order_at_origin();
    }
    long long res_ord = 0;
    if (!parent.w_res_unit) {
        int best = -1;
        for (const auto& g : parent.w_res) {
            int o = order_at_axis_point(g, t);
            if (best < 0 || o < best) best = o;
        }
        res_ord = best < 0 ? 0 : best;
    }

    long long n_new = weak_order + res_ord;
    long long m_new = res_ord;
    long long nu_new = 2;
    for (int ci : incident) {
        const auto& c = R.components[static_cast<std::size_t>(ci)];
        n_new += c.N;
        m_new += c.M;
        nu_new += c.nu - 1;
    }
    if (n_new < 1) throw InternalError("new exceptional component with N < 1");

    if (res_ord > 0) {
        if (parent.axis_u.comp)
            R.components[static_cast<std::size_t>(*parent.axis_u.comp)].base_params.push_back(
                mobius_eval(parent.axis_u.to_birth, t));
        if (corner)
            R.components[static_cast<std::size_t>(*parent.axis_v.comp)].base_params.push_back(
                mobius_eval(parent.axis_v.to_birth, Rational(0)));
    }

    ComponentRecord rec;
    rec.index = static_cast<int>(R.components.size());
    rec.id = next_id(R.components, ComponentKind::Exceptional);
    rec.kind = ComponentKind::Exceptional;
    rec.N = n_new;
    rec.M = m_new;
    rec.nu = nu_new;
    rec.self_int = -1;

    for (int ci : incident) R.components[static_cast<std::size_t>(ci)].self_int -= 1;

    // The strict transforms of two components through the center separate.
    if (corner && parent.axis_u.comp) {
        int a = *parent.axis_u.comp, b = *parent.axis_v.comp;
        bool found = false;
        for (auto& e : R.edges) {
            if (!e.alive) continue;
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
                e.alive = false;
                found = true;
                break;
            }
        }
        if (!found && !extra_incident)
            throw InternalError("corner blow-up without a matching edge");
    }

    auto substituted_chart = [&](Chart::Subst kind) {
        Chart ch;
        ch.parent = chart_id;
        ch.subst = kind;
        ch.center_t = t;
        BivariatePoly px, py;
        if (kind == Chart::Subst::A) {
            px = BivariatePoly::var_x();
            py = BivariatePoly(t) + BivariatePoly::var_x() * BivariatePoly::var_y();
        } else {
            px = BivariatePoly::var_x() * BivariatePoly::var_y();
            py = BivariatePoly(t) + BivariatePoly::var_y();
        }
        ch.X = parent.X.subst(px, py);
        ch.Y = parent.Y.subst(px, py);
        ch.w_res_unit = parent.w_res_unit;
        if (!parent.w_res_unit) {
            std::vector<BivariatePoly> gens;
            int strip = -1;
            for (const auto& g : parent.w_res) {
                BivariatePoly s = g.subst(px, py);
                int o = kind == Chart::Subst::A ? s.order_x() : s.order_y();
                if (strip < 0 || o < strip) strip = o;
                gens.push_back(std::move(s));
            }
            for (auto& s : gens) {
                s = kind == Chart::Subst::A ? s.shift_down_x(strip) : s.shift_down_y(strip);
                if (s.is_constant()) ch.w_res_unit = true;
            }
            if (!ch.w_res_unit) ch.w_res = std::move(gens);
        }
        for (const auto& br : parent.branches) {
            BivariatePoly s = br.strict.subst(px, py);
            int o = kind == Chart::Subst::A ? s.order_x() : s.order_y();
            s = kind == Chart::Subst::A ? s.shift_down_x(o) : s.shift_down_y(o);
            if (!s.is_constant()) ch.branches.push_back({br.layer, std::move(s)});
        }
        return ch;
    };

    Chart a = substituted_chart(Chart::Subst::A);
    a.axis_u = {rec.index, Mobius::identity()};
    if (corner) a.axis_v = {parent.axis_v.comp, parent.axis_v.to_birth};
    Chart b = substituted_chart(Chart::Subst::B);
    if (parent.axis_u.comp)
        b.axis_u = {parent.axis_u.comp,
                    Mobius::compose(parent.axis_u.to_birth, Mobius::translation(t))};
    b.axis_v = {rec.index, Mobius::inversion()};

    a.id = static_cast<int>(R.charts.size());
    b.id = a.id + 1;
    rec.birth_chart_a = a.id;
    rec.birth_chart_b = b.id;

    // Crossings of the new curve with the strict transforms through the center.
    if (parent.axis_u.comp) {
        EdgeRecord e;
        e.a = rec.index;
        e.b = *parent.axis_u.comp;
        e.on_a = ParamCoord::infinity();
        e.on_b = mobius_eval(parent.axis_u.to_birth, t);
        e.label = rec.id + "*" + R.components[static_cast<std::size_t>(e.b)].id;
        R.edges.push_back(std::move(e));
    }
    if (corner) {
        EdgeRecord e;
        e.a = rec.index;
        e.b = *parent.axis_v.comp;
        e.on_a = ParamCoord::finite(Rational(0));
        e.on_b = mobius_eval(parent.axis_v.to_birth, Rational(0));
        e.label = rec.id + "*" + R.components[static_cast<std::size_t>(e.b)].id;
        R.edges.push_back(std::move(e));
    }

    auto& pc = R.charts[static_cast<std::size_t>(chart_id)];
    pc.blown = true;
    pc.blown_t = t;
    pc.child_a = a.id;
    pc.child_b = b.id;
    R.charts.push_back(std::move(a));
    R.charts.push_back(std::move(b));
    R.components.push_back(std::move(rec));
    R.blow_up_count += 1;
    return static_cast<int>(R.components.size()) - 1;
}

namespace {

// ---------------------------------------------------------------------------
// The principalization loop. Candidates live on the u-axis of a live chart;
// a pending corner (t = 0 with both axes labelled) is always processed before
// the other candidates of the same chart, and remaining candidates are
// re-homed into the B child, where the same component is again the u-axis.
// ---------------------------------------------------------------------------

struct Engine {
    ResolutionOutput& R;
    const PrincipalizeOptions& opts;
    std::map<int, std::vector<Rational>> pending;
    std::deque<int> queue;

    void add_pending(int chart_id, const Rational& t) {
        auto& v = pending[chart_id];
        if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
    }

    void sort_pending(int chart_id) {
        const Chart& c = R.charts[static_cast<std::size_t>(chart_id)];
        bool has_corner_axis = c.axis_v.comp.has_value();
        auto& v = pending[chart_id];
        std::sort(v.begin(), v.end(), [&](const Rational& x, const Rational& y) {
            bool cx = has_corner_axis && x == 0, cy = has_corner_axis && y == 0;
            if (cx != cy) return cx;
            return x < y;
        });
    }

    void make_weak_node(int layer, int host_comp, ParamCoord on_host, const std::string& where) {
        ComponentRecord rec;
        rec.index = static_cast<int>(R.components.size());
        rec.id = next_id(R.components, ComponentKind::Weak);
        rec.kind = ComponentKind::Weak;
        rec.N = R.layers[static_cast<std::size_t>(layer)].multiplicity;
        rec.M = 0;
        rec.nu = 1;
        rec.layer = layer;
        rec.where = where;
        if (host_comp >= 0) {
            EdgeRecord e;
            e.a = host_comp;
            e.b = rec.index;
            e.on_a = std::move(on_host);
            e.on_b = ParamCoord::unknown();
            e.label = R.components[static_cast<std::size_t>(host_comp)].id + "*" + rec.id;
            R.edges.push_back(std::move(e));
        }
        R.components.push_back(std::move(rec));
    }

    [[noreturn]] void irrational(const std::string& comp_id, const UnivariatePoly& cofactor) {
        throw IrrationalCenterError(
            "principalization needs a blow-up at a non-rational point of " + comp_id,
            cofactor.to_string("v"));
    }

    // Examines the newly created component on its birth charts: queues every
    // point that still violates the stopping condition and records the clean
    // crossings of weak-transform branches as graph data.
    void scan_new_component(int comp_idx) {
        const ComponentRecord& comp = R.components[static_cast<std::size_t>(comp_idx)];
        const Chart& A = R.charts[static_cast<std::size_t>(comp.birth_chart_a)];
        const Chart& B = R.charts[static_cast<std::size_t>(comp.birth_chart_b)];

        std::set<Rational> cands;
        auto must_blow_roots = [&](const UnivariatePoly& p) {
            if (p.degree() < 1) return;
            auto rr = rational_roots(p);
            if (rr.nonrational_cofactor.degree() >= 1)
                irrational(comp.id, rr.nonrational_cofactor);
            for (const auto& r : rr.roots) cands.insert(r);
        };

        // Residual ideal still vanishing along the new curve.
        if (!A.w_res_unit) {
            UnivariatePoly G;
            for (const auto& g : A.w_res) {
                UnivariatePoly r = g.at_x_zero();
                if (r.is_zero()) continue;
                G = G.is_zero() ? r.normalized() : gcd(G, r);
                if (G.degree() == 0) break;
            }
            if (G.is_zero()) throw InternalError("residual restriction vanished identically");
            must_blow_roots(G);
        }

        // Weak-transform branches crossing the new curve.
        std::vector<std::pair<int, UnivariatePoly>> restrictions;
        for (std::size_t i = 0; i < A.branches.size(); ++i) {
            UnivariatePoly P = A.branches[i].strict.at_x_zero();
            if (P.is_zero()) throw InternalError("branch restriction vanished identically");
            restrictions.emplace_back(static_cast<int>(i), P);
        }
        for (const auto& [bi, P] : restrictions) {
            must_blow_roots(gcd(P, P.derivative()));  // tangency or singular point
            if (A.axis_v.comp && P.eval(Rational(0)) == 0) cands.insert(Rational(0));
        }
        for (std::size_t i = 0; i < restrictions.size(); ++i)
            for (std::size_t j = i + 1; j < restrictions.size(); ++j)
                must_blow_roots(gcd(restrictions[i].second, restrictions[j].second));

        // Whatever crossings survive are transverse, simple and away from
        // everything else: they become weak nodes of the graph.
        for (const auto& [bi, P] : restrictions) {
            UnivariatePoly Q = squarefree_part(P);
            for (const auto& t : cands) {
                if (Q.eval(t) == 0) {
                    auto d = Q.divide_exact(UnivariatePoly({-t, Rational(1)}));
                    if (!d) throw InternalError("clean-crossing deflation failed");
                    Q = *d;
                }
            }
            auto rr = rational_roots(Q);
            int layer = A.branches[static_cast<std::size_t>(bi)].layer;
            for (const auto& r : rr.roots)
                make_weak_node(layer, comp_idx, ParamCoord::finite(r),
                               comp.id + " at v=" + izeta::to_string(r));
            if (rr.nonrational_cofactor.degree() >= 1) {
                for (int k = 0; k < rr.nonrational_cofactor.degree(); ++k)
                    make_weak_node(layer, comp_idx,
                                   ParamCoord::batch_of(rr.nonrational_cofactor),
                                   comp.id + " at roots of " +
                                       rr.nonrational_cofactor.to_string("v"));
            }
        }

        for (const auto& t : cands) add_pending(A.id, t);

        // The one point of the new curve that chart A misses is the corner of
        // chart B.
        bool b_w_vanishes = false;
        if (!B.w_res_unit) {
            b_w_vanishes = true;
            for (const auto& g : B.w_res)
                if (g.eval(Rational(0), Rational(0)) != 0) b_w_vanishes = false;
        }
        std::vector<int> through;
        for (std::size_t i = 0; i < B.branches.size(); ++i)
            if (B.branches[i].strict.eval(Rational(0), Rational(0)) == 0)
                through.push_back(static_cast<int>(i));
        if (b_w_vanishes || through.size() >= 2 || (through.size() == 1 && B.axis_u.comp)) {
            add_pending(B.id, Rational(0));
        } else if (through.size() == 1) {
            const BivariatePoly& w = B.branches[static_cast<std::size_t>(through[0])].strict;
            int contact = w.at_y_zero().order_at_zero();  // contact with the curve {v=0}
            int mult = w.order_at_origin();
            if (contact >= 2 || mult >= 2) {
                add_pending(B.id, Rational(0));
            } else {
                make_weak_node(B.branches[static_cast<std::size_t>(through[0])].layer, comp_idx,
                               ParamCoord::infinity(), comp.id + " at v=inf");
            }
        }
    }

    void run() {
        while (!queue.empty()) {
            int cid = queue.front();
            queue.pop_front();
            auto it = pending.find(cid);
            if (it == pending.end() || it->second.empty()) continue;
            sort_pending(cid);
            std::vector<Rational> list = it->second;
            pending.erase(it);
            Rational t = list.front();

            if (R.blow_up_count >= opts.max_blow_ups)
                throw InternalError("blow-up budget exhausted; the loop did not terminate");
            int nc = blow_up_point(R, cid, t);
            const Chart& pc = R.charts[static_cast<std::size_t>(cid)];
            for (std::size_t i = 1; i < list.size(); ++i)
                add_pending(pc.child_b, list[i] - t);
            scan_new_component(nc);
            queue.push_back(pc.child_a);
            queue.push_back(pc.child_b);
        }
    }
};

bool linear_parts_proportional(const BivariatePoly& p, const BivariatePoly& q) {
    Rational px(0), py(0), qx(0), qy(0);
    for (const auto& [e, c] : p.terms()) {
        if (e.x == 1 && e.y == 0) px = c;
        if (e.x == 0 && e.y == 1) py = c;
    }
    for (const auto& [e, c] : q.terms()) {
        if (e.x == 1 && e.y == 0) qx = c;
        if (e.x == 0 && e.y == 1) qy = c;
    }
    return px * qy - py * qx == 0;
}

void verify_component_multiplicities(const ResolutionOutput& R) {
    for (const auto& comp : R.components) {
        if (comp.kind != ComponentKind::Exceptional) continue;
        const Chart& A = R.charts[static_cast<std::size_t>(comp.birth_chart_a)];
        int best = -1;
        for (const auto& f : R.input.generators) {
            BivariatePoly pull = f.subst(A.X, A.Y);
            if (pull.is_zero()) throw InternalError("zero pullback of a generator");
            int o = pull.order_x();
            if (best < 0 || o < best) best = o;
        }
        if (best != comp.N)
            throw InternalError("multiplicity bookkeeping mismatch at " + comp.id + ": direct " +
                                std::to_string(best) + " vs incremental " +
                                std::to_string(comp.N));
    }
}

}  // namespace

ResolutionOutput initial_resolution_state(const Ideal& ideal) {
    ResolutionOutput R;
    R.input = ideal;
    R.split = split_principal_part(ideal);
    if (!R.split.h.is_constant()) {
        auto dec = squarefree_decompose(R.split.h);
        for (const auto& f : dec.factors) R.layers.push_back({f.factor, f.exponent});
    }
    Chart root;
    root.id = 0;
    root.subst = Chart::Subst::Root;
    root.X = BivariatePoly::var_x();
    root.Y = BivariatePoly::var_y();
    root.w_res_unit = R.split.residual_is_unit;
    if (!root.w_res_unit) root.w_res = R.split.residual;
    for (std::size_t i = 0; i < R.layers.size(); ++i)
        root.branches.push_back({static_cast<int>(i), R.layers[i].poly});
    R.charts.push_back(std::move(root));
    return R;
}

void rebuild_graph(ResolutionOutput& R) {
    DualGraph g;
    for (const auto& c : R.components) {
        Component out;
        out.id = c.id;
        out.kind = c.kind;
        out.N = c.N;
        out.nu = c.nu;
        if (c.kind == ComponentKind::Exceptional) out.self_intersection = c.self_int;
        out.over_origin = true;
        g.components.push_back(std::move(out));
    }
    for (const auto& e : R.edges) {
        if (!e.alive) continue;
        g.edges.push_back({R.components[static_cast<std::size_t>(e.a)].id,
                           R.components[static_cast<std::size_t>(e.b)].id, e.label});
    }
    g.metadata["ideal"] = R.input.to_string();
    g.metadata["h"] = R.split.h.to_string();
    if (!g.exceptional_ids().empty()) {
        auto derived = derive_generic_counts(g);
        for (auto& c : g.components)
            if (c.kind == ComponentKind::Exceptional) c.n_generic = derived.at(c.id);
    }
    R.graph = std::move(g);
}

ResolutionOutput principalize(const Ideal& ideal, const PrincipalizeOptions& opts) {
    ResolutionOutput R = initial_resolution_state(ideal);
    Engine eng{R, opts, {}, {}};

    const Chart& root = R.charts[0];
    bool res_vanishes = false;
    if (!root.w_res_unit) {
        res_vanishes = true;
        for (const auto& gen : root.w_res)
            if (gen.eval(Rational(0), Rational(0)) != 0) res_vanishes = false;
    }
    std::vector<int> through;
    for (std::size_t i = 0; i < root.branches.size(); ++i)
        if (root.branches[i].strict.eval(Rational(0), Rational(0)) == 0)
            through.push_back(static_cast<int>(i));
    bool blow = res_vanishes || through.size() >= 3;
    for (int bi : through)
        if (root.branches[static_cast<std::size_t>(bi)].strict.order_at_origin() >= 2) blow = true;
    if (!blow && through.size() == 2 &&
        linear_parts_proportional(root.branches[static_cast<std::size_t>(through[0])].strict,
                                  root.branches[static_cast<std::size_t>(through[1])].strict))
        blow = true;

    if (!blow) {
        // Already a simple normal crossing at the origin; no blow-ups needed.
        for (int bi : through)
            eng.make_weak_node(root.branches[static_cast<std::size_t>(bi)].layer, -1, {},
                               "origin");
        if (through.size() == 2) {
            EdgeRecord e;
            e.a = 0;
            e.b = 1;
            e.on_a = ParamCoord::unknown();
            e.on_b = ParamCoord::unknown();
            e.label = "origin";
            R.edges.push_back(std::move(e));
        }
    } else {
        eng.add_pending(0, Rational(0));
        eng.queue.push_back(0);
        eng.run();
    }

    rebuild_graph(R);
    if (opts.verify_multiplicities) verify_component_multiplicities(R);
    return R;
}

LocatedPoint locate_point(const ResolutionOutput& R, const std::string& comp_id,
                          const Rational& param) {
    const ComponentRecord& comp = R.comp(comp_id);
    if (comp.kind != ComponentKind::Exceptional)
        throw InputError("locate_point expects an exceptional component");
    int cid = comp.birth_chart_a;
    Rational v = param;
    for (;;) {
        const Chart& c = R.charts[static_cast<std::size_t>(cid)];
        if (!c.blown) return {cid, v};
        if (v == c.blown_t) {
            // The point was blown up; the strict transform meets the new
            // exceptional curve at the corner of the B chart.
            cid = c.child_b;
            v = Rational(0);
            continue;
        }
        v = v - c.blown_t;
        cid = c.child_b;
    }
}

OccupiedParams occupied_params(const ResolutionOutput& R, const std::string& comp_id) {
    int idx = R.comp_index(comp_id);
    OccupiedParams out;
    for (const auto& e : R.edges) {
        if (!e.alive) continue;
        const ParamCoord* pc = nullptr;
        if (e.a == idx) pc = &e.on_a;
        if (e.b == idx) pc = &e.on_b;
        if (!pc) continue;
        switch (pc->kind) {
            case ParamCoord::Kind::Finite: out.finite.push_back(pc->value); break;
            case ParamCoord::Kind::Infinity: out.infinity = true; break;
            case ParamCoord::Kind::Batch: out.batches.push_back(pc->batch); break;
            case ParamCoord::Kind::Unknown:
                throw InternalError("crossing with unknown coordinate on " + comp_id);
        }
    }
    std::sort(out.finite.begin(), out.finite.end());
    out.finite.erase(std::unique(out.finite.begin(), out.finite.end()), out.finite.end());
    return out;
}

int blow_up_extra_free_point(ResolutionOutput& R, const std::string& comp_id) {
    OccupiedParams occ = occupied_params(R, comp_id);
    Rational t;
    for (long long k = 1;; ++k) {
        Rational cand(k);
        bool taken = std::find(occ.finite.begin(), occ.finite.end(), cand) != occ.finite.end();
        for (const auto& b : occ.batches)
            if (b.eval(cand) == 0) taken = true;
        if (!taken) {
            t = cand;
            break;
        }
    }
    LocatedPoint lp = locate_point(R, comp_id, t);
    return blow_up_point(R, lp.chart_id, lp.t);
}

std::optional<int> blow_up_extra_edge_point(ResolutionOutput& R, std::size_t edge_index) {
    if (edge_index >= R.edges.size() || !R.edges[edge_index].alive)
        throw InputError("no such alive edge");
    EdgeRecord e = R.edges[edge_index];
    const auto& ca = R.components[static_cast<std::size_t>(e.a)];
    const auto& cb = R.components[static_cast<std::size_t>(e.b)];
    if (ca.kind != ComponentKind::Exceptional || cb.kind != ComponentKind::Exceptional)
        return std::nullopt;

    int from, other;
    ParamCoord from_coord, other_coord;
    if (e.on_a.kind == ParamCoord::Kind::Finite) {
        from = e.a;
        other = e.b;
        from_coord = e.on_a;
        other_coord = e.on_b;
    } else if (e.on_b.kind == ParamCoord::Kind::Finite) {
        from = e.b;
        other = e.a;
        from_coord = e.on_b;
        other_coord = e.on_a;
    } else {
        return std::nullopt;
    }

    LocatedPoint lp =
        locate_point(R, R.components[static_cast<std::size_t>(from)].id, from_coord.value);
    const Chart& host = R.charts[static_cast<std::size_t>(lp.chart_id)];
    if (lp.t == 0 && host.axis_v.comp && *host.axis_v.comp == other)
        return blow_up_point(R, lp.chart_id, Rational(0));  // visible corner

    int nc = blow_up_point(R, lp.chart_id, lp.t, other);
    R.edges[edge_index].alive = false;
    EdgeRecord ne;
    ne.a = nc;
    ne.b = other;
    ne.on_a = ParamCoord::unknown();
    ne.on_b = other_coord;
    ne.label = R.components[static_cast<std::size_t>(nc)].id + "*" +
               R.components[static_cast<std::size_t>(other)].id;
    R.edges.push_back(std::move(ne));
    return nc;
}

namespace {

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

GenericMemberResult generic_member(const ResolutionOutput& R, long long seed) {
    if (R.split.residual_is_unit)
        throw InputError("generic member is undefined for a principal ideal (unit residual)");
    const int retries = 40;
    const std::size_t r = R.split.residual.size();

    for (int attempt = 0; attempt < retries; ++attempt) {
        SplitMix rng(static_cast<std::uint64_t>(seed) * 0x100000001b3ULL +
                     static_cast<std::uint64_t>(attempt));
        GenericMemberResult out;
        out.attempts = attempt + 1;
        BivariatePoly g;
        for (std::size_t k = 0; k < r; ++k) {
            Rational lambda(static_cast<long long>(rng.next() % 997) + 1);
            out.lambdas.push_back(lambda);
            g = g + R.split.residual[k] * lambda;
        }
        out.g = g;

        bool ok = !g.is_zero();
        for (const auto& comp : R.components) {
            if (!ok) break;
            if (comp.kind != ComponentKind::Exceptional) continue;
            const Chart& A = R.charts[static_cast<std::size_t>(comp.birth_chart_a)];
            const Chart& B = R.charts[static_cast<std::size_t>(comp.birth_chart_b)];
            BivariatePoly pull = g.subst(A.X, A.Y);
            if (pull.is_zero() || pull.order_x() != comp.M) {
                ok = false;  // coefficient choice dropped the generic multiplicity
                break;
            }
            // Strict transform: remove every exceptional axis multiplicity.
            BivariatePoly strict = pull.shift_down_x(static_cast<int>(comp.M));
            if (A.axis_v.comp) {
                strict = strict.shift_down_y(strict.order_y());
            } else if (strict.order_y() > 0) {
                ok = false;  // the member contains a coordinate curve
                break;
            }
            UnivariatePoly P = strict.at_x_zero();
            if (P.is_zero()) {
                ok = false;
                break;
            }

            // Every member goes through the base points that later blow-ups
            // removed; those roots carry no final intersection.
            std::vector<Rational> base_finite;
            bool base_at_inf = false;
            for (const auto& bp : comp.base_params) {
                if (bp.kind == ParamCoord::Kind::Finite) base_finite.push_back(bp.value);
                if (bp.kind == ParamCoord::Kind::Infinity) base_at_inf = true;
            }
            for (const auto& p : base_finite) {
                UnivariatePoly lin({-p, Rational(1)});
                while (!P.is_constant() && P.eval(p) == 0) {
                    auto d = P.divide_exact(lin);
                    if (!d) throw InternalError("base-point deflation failed");
                    P = *d;
                }
            }

            if (gcd(P, P.derivative()).degree() != 0) {
                ok = false;  // tangency or a double crossing
                break;
            }
            OccupiedParams occ = occupied_params(R, comp.id);
            for (const auto& p : occ.finite)
                if (P.eval(p) == 0) ok = false;
            for (const auto& bp : occ.batches)
                if (gcd(P, bp).degree() != 0) ok = false;
            if (!ok) break;
            if (!base_at_inf) {
                // The point chart A misses: the strict transform must avoid it.
                BivariatePoly pullB = g.subst(B.X, B.Y);
                BivariatePoly strictB = pullB.shift_down_y(pullB.order_y());
                if (B.axis_u.comp) {
                    strictB = strictB.shift_down_x(strictB.order_x());
                } else if (strictB.order_x() > 0) {
                    ok = false;
                    break;
                }
                if (strictB.eval(Rational(0), Rational(0)) == 0) {
                    ok = false;
                    break;
                }
            }
            out.counts[comp.id] = P.degree();
        }
        if (!ok) continue;

        // Two independent computations of the same count must agree; a
        // disagreement means the draw was not generic after all.
        for (const auto& c : R.graph.components) {
            if (c.kind != ComponentKind::Exceptional) continue;
            if (!c.n_generic || out.counts.at(c.id) != *c.n_generic) {
                ok = false;
                break;
            }
        }
        if (ok) return out;
    }
    throw GenericPositionError(seed);
}

}  // namespace izeta
