#include "izeta/conjecture.hpp"

#include <algorithm>

namespace izeta {

namespace {

std::string eigenvalue_text(const Int& a, const Int& d) {
    return "exp(-2*pi*i*" + a.str() + "/" + d.str() + ")";
}

}  // namespace

PoleCertificate check_pole(const DualGraph& gin, const MonodromyAnalysis& mono,
                           const PoleList& poles, const Rational& s0) {
    bool is_pole = false;
    for (const auto& p : poles) is_pole = is_pole || p.value == s0;
    if (!is_pole)
        throw InputError(to_string(s0) + " is not a pole of the local topological zeta function");

    DualGraph g = with_generic_counts(gin);
    PoleCertificate cert;
    cert.pole = s0;
    Int a = -num(s0), d = den(s0);
    if (a <= 0) throw InputError("pole is expected to be negative");
    cert.eigenvalue = eigenvalue_text(a, d);
    long long dd = d.convert_to<long long>();

    // Case 1: a non-contracted component with d | N.
    const Component* witness = nullptr;
    for (const auto& c : g.components) {
        if (!c.over_origin || c.N % dd != 0) continue;
        if (c.kind == ComponentKind::Exceptional && mono.contracted.count(c.id)) continue;
        if (!witness || c.N < witness->N || (c.N == witness->N && c.id < witness->id))
            witness = &c;
    }
    if (witness) {
        const ComponentImageGroup* grp = mono.group_of(witness->id);
        if (!grp) {
            cert.diagnostics.push_back("no image group for witness " + witness->id);
            return cert;
        }
        cert.witness = witness->id;
        cert.group_id = grp->id;
        cert.zeta = grp->zeta;
        cert.order = eigenvalue_order(cert.zeta, Rational(a, d));
        if (cert.order >= 1) {
            cert.kind = CertificateKind::WitnessComponent;
        } else {
            cert.diagnostics.push_back("witness zeta has no zero at the claimed eigenvalue");
        }
        return cert;
    }

    // Case 2: every component with d | N is contracted. The pole then comes
    // from an exceptional curve meeting at least three others; its cluster
    // carries the eigenvalue.
    const Component* em = nullptr;
    for (const auto& c : g.components) {
        if (c.kind != ComponentKind::Exceptional || !c.over_origin) continue;
        if (Rational(-c.nu, c.N) != s0) continue;
        if (g.edge_endpoint_count(c.id) >= 3) {
            em = &c;
            break;
        }
    }
    if (!em) {
        cert.diagnostics.push_back(
            "no exceptional curve with this pole meets three other components");
        return cert;
    }
    const Cluster* cl = mono.cluster_of(em->id);
    if (!cl) {
        cert.diagnostics.push_back("curve " + em->id + " realizing the pole is not contracted");
        return cert;
    }
    cert.witness = cl->id;
    cert.zeta = cl->zeta;
    long long chi_sum = 0;
    for (const auto& m : cl->members)
        if (g.at(m).N % dd == 0) chi_sum += chi_open(g, m);
    cert.chi_sum = chi_sum;
    cert.order = eigenvalue_order(cert.zeta, Rational(a, d));
    if (chi_sum < 0 && cert.order != 0) {
        cert.kind = CertificateKind::ClusterWitness;
    } else {
        if (chi_sum >= 0)
            cert.diagnostics.push_back("chi-sum over the cluster is not negative: " +
                                       std::to_string(chi_sum));
        if (cert.order == 0)
            cert.diagnostics.push_back("cluster zeta has order zero at the claimed eigenvalue");
    }
    return cert;
}

ConjectureReport check_conjecture(const DualGraph& g, const MonodromyAnalysis& mono,
                                  const PoleList& poles) {
    ConjectureReport rep;
    for (const auto& p : poles) rep.certificates.push_back(check_pole(g, mono, poles, p.value));
    return rep;
}

}  // namespace izeta
