#pragma once

#include <string>
#include <vector>

#include "izeta/monodromy.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

enum class CertificateKind { WitnessComponent, ClusterWitness, Violation };

// Evidence that exp(2 pi i s0) is a monodromy eigenvalue for one pole s0 of
// the local topological zeta function. Certificates re-verify their claims
// numerically; a Violation is representable so that a failure surfaces as
// data rather than as a silent pass.
struct PoleCertificate {
    Rational pole;  // s0 = -a/d, reduced
    CertificateKind kind = CertificateKind::Violation;
    std::string witness;   // component id or cluster id
    std::string group_id;  // image group backing a component witness
    CyclotomicFactored zeta;
    long long order = 0;
    long long chi_sum = 0;  // cluster case only
    std::string eigenvalue;
    std::vector<std::string> diagnostics;
};

struct ConjectureReport {
    std::vector<PoleCertificate> certificates;
    bool verified() const {
        for (const auto& c : certificates)
            if (c.kind == CertificateKind::Violation) return false;
        return true;
    }
};

// One pole: find a non-contracted component whose multiplicity is divisible
// by the pole's denominator and certify via its generic-point zeta;
// otherwise fall back to the cluster of the exceptional curve realizing the
// pole and certify via the negative chi-sum.
PoleCertificate check_pole(const DualGraph& g, const MonodromyAnalysis& mono,
                           const PoleList& poles, const Rational& s0);

ConjectureReport check_conjecture(const DualGraph& g, const MonodromyAnalysis& mono,
                                  const PoleList& poles);

}  // namespace izeta
