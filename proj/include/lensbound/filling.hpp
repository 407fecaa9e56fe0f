#pragma once

/**
 * Decision procedures for symplectic filling and smooth embedding
 * questions about lens spaces and their connected sums.  Every decision
 * returns a Verdict: the yes/no answer together with witnesses, a
 * replayable derivation, and the bounds that make a "no" exhaustive.
 */

#include <string>
#include <vector>

#include "lensbound/rational.hpp"

namespace lensbound {

struct DerivationStep {
    std::string text;
    std::string ref;  // the classical result the step leans on

    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Witness {
    std::string label;
    std::vector<std::pair<std::string, long long>> values;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool yes = false;
    std::vector<Witness> witnesses;     // non-empty for yes
    std::vector<DerivationStep> derivation;
    std::string bounds;                 // search space covered; non-empty for no

    std::string answer() const { return yes ? "yes" : "no"; }
};

// Lisca's criterion: (L(p,q), xi_std) has a symplectic rational-homology-
// ball filling iff p = m^2 and some orientation-preserving representative
// q' in {q, q^-1 mod p} equals mh - 1 with gcd(m, h) = 1.  Requires p >= 2.
Verdict lisca_qhb_filling(const LensSpace& lens);

// Decision core without derivation strings, for sweeps.  On success
// fills (m, h, rep).
bool lisca_qhb_accepts(long long p, long long q, long long* m_out = nullptr,
                       long long* h_out = nullptr, long long* rep_out = nullptr);

// Whether any contact structure on L(p,q) # L(p,p-q) has a rational-
// homology-ball filling: both summands would need a Lisca filling, and
// the arithmetic rules that out for every p >= 2.
Verdict sum_qhb_filling(long long p, long long q);

// Fintushel-Stern / Gilmer-Livingston: L(p,q1) # L(p,q2) embeds in S^4
// iff p is odd and L(p,q2) = L(p,p-q1) up to oriented homeomorphism.
// Requires p1, p2 >= 2.
Verdict embeds_s4_pair(const LensSpace& l1, const LensSpace& l2);

// Donald: a sum of lens spaces embeds in R^4 iff it is Y # -Y.  With
// strict_odd every summand order must also be odd, matching the
// two-summand criterion.
Verdict embeds_s4_sum(const ConnectedSum& sum, bool strict_odd = true);

// Epstein-Zeeman: the punctured L(p,q) embeds in R^4 iff p = 1 or p odd.
bool punctured_embeds_r4(const LensSpace& lens);

}  // namespace lensbound
