#pragma once

// Standard-form reductions implemented as linear solves over truncated
// windows: a cycle is written as (standard form) + (boundary), and the
// standard-form coefficients are unique because the standard representatives
// form a homology basis of the window. The constructive proofs backing the
// forms appear only as test oracles.

#include <map>

#include "stringhom/diagrams.hpp"

namespace stringhom {

// F00: cycle = fermionic polynomial + diff(witness), fermionic part unique.
struct FermionicRep {
    Element fermionic; // F00
    Element witness;   // F00
};
FermionicRep fermionic_rep(const Element& cycle, HalfInt bound);

// F02, positive arcs: cycle = a_{1/2} * clean + diff(witness); `clean` is the
// unique positively clean polynomial (given as an element of F00).
struct F02Reduction {
    Element clean;   // F00
    Element witness; // F02
};
F02Reduction reduce_f02_plus(const Element& cycle, HalfInt bound);

// F22, a+/b+ summand: cycle = sum_i s_i * q[i] + diff(witness) with each q[i]
// positively clean; a_bound caps the a-degree of the window.
struct PpReduction {
    std::map<int, Element> q; // nonzero clean coefficients, keyed by diagonal
    Element witness;          // F22
};
PpReduction reduce_pp(const Element& cycle, HalfInt a_bound, HalfInt bound);

// F22, a+/b- summand: cycle = a_{1/2} b_{-1/2} * p + diff(witness) with p the
// unique totally clean polynomial.
struct PmReduction {
    Element totally_clean; // F00
    Element witness;       // F22
};
PmReduction reduce_pm(const Element& cycle, HalfInt bound);

} // namespace stringhom
