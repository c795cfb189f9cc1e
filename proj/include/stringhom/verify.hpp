#pragma once

// Verification suites: executable forms of the structural identities and
// homology-dimension statements. The CLI `verify` subcommand and the
// acceptance runner both drive these.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stringhom/diagrams.hpp"

namespace stringhom {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // short failure context or summary counts
};

using Suite = std::vector<Check>;

// d2: the differential squares to zero, exhaustively and on random elements.
Suite suite_d2(int max_weight);
// commutators: decay/fusion and source-operator commutation relations.
Suite suite_commutators(int max_weight);
// weyl: level hierarchy, chain homotopies and homology of the model algebra,
// and the decay-sum decomposition of the differential.
Suite suite_weyl(int max_grade);
// sources: the source-operator chain homotopy on F11.
Suite suite_sources(int max_weight);
// chainmaps: diagonal sums, closing-off maps, disc maps, iota, bracket
// consistency, the x1*s_n relation and the diagonal boundary facts.
Suite suite_chainmaps(int max_weight);
// standardforms: planted standard-form recovery through the reductions.
Suite suite_standardforms(int cycles_per_family);
// dims: computed homology dimensions against the counting oracles.
Suite suite_dims();
// nonvanishing: disc-complex certificates and non-boundary diagonal sums.
Suite suite_nonvanishing();

// Individual checks, also used by the acceptance runner.
Check check_hx_dims();        // F00 vs fermionic counts, |w| <= 8, M <= 10
Check check_f02_dims();       // F02 arcs vs clean counts, mirrors via iota
Check check_f22_dims();       // four insular summands, a-capped windows, mirrors
Check check_f11_scans();      // scans reach 0 by M = 8; window classes die by M+2
Check check_weight_additivity(); // window dims additive over exact-weight slices
Check check_x1_relation();    // chain-level x1 * diagonal relation, n = 1..8

const std::vector<std::string>& suite_names(); // includes "all"
// Unknown suite -> std::invalid_argument.
Suite run_suite(std::string_view name, std::optional<int> max_weight);

// Deterministic random diagrams for property tests.
Generator random_generator(Cx cx, int max_weight, std::mt19937& rng);
Element random_element(Cx cx, int max_weight, int max_terms, std::mt19937& rng);

} // namespace stringhom
