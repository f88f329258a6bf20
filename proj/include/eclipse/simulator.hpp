#pragma once

#include "eclipse/adjacency.hpp"
#include "eclipse/rng.hpp"

namespace eclipse {

// Parameters for generating one simulated dataset. Honest vertices pick q
// distinct neighbors uniformly (no self-loops). Attacker vertices force an
// edge to each victim with probability victim_edge_prob and fill the rest
// of their q choices uniformly among non-victim, non-self vertices, so
// column sums stay q.
struct AttackScenario {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t n = 0;
    std::size_t rows_used = 0;  // 0 -> keep all p rows
    bool attack = false;
    std::size_t tau = 0;  // 1-based onset, required when attack
    std::vector<std::size_t> victims;
    std::vector<std::size_t> attackers;
    double victim_edge_prob = 1.0;
    double delta = 0.1;  // onset must satisfy delta*n < tau < (1-delta)*n
    std::uint64_t seed = 0;

    std::size_t effective_rows() const { return rows_used == 0 ? p : rows_used; }
    void validate() const;
};

AdjacencyMatrix sample_honest_snapshot(std::size_t p, std::size_t q,
                                       std::size_t rows_used, Rng& rng);

AdjacencyMatrix sample_attack_snapshot(const AttackScenario& scenario, Rng& rng);

// Snapshots 1..tau-1 honest, tau..n attacked (all honest when attack is
// false). Snapshot i uses the sub-stream derive_seed(seed, i), so the
// output is identical whether indices are generated serially or in
// parallel.
GraphSequence generate_sequence(const AttackScenario& scenario);

// Entry-wise edge deletion: an observed 1 survives with probability
// 1 - 1/snr. snr = infinity keeps everything; snr = 1 deletes everything.
GraphSequence apply_observation_noise(const GraphSequence& seq, double snr, Rng& rng);

}  // namespace eclipse
