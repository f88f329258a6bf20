#include "eclipse/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace eclipse {

namespace {

// Draws k distinct values from candidates via partial Fisher-Yates.
// Mutates candidates; the first k slots hold the selection afterwards.
void sample_distinct(std::vector<std::size_t>& candidates, std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
        std::swap(candidates[i], candidates[pick(rng)]);
    }
}

void fill_honest_column(AdjacencyMatrix& a, std::size_t j, std::size_t p,
                        std::size_t q, std::size_t rows, Rng& rng,
                        std::vector<std::size_t>& scratch) {
    scratch.clear();
    for (std::size_t i = 0; i < p; ++i) {
        if (i != j) scratch.push_back(i);
    }
    sample_distinct(scratch, q, rng);
    for (std::size_t i = 0; i < q; ++i) {
        if (scratch[i] < rows) a.set(scratch[i], j, 1);
    }
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

void AttackScenario::validate() const {
    if (q == 0 || q >= p) {
        throw InvalidDegree("scenario: need 0 < q < p");
    }
    if (n < 2) {
        throw InvalidScenario("scenario: need n >= 2");
    }
    if (rows_used > p) {
        throw InvalidScenario("scenario: rows_used > p");
    }
    for (std::size_t v : victims) {
        if (v >= p) throw InvalidScenario("scenario: victim index out of range");
        if (contains(attackers, v)) {
            throw InvalidScenario("scenario: victims and attackers overlap");
        }
    }
    for (std::size_t a : attackers) {
        if (a >= p) throw InvalidScenario("scenario: attacker index out of range");
    }
    if (victim_edge_prob < 0.0 || victim_edge_prob > 1.0) {
        throw InvalidScenario("scenario: victim_edge_prob outside [0,1]");
    }
    if (attack) {
        if (tau == 0 || tau > n) {
            throw InvalidScenario("scenario: attack requires 1 <= tau <= n");
        }
        const double t = static_cast<double>(tau) / static_cast<double>(n);
        if (t <= delta || t >= 1.0 - delta) {
            throw InvalidScenario("scenario: tau/n must lie inside (delta, 1-delta)");
        }
        if (!attackers.empty() && q < victims.size()) {
            throw InvalidScenario("scenario: q smaller than the victim count");
        }
    }
}

AdjacencyMatrix sample_honest_snapshot(std::size_t p, std::size_t q,
                                       std::size_t rows_used, Rng& rng) {
    if (q == 0 || q >= p) {
        throw InvalidDegree("sample_honest_snapshot: need 0 < q < p");
    }
    const std::size_t rows = rows_used == 0 ? p : rows_used;
    AdjacencyMatrix a(rows, p);
    std::vector<std::size_t> scratch;
    scratch.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        fill_honest_column(a, j, p, q, rows, rng, scratch);
    }
    return a;
}

AdjacencyMatrix sample_attack_snapshot(const AttackScenario& s, Rng& rng) {
    s.validate();
    const std::size_t rows = s.effective_rows();
    AdjacencyMatrix a(rows, s.p);
    std::vector<std::size_t> scratch;
    scratch.reserve(s.p);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (std::size_t j = 0; j < s.p; ++j) {
        if (!contains(s.attackers, j)) {
            fill_honest_column(a, j, s.p, s.q, rows, rng, scratch);
            continue;
        }
        // Attacker column: force victim edges, fill the remainder uniformly
        // among non-victim, non-self vertices.
        std::size_t forced = 0;
        for (std::size_t v : s.victims) {
            if (v == j) continue;
            if (s.victim_edge_prob >= 1.0 || unit(rng) < s.victim_edge_prob) {
                if (v < rows) a.set(v, j, 1);
                ++forced;
            }
        }
        scratch.clear();
        for (std::size_t i = 0; i < s.p; ++i) {
            if (i != j && !contains(s.victims, i)) scratch.push_back(i);
        }
        const std::size_t rest = s.q - forced;
        sample_distinct(scratch, rest, rng);
        for (std::size_t i = 0; i < rest; ++i) {
            if (scratch[i] < rows) a.set(scratch[i], j, 1);
        }
    }
    return a;
}

GraphSequence generate_sequence(const AttackScenario& s) {
    s.validate();
    GraphSequence seq;
    seq.p = s.p;
    seq.q = s.q;
    seq.rows_used = s.effective_rows();
    seq.seed = s.seed;
    GroundTruth truth;
    truth.attack = s.attack;
    truth.tau = s.attack ? s.tau : 0;
    truth.victims = s.victims;
    truth.attackers = s.attackers;
    seq.truth = truth;

    seq.snapshots.reserve(s.n);
    for (std::size_t i = 1; i <= s.n; ++i) {
        Rng rng = make_rng(s.seed, i);
        if (s.attack && i >= s.tau) {
            seq.snapshots.push_back(sample_attack_snapshot(s, rng));
        } else {
            seq.snapshots.push_back(
                sample_honest_snapshot(s.p, s.q, seq.rows_used, rng));
        }
    }
    return seq;
}

GraphSequence apply_observation_noise(const GraphSequence& seq, double snr, Rng& rng) {
    if (std::isinf(snr)) {
        GraphSequence out = seq;
        out.snr = snr;
        return out;
    }
    if (snr < 1.0) {
        throw InvalidSnr("apply_observation_noise: need snr >= 1");
    }
    const double drop_below = 1.0 / snr;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GraphSequence out = seq;
    out.snr = snr;
    for (auto& snap : out.snapshots) {
        for (auto& e : snap.entries()) {
            const double u = unit(rng);
            if (u <= drop_below) e = 0;
        }
    }
    return out;
}

}  // namespace eclipse
