#pragma once

#include "pairrank/types.hpp"

namespace pairrank {

/// Binary entropy of (p, 1-p) in nats, with 0 ln 0 := 0.
/// Symmetric in p <-> 1-p; maximum ln 2 at p = 0.5. Throws DomainError
/// outside [0, 1].
double entropy_uncertainty(double p);

/// Log-likelihood of a ranking using only adjacent pairs:
/// sum over i of ln P(order[i] beats order[i+1]). A single-item ranking
/// scores 0. An adjacent probability of zero yields -infinity. Missing
/// adjacent entries throw IncompleteMatrixError.
double transitive_log_likelihood(const Ranking& ranking, const PreferenceMatrix& prefs);

/// Log-likelihood over every upstream pair: sum over i < j in ranking order
/// of ln P(order[i] beats order[j]). Requires all n(n-1)/2 such entries.
double non_transitive_log_likelihood(const Ranking& ranking, const PreferenceMatrix& prefs);

/// Brute-force maximizer of the non-transitive log-likelihood over all
/// permutations; ties resolved to the lexicographically smallest index
/// sequence. Factorial cost, so n must be <= max_n. Test oracle only.
Ranking kemeny_optimal(const PreferenceMatrix& prefs, std::size_t max_n = 10);

/// Brute-force maximizer of the transitive log-likelihood, same conventions
/// as kemeny_optimal. Test oracle for the merge search.
Ranking mle_transitive_exhaustive(const PreferenceMatrix& prefs, std::size_t max_n = 10);

} // namespace pairrank
