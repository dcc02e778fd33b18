#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pairrank/errors.hpp"

namespace pairrank {

/// One item to be ranked. `latent_score` is the hidden quality used by the
/// synthetic oracle; `human_score` is a gold annotation when available.
struct Candidate {
    std::string id;
    std::string text;
    std::optional<double> latent_score;
    std::optional<double> human_score;
};

/// The items competing within one evaluation group (one source input).
struct CandidateSet {
    std::string group_id;
    std::optional<std::string> context;
    std::vector<Candidate> candidates;

    std::size_t size() const { return candidates.size(); }
};

/// Throws DataError unless the set satisfies its invariants:
/// non-empty group id, at least one candidate, unique candidate ids,
/// finite latent scores where present.
void validate_candidate_set(const CandidateSet& set);

/// A total order over candidate indices, best first.
class Ranking {
public:
    explicit Ranking(std::vector<std::size_t> order);

    static Ranking identity(std::size_t n);

    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    std::size_t operator[](std::size_t pos) const { return order_[pos]; }

    /// Inverse view: positions()[item] is the rank position of `item` (0 = best).
    std::vector<std::size_t> positions() const;

    /// Per-item score where larger means better-ranked (n - position).
    /// Convenient for rank correlations against gold scores.
    std::vector<double> scores() const;

    bool operator==(const Ranking& other) const { return order_ == other.order_; }

private:
    std::vector<std::size_t> order_;
};

/// N x N pairwise preference probabilities P(i beats j), possibly partial.
/// Stored dense; absent entries are NaN. Whenever both directions are present
/// they must sum to one within 1e-9.
class PreferenceMatrix {
public:
    explicit PreferenceMatrix(std::size_t n);

    std::size_t size() const { return n_; }

    /// Sets one directed entry, validating range and consistency with the twin.
    void set(std::size_t i, std::size_t j, double p);
    /// Sets P(i beats j) = p and P(j beats i) = 1 - p.
    void set_pair(std::size_t i, std::size_t j, double p);

    bool has(std::size_t i, std::size_t j) const;
    /// Throws IncompleteMatrixError when the entry is absent.
    double at(std::size_t i, std::size_t j) const;

    /// True when every off-diagonal entry is present.
    bool complete() const;

private:
    void check_indices(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<double> p_;
};

enum class Provenance { synthetic, matrix, llm, calibrated };

const char* provenance_name(Provenance p);

/// One oracle query result. `first`/`second` are candidate indices within the
/// group; `p_first` is the probability that the first-listed one wins;
/// `uncertainty` is the binary entropy of that probability, in nats.
struct ComparisonRecord {
    std::size_t first = 0;
    std::size_t second = 0;
    double p_first = 0.5;
    double uncertainty = 0.0;
    Provenance provenance = Provenance::matrix;
    bool floor_estimated = false;
};

constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

} // namespace pairrank
