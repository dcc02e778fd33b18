#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "pairrank/types.hpp"

namespace pairrank {

/// One pairwise question put to an oracle. The first candidate is presented
/// as choice "A", the second as choice "B". Indices locate the candidates
/// within their group; the cache key is (group_id, ordered ids, aspect,
/// template_id).
struct ComparisonQuery {
    std::string group_id;
    std::optional<std::string> context;
    Candidate first;
    Candidate second;
    std::size_t first_index = 0;
    std::size_t second_index = 0;
    std::string aspect;
    std::string template_id;
};

ComparisonQuery swapped(const ComparisonQuery& query);

/// The oracle contract every backend satisfies: p_first in [0, 1] with
/// uncertainty always recomputed as the entropy of p_first, deterministic
/// given (backend state, seed, query). Backends must tolerate concurrent
/// calls.
class Comparator {
public:
    virtual ~Comparator() = default;
    virtual ComparisonRecord compare(const ComparisonQuery& query) = 0;
};

/// Backend over a fixed preference matrix, addressed by candidate index.
/// Querying the swapped pair returns the complement; absent pairs throw
/// MissingPairError.
class MatrixComparator final : public Comparator {
public:
    explicit MatrixComparator(PreferenceMatrix matrix);
    ComparisonRecord compare(const ComparisonQuery& query) override;

private:
    PreferenceMatrix matrix_;
};

/// Bradley-Terry style synthetic judge over candidate latent scores.
///
/// p = logistic(theta_first - theta_second + position_bias + noise), where
/// the Gaussian noise is drawn once per unordered candidate pair (a pure
/// function of seed and the pair ids, so re-querying is consistent and the
/// backend is stateless and thread-safe) and enters with opposite signs for
/// the two presentation orders. The position bias is always credited to the
/// first-listed candidate.
struct SyntheticOracleConfig {
    double noise_std = 0.0;
    double position_bias = 0.0;
    std::uint64_t seed = 0;
};

class SyntheticComparator final : public Comparator {
public:
    explicit SyntheticComparator(SyntheticOracleConfig config);
    ComparisonRecord compare(const ComparisonQuery& query) override;

    const SyntheticOracleConfig& config() const { return config_; }

private:
    SyntheticOracleConfig config_;
};

/// Logistic win probability for a single synthetic comparison with an
/// explicit noise draw. Exposed for direct study of the oracle model.
double btl_probability(double theta_first, double theta_second,
                       const SyntheticOracleConfig& config, double noise_draw);

/// Averages both presentation orders: p = (p_fwd + (1 - p_swapped)) / 2.
/// Costs exactly two inner calls per query and cancels position bias.
class CalibratedComparator final : public Comparator {
public:
    explicit CalibratedComparator(std::shared_ptr<Comparator> inner);
    ComparisonRecord compare(const ComparisonQuery& query) override;

private:
    std::shared_ptr<Comparator> inner_;
};

/// Memoizes results by (group_id, ordered pair, aspect, template_id) and
/// answers the swapped key by complementing the stored probability. Errors
/// are never cached. Thread-safe; inner backends are deterministic, so a
/// rare duplicate computation under contention is idempotent.
class CachingComparator final : public Comparator {
public:
    explicit CachingComparator(std::shared_ptr<Comparator> inner);
    ComparisonRecord compare(const ComparisonQuery& query) override;

    /// Number of calls forwarded to the inner comparator.
    std::size_t misses() const { return misses_.load(); }
    std::size_t hits() const { return hits_.load(); }

private:
    std::shared_ptr<Comparator> inner_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, ComparisonRecord> cache_;
    std::atomic<std::size_t> misses_{0};
    std::atomic<std::size_t> hits_{0};
};

/// Counts every compare() that reaches it; for query accounting in tests
/// and benchmarks.
class CountingComparator final : public Comparator {
public:
    explicit CountingComparator(std::shared_ptr<Comparator> inner);
    ComparisonRecord compare(const ComparisonQuery& query) override;

    std::size_t calls() const { return calls_.load(); }

private:
    std::shared_ptr<Comparator> inner_;
    std::atomic<std::size_t> calls_{0};
};

} // namespace pairrank
