#include "pairrank/likelihood.hpp"

#include <algorithm>
#include <cmath>

namespace pairrank {

void validate_candidate_set(const CandidateSet& set) {
    if (set.group_id.empty()) throw DataError("candidate set has empty group_id");
    if (set.candidates.empty()) throw DataError("candidate set '" + set.group_id + "' has no candidates");
    std::vector<std::string> ids;
    ids.reserve(set.candidates.size());
    for (const Candidate& c : set.candidates) {
        if (c.id.empty()) throw DataError("candidate with empty id in group '" + set.group_id + "'");
        if (c.latent_score && !std::isfinite(*c.latent_score))
            throw DataError("non-finite latent score for candidate '" + c.id + "'");
        ids.push_back(c.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw DataError("duplicate candidate id in group '" + set.group_id + "'");
}

Ranking::Ranking(std::vector<std::size_t> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (std::size_t item : order_) {
        if (item >= order_.size() || seen[item])
            throw DataError("ranking is not a permutation of 0..n-1");
        seen[item] = true;
    }
}

Ranking Ranking::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return Ranking(std::move(order));
}

std::vector<std::size_t> Ranking::positions() const {
    std::vector<std::size_t> pos(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) pos[order_[p]] = p;
    return pos;
}

std::vector<double> Ranking::scores() const {
    std::vector<double> s(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p)
        s[order_[p]] = static_cast<double>(order_.size() - p);
    return s;
}

PreferenceMatrix::PreferenceMatrix(std::size_t n)
    : n_(n), p_(n * n, std::numeric_limits<double>::quiet_NaN()) {
    if (n == 0) throw DomainError("preference matrix needs at least one item");
}

void PreferenceMatrix::check_indices(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw DomainError("preference index out of range");
    if (i == j) throw DomainError("diagonal preference entries are not allowed");
}

void PreferenceMatrix::set(std::size_t i, std::size_t j, double p) {
    check_indices(i, j);
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("preference probability outside [0, 1]");
    const double twin = p_[j * n_ + i];
    if (!std::isnan(twin) && std::abs(p + twin - 1.0) > 1e-9)
        throw DataError("preference entries for a pair must sum to one");
    p_[i * n_ + j] = p;
}

void PreferenceMatrix::set_pair(std::size_t i, std::size_t j, double p) {
    check_indices(i, j);
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("preference probability outside [0, 1]");
    p_[i * n_ + j] = p;
    p_[j * n_ + i] = 1.0 - p;
}

bool PreferenceMatrix::has(std::size_t i, std::size_t j) const {
    check_indices(i, j);
    return !std::isnan(p_[i * n_ + j]);
}

double PreferenceMatrix::at(std::size_t i, std::size_t j) const {
    check_indices(i, j);
    const double p = p_[i * n_ + j];
    if (std::isnan(p)) throw IncompleteMatrixError("preference entry absent for the requested pair");
    return p;
}

bool PreferenceMatrix::complete() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && std::isnan(p_[i * n_ + j])) return false;
    return true;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::synthetic: return "synthetic";
        case Provenance::matrix: return "matrix";
        case Provenance::llm: return "llm";
        case Provenance::calibrated: return "calibrated";
    }
    return "unknown";
}

double entropy_uncertainty(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("entropy argument outside [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log(p);
    if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
    return h;
}

double transitive_log_likelihood(const Ranking& ranking, const PreferenceMatrix& prefs) {
    const auto& order = ranking.order();
    double ll = 0.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        ll += std::log(prefs.at(order[i], order[i + 1]));
    return ll;
}

double non_transitive_log_likelihood(const Ranking& ranking, const PreferenceMatrix& prefs) {
    const auto& order = ranking.order();
    double ll = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            ll += std::log(prefs.at(order[i], order[j]));
    return ll;
}

namespace {

template <typename Score>
Ranking exhaustive_argmax(const PreferenceMatrix& prefs, std::size_t max_n, Score score) {
    const std::size_t n = prefs.size();
    if (n > max_n) throw SizeLimitError("exhaustive solver limited to " + std::to_string(max_n) + " items");
    if (!prefs.complete()) throw IncompleteMatrixError("exhaustive solver needs a complete matrix");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::size_t> best = perm;
    double best_score = score(Ranking(perm));
    // next_permutation enumerates lexicographically, so keeping strict
    // improvements resolves ties to the smallest index sequence.
    while (std::next_permutation(perm.begin(), perm.end())) {
        const double s = score(Ranking(perm));
        if (s > best_score) {
            best_score = s;
            best = perm;
        }
    }
    return Ranking(std::move(best));
}

} // namespace

Ranking kemeny_optimal(const PreferenceMatrix& prefs, std::size_t max_n) {
    return exhaustive_argmax(prefs, max_n, [&](const Ranking& r) {
        return non_transitive_log_likelihood(r, prefs);
    });
}

Ranking mle_transitive_exhaustive(const PreferenceMatrix& prefs, std::size_t max_n) {
    return exhaustive_argmax(prefs, max_n, [&](const Ranking& r) {
        return transitive_log_likelihood(r, prefs);
    });
}

} // namespace pairrank
