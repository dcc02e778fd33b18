#include "pairrank/comparator.hpp"

#include <cmath>

#include "pairrank/likelihood.hpp"
#include "pairrank/rng.hpp"

namespace pairrank {

namespace {

void validate_query(const ComparisonQuery& query) {
    if (query.first.id == query.second.id)
        throw DataError("comparison query pairs a candidate with itself: '" + query.first.id + "'");
}

ComparisonRecord make_record(const ComparisonQuery& query, double p, Provenance provenance) {
    ComparisonRecord rec;
    rec.first = query.first_index;
    rec.second = query.second_index;
    rec.p_first = p;
    rec.uncertainty = entropy_uncertainty(p);
    rec.provenance = provenance;
    return rec;
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

} // namespace

ComparisonQuery swapped(const ComparisonQuery& query) {
    ComparisonQuery s = query;
    std::swap(s.first, s.second);
    std::swap(s.first_index, s.second_index);
    return s;
}

MatrixComparator::MatrixComparator(PreferenceMatrix matrix) : matrix_(std::move(matrix)) {}

ComparisonRecord MatrixComparator::compare(const ComparisonQuery& query) {
    validate_query(query);
    const std::size_t i = query.first_index;
    const std::size_t j = query.second_index;
    if (i >= matrix_.size() || j >= matrix_.size())
        throw DataError("matrix comparator index out of range");
    double p;
    if (matrix_.has(i, j)) {
        p = matrix_.at(i, j);
    } else if (matrix_.has(j, i)) {
        p = 1.0 - matrix_.at(j, i);
    } else {
        throw MissingPairError("no stored preference for pair (" + query.first.id + ", " + query.second.id + ")");
    }
    return make_record(query, p, Provenance::matrix);
}

double btl_probability(double theta_first, double theta_second,
                       const SyntheticOracleConfig& config, double noise_draw) {
    if (!std::isfinite(theta_first) || !std::isfinite(theta_second))
        throw DataError("synthetic comparison requires finite latent scores");
    return logistic(theta_first - theta_second + config.position_bias + noise_draw);
}

SyntheticComparator::SyntheticComparator(SyntheticOracleConfig config) : config_(config) {
    if (config_.noise_std < 0.0) throw ConfigError("noise_std must be non-negative");
}

ComparisonRecord SyntheticComparator::compare(const ComparisonQuery& query) {
    validate_query(query);
    if (!query.first.latent_score || !query.second.latent_score)
        throw DataError("synthetic backend needs latent scores for both candidates (pair " +
                        query.first.id + ", " + query.second.id + ")");

    double noise = 0.0;
    if (config_.noise_std > 0.0) {
        // One draw per unordered pair, derived from (seed, lo_id, hi_id); the
        // sign flips with presentation order so the two orders stay
        // complementary when no position bias is configured.
        const bool forward = query.first.id < query.second.id;
        const std::string& lo = forward ? query.first.id : query.second.id;
        const std::string& hi = forward ? query.second.id : query.first.id;
        std::uint64_t h = fnv1a64(query.group_id);
        h = fnv1a64("\x1f", h);
        h = fnv1a64(lo, h);
        h = fnv1a64("\x1f", h);
        h = fnv1a64(hi, h);
        std::mt19937_64 rng(mix_seed(config_.seed, h));
        noise = config_.noise_std * standard_normal(rng);
        if (!forward) noise = -noise;
    }
    const double p = btl_probability(*query.first.latent_score, *query.second.latent_score,
                                     config_, noise);
    return make_record(query, p, Provenance::synthetic);
}

CalibratedComparator::CalibratedComparator(std::shared_ptr<Comparator> inner)
    : inner_(std::move(inner)) {}

ComparisonRecord CalibratedComparator::compare(const ComparisonQuery& query) {
    const ComparisonRecord forward = inner_->compare(query);
    const ComparisonRecord backward = inner_->compare(swapped(query));
    const double p = 0.5 * (forward.p_first + (1.0 - backward.p_first));
    ComparisonRecord rec = make_record(query, p, Provenance::calibrated);
    rec.floor_estimated = forward.floor_estimated || backward.floor_estimated;
    return rec;
}

namespace {

std::string cache_key(const std::string& group_id, const std::string& a, const std::string& b,
                      const std::string& aspect, const std::string& template_id) {
    std::string key;
    key.reserve(group_id.size() + a.size() + b.size() + aspect.size() + template_id.size() + 4);
    key.append(group_id).push_back('\x1f');
    key.append(a).push_back('\x1f');
    key.append(b).push_back('\x1f');
    key.append(aspect).push_back('\x1f');
    key.append(template_id);
    return key;
}

} // namespace

CachingComparator::CachingComparator(std::shared_ptr<Comparator> inner) : inner_(std::move(inner)) {}

ComparisonRecord CachingComparator::compare(const ComparisonQuery& query) {
    const std::string fwd = cache_key(query.group_id, query.first.id, query.second.id,
                                      query.aspect, query.template_id);
    const std::string rev = cache_key(query.group_id, query.second.id, query.first.id,
                                      query.aspect, query.template_id);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(fwd); it != cache_.end()) {
            hits_.fetch_add(1);
            ComparisonRecord rec = it->second;
            rec.first = query.first_index;
            rec.second = query.second_index;
            return rec;
        }
        if (auto it = cache_.find(rev); it != cache_.end()) {
            hits_.fetch_add(1);
            ComparisonRecord rec = it->second;
            rec.first = query.first_index;
            rec.second = query.second_index;
            rec.p_first = 1.0 - rec.p_first;
            return rec;
        }
    }
    const ComparisonRecord rec = inner_->compare(query);
    misses_.fetch_add(1);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(fwd, rec);
    }
    return rec;
}

CountingComparator::CountingComparator(std::shared_ptr<Comparator> inner) : inner_(std::move(inner)) {}

ComparisonRecord CountingComparator::compare(const ComparisonQuery& query) {
    calls_.fetch_add(1);
    return inner_->compare(query);
}

} // namespace pairrank
