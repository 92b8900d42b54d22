#include "likejudge/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace likejudge {

namespace {

void require_sources(const Profile& profile) {
    if (profile.sources.empty()) throw DomainError("empty profile");
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        if (s.issue_count() != profile.sources.front().issue_count()) {
            throw DomainError("profile sources disagree on the agenda width");
        }
    }
}

// Argmax/argmin winners over the rational sets with per-candidate scores.
AggregationOutcome pick_over_rational_sets(std::vector<double> scores,
                                           std::vector<CrispJudgmentSet> sets,
                                           bool lower_is_better) {
    AggregationOutcome out;
    out.lower_is_better = lower_is_better;
    double best = lower_is_better
                      ? *std::min_element(scores.begin(), scores.end())
                      : *std::max_element(scores.begin(), scores.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out.diagnostics.push_back({sets[i], scores[i]});
        bool winning = lower_is_better ? scores[i] <= best + kScoreEps
                                       : scores[i] >= best - kScoreEps;
        if (winning) {
            out.winners.push_back(sets[i]);
            out.winner_rational.push_back(true);
        }
    }
    return out;  // sets arrive in lexicographic order, so winners are sorted
}

CrispProfile to_crisp_profile(const Profile& profile) {
    CrispProfile out;
    out.reserve(profile.sources.size());
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        out.push_back(to_crisp(s));
    }
    return out;
}

}  // namespace

CrispVector::CrispVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty() || values_.size() % 2 != 0) {
        throw DomainError("crispifying vector must cover the signed agenda");
    }
    for (double v : values_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("crispifying coefficient outside [0,1]");
        }
    }
    for (std::size_t i = 0; i < values_.size(); i += 2) {
        if (!(values_[i] + values_[i + 1] > 1.0)) {
            throw DomainError(
                "crispifying coefficients on issue " + std::to_string(i / 2) +
                " must sum above 1");
        }
    }
}

CrispVector CrispVector::uniform(int issue_count, double c) {
    if (!(c > 0.5 && c <= 1.0)) {
        throw DomainError("uniform crispifying coefficient must lie in (1/2, 1]");
    }
    return CrispVector(std::vector<double>(2 * issue_count, c));
}

CrispJudgmentSet crispify(const LikelihoodJudgmentSet& set,
                          const CrispVector& c) {
    if (c.issue_count() != set.issue_count()) {
        throw DomainError("crispifying vector width does not match the set");
    }
    CrispJudgmentSet out(set.issue_count());
    for (int slot = 0; slot < 2 * set.issue_count(); ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        if (set.bound(s) >= c.at(s)) out.add(s);
    }
    return out;
}

LikelihoodJudgmentSet quota_likelihood(const Profile& profile, int q) {
    require_sources(profile);
    const int n = profile.size();
    if (q < 1 || q > n) {
        throw DomainError("quota " + std::to_string(q) +
                          " outside [1, " + std::to_string(n) + "]");
    }
    const int m = profile.sources.front().issue_count();
    std::vector<LikelihoodEntry> entries(2 * m);
    std::vector<double> column(n);
    for (int slot = 0; slot < 2 * m; ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        for (int k = 0; k < n; ++k) column[k] = profile.sources[k].bound(s);
        std::sort(column.begin(), column.end(), std::greater<double>());
        entries[slot] = {Rel::Geq, column[q - 1]};  // q-th largest
    }
    return LikelihoodJudgmentSet(std::move(entries), "quota");
}

AggregationOutcome quota_rule(const Frame& frame, const Profile& profile,
                              int q, const CrispVector& c) {
    LikelihoodJudgmentSet collective = quota_likelihood(profile, q);
    CrispJudgmentSet crisp = crispify(collective, c);
    AggregationOutcome out;
    out.intermediate = std::move(collective);
    out.winner_rational.push_back(crisp.complete() && !crisp.conflicted() &&
                                  frame.consistent_with_gamma(crisp));
    out.winners.push_back(std::move(crisp));
    return out;
}

CrispJudgmentSet crisp_quota(const CrispProfile& profile, int q,
                             int issue_count) {
    const int n = static_cast<int>(profile.size());
    if (n == 0) throw DomainError("empty profile");
    if (q < 1 || q > n) {
        throw DomainError("quota " + std::to_string(q) +
                          " outside [1, " + std::to_string(n) + "]");
    }
    CrispJudgmentSet out(issue_count);
    for (int slot = 0; slot < 2 * issue_count; ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        int count = 0;
        for (const CrispJudgmentSet& j : profile) {
            if (j.contains(s)) ++count;
        }
        if (count >= q) out.add(s);
    }
    return out;
}

CrispJudgmentSet majoritarian_set(const CrispProfile& profile,
                                  int issue_count) {
    const int n = static_cast<int>(profile.size());
    CrispJudgmentSet out(issue_count);
    for (int slot = 0; slot < 2 * issue_count; ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        int count = 0;
        for (const CrispJudgmentSet& j : profile) {
            if (j.contains(s)) ++count;
        }
        if (2 * count > n) out.add(s);
    }
    return out;
}

int support_count(const Profile& profile, SignedIssue issue, double c) {
    int count = 0;
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        if (s.bound(issue) >= c) ++count;
    }
    return count;
}

LikelihoodVector average_likelihoods(const Profile& profile) {
    require_sources(profile);
    const int m = profile.sources.front().issue_count();
    LikelihoodVector avg;
    avg.values.assign(2 * m, 0.0);
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        for (int slot = 0; slot < 2 * m; ++slot) {
            avg.values[slot] += s.entries()[slot].bound;
        }
    }
    for (double& v : avg.values) v /= profile.size();
    return avg;
}

AggregationOutcome median_likelihood(const Frame& frame,
                                     const Profile& profile) {
    require_sources(profile);
    std::vector<CrispJudgmentSet> sets = rational_sets(frame);
    // S(phi, P) summed over members of each candidate.
    std::vector<double> support(2 * frame.issue_count(), 0.0);
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
            support[slot] += s.entries()[slot].bound;
        }
    }
    std::vector<double> scores;
    scores.reserve(sets.size());
    for (const CrispJudgmentSet& J : sets) {
        double total = 0.0;
        for (SignedIssue s : J.literals()) total += support[s.slot()];
        scores.push_back(total);
    }
    return pick_over_rational_sets(std::move(scores), std::move(sets),
                                   /*lower_is_better=*/false);
}

AggregationOutcome crisp_median(const Frame& frame,
                                const CrispProfile& profile) {
    if (profile.empty()) throw DomainError("empty profile");
    std::vector<CrispJudgmentSet> sets = rational_sets(frame);
    std::vector<double> scores;
    scores.reserve(sets.size());
    for (const CrispJudgmentSet& J : sets) {
        int total = 0;
        for (SignedIssue s : J.literals()) {
            for (const CrispJudgmentSet& j : profile) {
                if (j.contains(s)) ++total;
            }
        }
        scores.push_back(static_cast<double>(total));
    }
    return pick_over_rational_sets(std::move(scores), std::move(sets),
                                   /*lower_is_better=*/false);
}

namespace {

std::vector<double> lifted_bounds(const CrispJudgmentSet& J) {
    std::vector<double> v(2 * J.issue_count(), 0.0);
    for (SignedIssue s : J.literals()) v[s.slot()] = 1.0;
    return v;
}

double vector_distance(const std::vector<double>& a,
                       const std::vector<double>& b, Metric metric) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc += metric == Metric::Euclidean ? d * d : std::abs(d);
    }
    return metric == Metric::Euclidean ? std::sqrt(acc) : acc;
}

}  // namespace

AggregationOutcome distance_rule(const Frame& frame, const Profile& profile,
                                 Metric metric, Mode mode) {
    require_sources(profile);
    std::vector<CrispJudgmentSet> sets = rational_sets(frame);
    std::vector<std::vector<double>> source_bounds;
    source_bounds.reserve(profile.sources.size());
    for (const LikelihoodJudgmentSet& s : profile.sources) {
        std::vector<double> v;
        v.reserve(s.entries().size());
        for (const LikelihoodEntry& e : s.entries()) v.push_back(e.bound);
        source_bounds.push_back(std::move(v));
    }
    std::vector<double> scores;
    scores.reserve(sets.size());
    for (const CrispJudgmentSet& J : sets) {
        std::vector<double> jv = lifted_bounds(J);
        double acc = mode == Mode::Sum ? 0.0 : -1.0;
        for (const std::vector<double>& sv : source_bounds) {
            double d = vector_distance(jv, sv, metric);
            if (mode == Mode::Sum) {
                acc += d;
            } else {
                acc = std::max(acc, d);
            }
        }
        scores.push_back(acc);
    }
    return pick_over_rational_sets(std::move(scores), std::move(sets),
                                   /*lower_is_better=*/true);
}

AggregationOutcome crisp_kemeny(const Frame& frame,
                                const CrispProfile& profile) {
    if (profile.empty()) throw DomainError("empty profile");
    std::vector<CrispJudgmentSet> sets = rational_sets(frame);
    std::vector<double> scores;
    scores.reserve(sets.size());
    for (const CrispJudgmentSet& J : sets) {
        int total = 0;
        for (const CrispJudgmentSet& j : profile) {
            total += hamming_distance(J, j);
        }
        scores.push_back(static_cast<double>(total));
    }
    return pick_over_rational_sets(std::move(scores), std::move(sets),
                                   /*lower_is_better=*/true);
}

AggregationOutcome sequential_average(const Frame& frame,
                                      const LikelihoodVector& averages) {
    if (static_cast<int>(averages.values.size()) != 2 * frame.issue_count()) {
        throw DomainError("average vector width does not match the frame");
    }
    std::vector<int> order(averages.values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (averages.values[a] != averages.values[b]) {
            return averages.values[a] > averages.values[b];
        }
        return a < b;  // slot order: agenda index, positive before negative
    });

    CrispJudgmentSet result(frame.issue_count());
    AggregationOutcome out;
    // Support set of Gamma-models shrinks as judgments are settled.
    std::vector<std::uint32_t> support = frame.gamma_models();
    auto settle = [&](SignedIssue s) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t w : support) {
            if (frame.literal_true_at(s, w)) next.push_back(w);
        }
        support = std::move(next);
        result.add(s);
        out.addition_order.push_back(s);
    };
    for (int slot : order) {
        SignedIssue s = SignedIssue::from_slot(slot);
        if (result.sign(s.issue) != CrispJudgmentSet::Sign::Unset) continue;
        bool consistent = false;
        for (std::uint32_t w : support) {
            if (frame.literal_true_at(s, w)) {
                consistent = true;
                break;
            }
        }
        // A skipped element's complement is entailed; settle it right away.
        settle(consistent ? s : s.complement());
    }
    out.winner_rational.push_back(true);
    out.winners.push_back(std::move(result));
    return out;
}

AggregationOutcome sequential_average(const Frame& frame,
                                      const Profile& profile) {
    AggregationOutcome out = sequential_average(frame, average_likelihoods(profile));
    return out;
}

AggregationOutcome prime_implicant_rule(const Frame& frame,
                                        const Profile& profile,
                                        PiScoring scoring, double c) {
    require_sources(profile);
    std::vector<Implicant> implicants = prime_implicants(frame);
    if (implicants.empty()) {
        throw DomainError("frame has no prime implicants");
    }
    LikelihoodVector avg = average_likelihoods(profile);

    AggregationOutcome out;
    std::vector<double> scores;
    scores.reserve(implicants.size());
    for (const Implicant& I : implicants) {
        double value = 0.0;
        switch (scoring) {
            case PiScoring::SumAvg:
                for (SignedIssue s : I) value += avg.at(s);
                break;
            case PiScoring::MinAvg:
                value = 1.0;
                for (SignedIssue s : I) value = std::min(value, avg.at(s));
                break;
            case PiScoring::MajorityCount:
                for (SignedIssue s : I) {
                    value += support_count(profile, s, c);
                }
                break;
        }
        scores.push_back(value);
        out.implicant_scores.push_back({I, value});
    }
    double best = *std::max_element(scores.begin(), scores.end());
    std::vector<CrispJudgmentSet> closures;
    for (std::size_t i = 0; i < implicants.size(); ++i) {
        if (scores[i] >= best - kScoreEps) {
            CrispJudgmentSet J = closure(implicants[i], frame);
            if (std::find(closures.begin(), closures.end(), J) ==
                closures.end()) {
                closures.push_back(std::move(J));
            }
        }
    }
    std::sort(closures.begin(), closures.end(),
              [](const CrispJudgmentSet& a, const CrispJudgmentSet& b) {
                  return a.lex_key() < b.lex_key();
              });
    for (CrispJudgmentSet& J : closures) {
        out.winner_rational.push_back(true);
        out.winners.push_back(std::move(J));
    }
    return out;
}

CrispVector RuleSpec::vector_for(const Frame& frame) const {
    if (crisp_vector) return *crisp_vector;
    return CrispVector::uniform(frame.issue_count(), uniform_c);
}

RuleSpec parse_rule_name(const std::string& name) {
    RuleSpec spec;
    using Kind = RuleSpec::Kind;
    if (name == "quota") {
        spec.kind = Kind::Quota;
    } else if (name == "majority") {
        spec.kind = Kind::Majority;
    } else if (name == "unanimity") {
        spec.kind = Kind::Unanimity;
    } else if (name == "median") {
        spec.kind = Kind::Median;
    } else if (name == "crisp-median") {
        spec.kind = Kind::CrispMedian;
    } else if (name == "seq-avg") {
        spec.kind = Kind::SeqAvg;
    } else if (name == "dist-e-sum") {
        spec.kind = Kind::Distance;
        spec.metric = Metric::Euclidean;
        spec.mode = Mode::Sum;
    } else if (name == "dist-e-max") {
        spec.kind = Kind::Distance;
        spec.metric = Metric::Euclidean;
        spec.mode = Mode::Max;
    } else if (name == "dist-l1-sum") {
        spec.kind = Kind::Distance;
        spec.metric = Metric::L1;
        spec.mode = Mode::Sum;
    } else if (name == "dist-l1-max") {
        spec.kind = Kind::Distance;
        spec.metric = Metric::L1;
        spec.mode = Mode::Max;
    } else if (name == "kemeny") {
        spec.kind = Kind::Kemeny;
    } else if (name == "pi-sum") {
        spec.kind = Kind::PrimeImplicant;
        spec.scoring = PiScoring::SumAvg;
    } else if (name == "pi-min") {
        spec.kind = Kind::PrimeImplicant;
        spec.scoring = PiScoring::MinAvg;
    } else if (name == "pi-maj") {
        spec.kind = Kind::PrimeImplicant;
        spec.scoring = PiScoring::MajorityCount;
    } else if (name == "dictator") {
        spec.kind = Kind::Dictator;
    } else {
        throw DomainError("unknown rule '" + name + "'");
    }
    return spec;
}

AggregationOutcome apply_rule(const Frame& frame, const Profile& profile,
                              const RuleSpec& rule) {
    using Kind = RuleSpec::Kind;
    const int n = profile.size();
    switch (rule.kind) {
        case Kind::Quota:
            return quota_rule(frame, profile, rule.quota, rule.vector_for(frame));
        case Kind::Majority:
            return quota_rule(frame, profile, n / 2 + 1, rule.vector_for(frame));
        case Kind::Unanimity:
            return quota_rule(frame, profile, n, rule.vector_for(frame));
        case Kind::Median:
            return median_likelihood(frame, profile);
        case Kind::CrispMedian:
            return crisp_median(frame, to_crisp_profile(profile));
        case Kind::SeqAvg:
            return sequential_average(frame, profile);
        case Kind::Distance:
            return distance_rule(frame, profile, rule.metric, rule.mode);
        case Kind::Kemeny:
            return crisp_kemeny(frame, to_crisp_profile(profile));
        case Kind::PrimeImplicant:
            return prime_implicant_rule(frame, profile, rule.scoring,
                                        rule.uniform_c);
        case Kind::Dictator: {
            require_sources(profile);
            CrispJudgmentSet crisp =
                crispify(profile.sources.front(), rule.vector_for(frame));
            AggregationOutcome out;
            out.winner_rational.push_back(crisp.complete() &&
                                          !crisp.conflicted() &&
                                          frame.consistent_with_gamma(crisp));
            out.winners.push_back(std::move(crisp));
            return out;
        }
    }
    throw DomainError("unhandled rule kind");
}

CrispJudgmentSet resolute_winner(const AggregationOutcome& outcome) {
    if (outcome.winners.empty()) throw DomainError("outcome has no winners");
    const CrispJudgmentSet* best = &outcome.winners.front();
    for (const CrispJudgmentSet& J : outcome.winners) {
        if (J.lex_key() < best->lex_key()) best = &J;
    }
    return *best;
}

}  // namespace likejudge
