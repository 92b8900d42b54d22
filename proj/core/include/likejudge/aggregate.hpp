#ifndef LIKEJUDGE_AGGREGATE_HPP
#define LIKEJUDGE_AGGREGATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "likejudge/frame.hpp"
#include "likejudge/likelihood.hpp"

namespace likejudge {

// Crispifying thresholds: one coefficient per signed agenda element with
// c_phi + c_~phi > 1, so a consistent source never crispifies to both signs.
class CrispVector {
public:
    CrispVector(std::vector<double> values);  // signed-agenda order, size 2m
    static CrispVector uniform(int issue_count, double c);

    int issue_count() const { return static_cast<int>(values_.size()) / 2; }
    double at(SignedIssue s) const { return values_.at(s.slot()); }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Per-element reals over the signed agenda (average likelihoods, quota
// bounds, ...).
struct LikelihoodVector {
    std::vector<double> values;  // signed-agenda order, size 2m
    double at(SignedIssue s) const { return values.at(s.slot()); }
};

struct CandidateScore {
    CrispJudgmentSet candidate;
    double value = 0.0;
};

struct ImplicantScore {
    Implicant implicant;
    double value = 0.0;
};

struct AggregationOutcome {
    std::vector<CrispJudgmentSet> winners;  // lexicographic sign order
    std::vector<bool> winner_rational;      // complete and Gamma-consistent
    std::vector<CandidateScore> diagnostics;
    bool lower_is_better = false;
    std::optional<LikelihoodJudgmentSet> intermediate;  // crispifying rules
    std::vector<ImplicantScore> implicant_scores;       // pi-* rules
    std::vector<SignedIssue> addition_order;            // seq-avg trace
};

// Thresholding: keep phi iff bound(phi) >= c_phi. May be incomplete.
CrispJudgmentSet crispify(const LikelihoodJudgmentSet& set,
                          const CrispVector& c);

// Collective quota bounds: per element, the q-th largest stated bound
// across sources, emitted with relation >=.
LikelihoodJudgmentSet quota_likelihood(const Profile& profile, int q);

// Quota rule: crispify the collective quota bounds. Output may be
// incomplete or Gamma-inconsistent; flags say so. q = floor(n/2)+1 is the
// issue-by-issue majority function.
AggregationOutcome quota_rule(const Frame& frame, const Profile& profile,
                              int q, const CrispVector& c);

// Crisp quota: everything supported by at least q sources (unrestricted,
// may carry both signs).
CrispJudgmentSet crisp_quota(const CrispProfile& profile, int q,
                             int issue_count);

// Everything supported by a strict majority of the crisp sources.
CrispJudgmentSet majoritarian_set(const CrispProfile& profile,
                                  int issue_count);

// Number of sources granting the issue at least likelihood c.
int support_count(const Profile& profile, SignedIssue issue, double c);

LikelihoodVector average_likelihoods(const Profile& profile);

// Direct rules over the rational sets of the frame.
AggregationOutcome median_likelihood(const Frame& frame,
                                     const Profile& profile);
AggregationOutcome crisp_median(const Frame& frame,
                                const CrispProfile& profile);

enum class Metric { Euclidean, L1 };
enum class Mode { Sum, Max };

AggregationOutcome distance_rule(const Frame& frame, const Profile& profile,
                                 Metric metric, Mode mode);
AggregationOutcome crisp_kemeny(const Frame& frame,
                                const CrispProfile& profile);

// Sequential average: settle elements in decreasing average likelihood,
// skipping anything inconsistent with what is already settled (the
// complement is then entailed and added immediately). Ties break by agenda
// index, positive literal first. Result is complete and Gamma-consistent.
AggregationOutcome sequential_average(const Frame& frame,
                                      const LikelihoodVector& averages);
AggregationOutcome sequential_average(const Frame& frame,
                                      const Profile& profile);

enum class PiScoring { SumAvg, MinAvg, MajorityCount };

// Most-likely-prime-implicant rules; winners are closures of the argmax
// implicants. `c` is the support threshold for MajorityCount.
AggregationOutcome prime_implicant_rule(const Frame& frame,
                                        const Profile& profile,
                                        PiScoring scoring, double c = 0.6);

// CLI-facing rule descriptor.
struct RuleSpec {
    enum class Kind {
        Quota,
        Majority,
        Unanimity,
        Median,
        CrispMedian,
        SeqAvg,
        Distance,
        Kemeny,
        PrimeImplicant,
        Dictator,
    };
    Kind kind = Kind::Median;
    int quota = 0;  // Quota only
    Metric metric = Metric::Euclidean;
    Mode mode = Mode::Sum;
    PiScoring scoring = PiScoring::SumAvg;
    double uniform_c = 0.6;
    std::optional<CrispVector> crisp_vector;

    CrispVector vector_for(const Frame& frame) const;
};

// Rule names as exposed on the command line: quota, majority, unanimity,
// median, crisp-median, seq-avg, dist-e-sum, dist-e-max, dist-l1-sum,
// dist-l1-max, kemeny, pi-sum, pi-min, pi-maj (and dictator, used by the
// property checkers).
RuleSpec parse_rule_name(const std::string& name);

AggregationOutcome apply_rule(const Frame& frame, const Profile& profile,
                              const RuleSpec& rule);

// Lexicographically-first winner (the --resolute selection).
CrispJudgmentSet resolute_winner(const AggregationOutcome& outcome);

}  // namespace likejudge

#endif
