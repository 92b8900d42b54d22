#include "likejudge/likelihood.hpp"

#include <cmath>
#include <utility>

#include "likejudge/frame.hpp"
#include "likejudge/numeric.hpp"
#include "likejudge/simplex.hpp"

namespace likejudge {

namespace {

std::string issue_label(SignedIssue s) {
    return (s.negated ? "~issue " : "issue ") + std::to_string(s.issue);
}

}  // namespace

LikelihoodJudgmentSet normalize(const std::vector<LikelihoodJudgment>& stated,
                                int issue_count, std::string provenance) {
    std::vector<LikelihoodEntry> entries(2 * issue_count,
                                         LikelihoodEntry{Rel::Geq, 0.0});
    std::vector<bool> seen(2 * issue_count, false);

    for (const LikelihoodJudgment& j : stated) {
        if (j.issue.issue < 0 || j.issue.issue >= issue_count) {
            throw DomainError("judgment references issue " +
                              std::to_string(j.issue.issue) +
                              " outside the agenda");
        }
        if (!(j.bound >= 0.0 && j.bound <= 1.0)) {
            throw DomainError("likelihood bound " + std::to_string(j.bound) +
                              " outside [0,1] on " + issue_label(j.issue));
        }
        int slot = j.issue.slot();
        if (seen[slot]) {
            throw DuplicateJudgmentError("duplicate judgment on " +
                                         issue_label(j.issue));
        }
        seen[slot] = true;
        entries[slot] = {j.rel, canonical_real(j.bound)};
    }

    for (int i = 0; i < issue_count; ++i) {
        SignedIssue pos{i, false};
        SignedIssue neg{i, true};
        LikelihoodEntry& ep = entries[pos.slot()];
        LikelihoodEntry& en = entries[neg.slot()];
        bool sp = seen[pos.slot()];
        bool sn = seen[neg.slot()];

        // A stated equality pins the complement at (=, 1-a).
        auto complete_from = [&](const LikelihoodEntry& from,
                                 LikelihoodEntry& to, bool to_stated,
                                 SignedIssue to_issue) {
            double expected = canonical_real(1.0 - from.bound);
            if (!to_stated) {
                to = {Rel::Eq, expected};
            } else if (to.rel != Rel::Eq ||
                       std::abs(to.bound - expected) > 1e-9) {
                throw JudgmentConflictError(
                    "judgment on " + issue_label(to_issue) +
                    " conflicts with the stated equality on its complement");
            }
        };
        if (sp && ep.rel == Rel::Eq) complete_from(ep, en, sn, neg);
        if (sn && en.rel == Rel::Eq) complete_from(en, ep, sp, pos);

        if (ep.bound + en.bound > 1.0 + 1e-9) {
            throw JudgmentConflictError(
                "bounds on issue " + std::to_string(i) + " sum to " +
                std::to_string(ep.bound + en.bound) + " > 1");
        }
    }
    return LikelihoodJudgmentSet(std::move(entries), std::move(provenance));
}

RationalityReport check_rationality(const LikelihoodJudgmentSet& set,
                                    const Frame& frame) {
    if (set.issue_count() != frame.issue_count()) {
        throw DomainError("judgment set width does not match the frame");
    }
    RationalityReport report;
    report.complete = true;  // normalized sets cover every issue

    FeasibilityProblem problem;
    problem.world_count = frame.world_count();
    for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
        SignedIssue issue = SignedIssue::from_slot(slot);
        const LikelihoodEntry& e = set.at(issue);
        if (e.rel == Rel::Geq && e.bound <= 0.0) continue;  // vacuous
        LinearConstraint c;
        c.coefficients = frame.literal_indicator(issue);
        c.relation = e.rel == Rel::Eq ? Relation::Eq : Relation::Geq;
        c.bound = e.bound;
        problem.constraints.push_back(std::move(c));
    }
    for (const LinearConstraint& c : frame.gamma_hat_worldspace()) {
        problem.constraints.push_back(c);
    }

    report.consistent = feasible(problem);
    if (!report.consistent) {
        report.final = false;
        return report;
    }

    for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
        SignedIssue issue = SignedIssue::from_slot(slot);
        const LikelihoodEntry& e = set.at(issue);
        if (e.rel != Rel::Geq) continue;  // equalities are already tight
        double implied = minimize(problem, frame.literal_indicator(issue));
        if (implied > e.bound + kCmpEps) {
            report.offending.push_back({issue, e.bound, implied});
        }
    }
    report.final = report.offending.empty();
    return report;
}

LikelihoodJudgmentSet lift(const CrispJudgmentSet& set) {
    if (!set.complete()) {
        throw DomainError("lift requires a complete crisp judgment set");
    }
    int m = set.issue_count();
    std::vector<LikelihoodEntry> entries(2 * m);
    for (int i = 0; i < m; ++i) {
        bool accepted = set.contains({i, false});
        entries[SignedIssue{i, false}.slot()] = {Rel::Eq, accepted ? 1.0 : 0.0};
        entries[SignedIssue{i, true}.slot()] = {Rel::Eq, accepted ? 0.0 : 1.0};
    }
    return LikelihoodJudgmentSet(std::move(entries), "");
}

Profile lift_profile(const CrispProfile& profile) {
    Profile out;
    out.sources.reserve(profile.size());
    for (const CrispJudgmentSet& j : profile) out.sources.push_back(lift(j));
    return out;
}

CrispJudgmentSet to_crisp(const LikelihoodJudgmentSet& set) {
    int m = set.issue_count();
    CrispJudgmentSet out(m);
    for (int i = 0; i < m; ++i) {
        const LikelihoodEntry& pos = set.at({i, false});
        const LikelihoodEntry& neg = set.at({i, true});
        if (pos.bound == 1.0 && neg.bound == 0.0) {
            out.add({i, false});
        } else if (pos.bound == 0.0 && neg.bound == 1.0) {
            out.add({i, true});
        } else {
            throw DomainError("source is not crisp on issue " +
                              std::to_string(i));
        }
    }
    return out;
}

}  // namespace likejudge
