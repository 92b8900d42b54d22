#ifndef LIKEJUDGE_FRAME_HPP
#define LIKEJUDGE_FRAME_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "likejudge/formula.hpp"
#include "likejudge/judgments.hpp"
#include "likejudge/simplex.hpp"

namespace likejudge {

// A probabilistic constraint stated over issue likelihoods:
// sum_i coef_i * l(formula_i) <relation> bound.
struct IssueLinearConstraint {
    std::vector<std::pair<double, Formula>> terms;
    Relation relation = Relation::Eq;
    double bound = 0.0;
};

// Aggregation frame: agenda, propositional constraints on the collective
// outcome (gamma), probabilistic constraints binding the sources
// (gamma_hat), and a source count. Validates that the agenda is
// nonempty and contingent issue-by-issue and that Gamma is satisfiable;
// precomputes truth tables over the world enumeration.
class Frame {
public:
    Frame(AtomTable atoms, std::vector<Formula> agenda,
          std::vector<Formula> gamma,
          std::vector<IssueLinearConstraint> gamma_hat = {}, int sources = 0,
          int atom_limit = kDefaultAtomLimit);

    int atom_count() const { return atoms_.size(); }
    std::uint32_t world_count() const { return world_count_; }
    int issue_count() const { return static_cast<int>(agenda_.size()); }
    int source_count() const { return sources_; }
    void set_source_count(int n);

    const AtomTable& atoms() const { return atoms_; }
    const std::vector<Formula>& agenda() const { return agenda_; }
    const std::vector<Formula>& gamma() const { return gamma_; }
    const std::vector<IssueLinearConstraint>& gamma_hat() const {
        return gamma_hat_;
    }
    const std::vector<LinearConstraint>& gamma_hat_worldspace() const {
        return gamma_hat_world_;
    }

    bool issue_true_at(int issue, std::uint32_t world) const {
        return issue_tt_[issue][world];
    }
    bool literal_true_at(SignedIssue s, std::uint32_t world) const {
        return issue_tt_[s.issue][world] != s.negated;
    }
    const std::vector<std::uint32_t>& gamma_models() const {
        return gamma_models_;
    }
    // Dense world-indicator of a signed agenda element (LP coefficient row).
    std::vector<double> literal_indicator(SignedIssue s) const;

    // True iff some Gamma-model satisfies every literal.
    bool consistent_with_gamma(const std::vector<SignedIssue>& literals) const;
    bool consistent_with_gamma(const CrispJudgmentSet& set) const;

    // ASCII rendering of a signed agenda element, e.g. "!(s | t)".
    std::string literal_text(SignedIssue s) const;

private:
    AtomTable atoms_;
    std::vector<Formula> agenda_;
    std::vector<Formula> gamma_;
    std::vector<IssueLinearConstraint> gamma_hat_;
    int sources_ = 0;
    std::uint32_t world_count_ = 0;
    std::vector<std::vector<bool>> issue_tt_;
    std::vector<std::uint32_t> gamma_models_;
    std::vector<LinearConstraint> gamma_hat_world_;
};

// All consistent and complete crisp judgment sets, in lexicographic sign
// order (accept before reject, issues in agenda order).
std::vector<CrispJudgmentSet> rational_sets(const Frame& frame);

// A consistent literal set that, together with Gamma, decides every other
// element of signed agenda. Literals are kept sorted.
using Implicant = std::vector<SignedIssue>;

bool is_implicant(const Implicant& candidate, const Frame& frame);

// All subset-minimal implicants, by increasing cardinality then
// lexicographic literal order.
std::vector<Implicant> prime_implicants(const Frame& frame);

// The unique complete crisp set containing the implicant and everything it
// entails under Gamma. DomainError when `implicant` is not one.
CrispJudgmentSet closure(const Implicant& implicant, const Frame& frame);

}  // namespace likejudge

#endif
