#include "likejudge/frame.hpp"

#include <algorithm>
#include <utility>

namespace likejudge {

Frame::Frame(AtomTable atoms, std::vector<Formula> agenda,
             std::vector<Formula> gamma,
             std::vector<IssueLinearConstraint> gamma_hat, int sources,
             int atom_limit)
    : atoms_(std::move(atoms)),
      agenda_(std::move(agenda)),
      gamma_(std::move(gamma)),
      gamma_hat_(std::move(gamma_hat)),
      sources_(sources) {
    if (agenda_.empty()) throw DomainError("agenda must not be empty");
    if (static_cast<int>(agenda_.size()) > 31) {
        throw DomainError("agendas above 31 issues are not supported");
    }
    if (atoms_.size() == 0) throw DomainError("at least one atom is required");
    if (atoms_.size() > atom_limit) {
        throw AtomLimitError(atoms_.size(), atom_limit);
    }
    if (sources_ < 0) throw DomainError("negative source count");

    world_count_ = std::uint32_t{1} << atoms_.size();

    issue_tt_.reserve(agenda_.size());
    for (std::size_t i = 0; i < agenda_.size(); ++i) {
        std::vector<bool> tt = truth_table(agenda_[i], atoms_.size());
        std::size_t satisfied =
            static_cast<std::size_t>(std::count(tt.begin(), tt.end(), true));
        if (satisfied == 0) {
            throw DomainError("agenda issue " + std::to_string(i) +
                              " is a contradiction");
        }
        if (satisfied == tt.size()) {
            throw DomainError("agenda issue " + std::to_string(i) +
                              " is a tautology");
        }
        issue_tt_.push_back(std::move(tt));
    }

    std::vector<bool> gamma_tt(world_count_, true);
    for (const Formula& g : gamma_) {
        std::vector<bool> tt = truth_table(g, atoms_.size());
        for (std::uint32_t w = 0; w < world_count_; ++w) {
            gamma_tt[w] = gamma_tt[w] && tt[w];
        }
    }
    for (std::uint32_t w = 0; w < world_count_; ++w) {
        if (gamma_tt[w]) gamma_models_.push_back(w);
    }
    if (gamma_models_.empty()) {
        throw DomainError("propositional constraints are unsatisfiable");
    }

    for (const IssueLinearConstraint& ic : gamma_hat_) {
        LinearConstraint c;
        c.coefficients.assign(world_count_, 0.0);
        for (const auto& [coef, formula] : ic.terms) {
            std::vector<bool> tt = truth_table(formula, atoms_.size());
            for (std::uint32_t w = 0; w < world_count_; ++w) {
                if (tt[w]) c.coefficients[w] += coef;
            }
        }
        c.relation = ic.relation;
        c.bound = ic.bound;
        gamma_hat_world_.push_back(std::move(c));
    }
}

void Frame::set_source_count(int n) {
    if (n < 1) throw DomainError("source count must be at least 1");
    sources_ = n;
}

std::vector<double> Frame::literal_indicator(SignedIssue s) const {
    std::vector<double> v(world_count_, 0.0);
    for (std::uint32_t w = 0; w < world_count_; ++w) {
        if (literal_true_at(s, w)) v[w] = 1.0;
    }
    return v;
}

bool Frame::consistent_with_gamma(
    const std::vector<SignedIssue>& literals) const {
    for (std::uint32_t w : gamma_models_) {
        bool all = true;
        for (SignedIssue s : literals) {
            if (!literal_true_at(s, w)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool Frame::consistent_with_gamma(const CrispJudgmentSet& set) const {
    return consistent_with_gamma(set.literals());
}

std::string Frame::literal_text(SignedIssue s) const {
    const Formula& f = agenda_.at(s.issue);
    std::string body = pretty_print(f, atoms_);
    if (!s.negated) return body;
    if (f.kind() == Formula::Kind::Atom || f.kind() == Formula::Kind::Not ||
        f.kind() == Formula::Kind::Verum || f.kind() == Formula::Kind::Falsum) {
        return "!" + body;
    }
    return "!(" + body + ")";
}

std::vector<CrispJudgmentSet> rational_sets(const Frame& frame) {
    const int m = frame.issue_count();
    std::vector<std::uint64_t> keys;
    keys.reserve(frame.gamma_models().size());
    for (std::uint32_t w : frame.gamma_models()) {
        std::uint64_t key = 0;
        for (int i = 0; i < m; ++i) {
            key = key * 4 + (frame.issue_true_at(i, w) ? 0 : 1);
        }
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<CrispJudgmentSet> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys) {
        CrispJudgmentSet set(m);
        for (int i = m - 1; i >= 0; --i) {
            bool rejected = key % 4 == 1;
            key /= 4;
            set.add({i, rejected});
        }
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

// Gamma-models satisfying every literal of the candidate.
std::vector<std::uint32_t> supporting_models(const Implicant& candidate,
                                             const Frame& frame) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t w : frame.gamma_models()) {
        bool all = true;
        for (SignedIssue s : candidate) {
            if (!frame.literal_true_at(s, w)) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(w);
    }
    return out;
}

bool decides_all(const Implicant& candidate,
                 const std::vector<std::uint32_t>& support,
                 const Frame& frame) {
    if (support.empty()) return false;
    std::vector<bool> in_candidate(frame.issue_count(), false);
    for (SignedIssue s : candidate) in_candidate[s.issue] = true;
    for (int i = 0; i < frame.issue_count(); ++i) {
        if (in_candidate[i]) continue;  // complements are decided trivially
        bool first = frame.issue_true_at(i, support.front());
        for (std::uint32_t w : support) {
            if (frame.issue_true_at(i, w) != first) return false;
        }
    }
    return true;
}

bool contains_subset(const std::vector<Implicant>& known,
                     const Implicant& candidate) {
    for (const Implicant& p : known) {
        bool subset = true;
        for (SignedIssue s : p) {
            if (std::find(candidate.begin(), candidate.end(), s) ==
                candidate.end()) {
                subset = false;
                break;
            }
        }
        if (subset) return true;
    }
    return false;
}

}  // namespace

namespace {

void require_valid_literals(const Implicant& literals, const Frame& frame) {
    for (SignedIssue s : literals) {
        if (s.issue < 0 || s.issue >= frame.issue_count()) {
            throw DomainError("literal references issue " +
                              std::to_string(s.issue) + " outside the agenda");
        }
    }
}

}  // namespace

bool is_implicant(const Implicant& candidate, const Frame& frame) {
    require_valid_literals(candidate, frame);
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        for (std::size_t j = i + 1; j < candidate.size(); ++j) {
            if (candidate[i].issue == candidate[j].issue) return false;
        }
    }
    return decides_all(candidate, supporting_models(candidate, frame), frame);
}

std::vector<Implicant> prime_implicants(const Frame& frame) {
    const int m = frame.issue_count();
    std::vector<Implicant> primes;

    std::vector<int> issues;
    for (int size = 0; size <= m; ++size) {
        // Combinations of `size` issues in lexicographic order.
        issues.assign(size, 0);
        for (int i = 0; i < size; ++i) issues[i] = i;
        bool more = true;
        while (more) {
            // Sign patterns: bit (size-1-j) set negates literal j, so
            // ascending integers enumerate positive-first lexicographically.
            for (std::uint32_t signs = 0; signs < (1u << size); ++signs) {
                Implicant candidate(size);
                for (int j = 0; j < size; ++j) {
                    bool neg = (signs >> (size - 1 - j)) & 1u;
                    candidate[j] = {issues[j], neg};
                }
                if (contains_subset(primes, candidate)) continue;
                std::vector<std::uint32_t> support =
                    supporting_models(candidate, frame);
                if (decides_all(candidate, support, frame)) {
                    primes.push_back(std::move(candidate));
                }
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && issues[i] == m - size + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++issues[i];
                for (int j = i + 1; j < size; ++j) issues[j] = issues[j - 1] + 1;
            }
            if (size == 0) more = false;
        }
    }
    return primes;
}

CrispJudgmentSet closure(const Implicant& implicant, const Frame& frame) {
    require_valid_literals(implicant, frame);
    std::vector<std::uint32_t> support = supporting_models(implicant, frame);
    if (!decides_all(implicant, support, frame)) {
        throw DomainError("literal set is not an implicant");
    }
    CrispJudgmentSet out(frame.issue_count());
    for (SignedIssue s : implicant) out.add(s);
    std::vector<bool> in(frame.issue_count(), false);
    for (SignedIssue s : implicant) in[s.issue] = true;
    for (int i = 0; i < frame.issue_count(); ++i) {
        if (in[i]) continue;
        out.add({i, !frame.issue_true_at(i, support.front())});
    }
    return out;
}

}  // namespace likejudge
