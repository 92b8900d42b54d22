#ifndef LIKEJUDGE_TESTS_HELPERS_HPP
#define LIKEJUDGE_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "likejudge/io.hpp"

namespace ljt {

using namespace likejudge;

inline std::string fixture_path(const std::string& name) {
    return std::string(LIKEJUDGE_FIXTURE_DIR) + "/" + name;
}

inline Frame fixture_frame(const std::string& name) {
    return load_frame(fixture_path(name));
}

inline Profile fixture_profile(const std::string& name, const Frame& frame) {
    return load_profile(fixture_path(name), frame);
}

inline Frame co2_frame() { return fixture_frame("co2_frame.json"); }
inline Frame hotel_frame() { return fixture_frame("hotel_frame.json"); }

// Complete crisp set from accept(1)/reject(0) flags in agenda order.
inline CrispJudgmentSet signs(const std::vector<int>& accept) {
    CrispJudgmentSet set(static_cast<int>(accept.size()));
    for (std::size_t i = 0; i < accept.size(); ++i) {
        set.add({static_cast<int>(i), accept[i] == 0});
    }
    return set;
}

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random formula over the first `atoms` atoms of the table.
inline Formula random_formula(const AtomTable& table, std::mt19937_64& rng,
                              int depth = 3) {
    if (depth == 0 || unit(rng) < 0.3) {
        double u = unit(rng);
        if (u < 0.05) return Formula::verum();
        if (u < 0.1) return Formula::falsum();
        return Formula::atom(static_cast<int>(rng() % table.size()));
    }
    switch (rng() % 5) {
        case 0:
            return Formula::negation(random_formula(table, rng, depth - 1));
        case 1:
            return Formula::conjunction(random_formula(table, rng, depth - 1),
                                        random_formula(table, rng, depth - 1));
        case 2:
            return Formula::disjunction(random_formula(table, rng, depth - 1),
                                        random_formula(table, rng, depth - 1));
        case 3:
            return Formula::implication(random_formula(table, rng, depth - 1),
                                        random_formula(table, rng, depth - 1));
        default:
            return Formula::biconditional(random_formula(table, rng, depth - 1),
                                          random_formula(table, rng, depth - 1));
    }
}

}  // namespace ljt

#endif
