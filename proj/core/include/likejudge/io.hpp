#ifndef LIKEJUDGE_IO_HPP
#define LIKEJUDGE_IO_HPP

#include <string>

#include "likejudge/aggregate.hpp"
#include "likejudge/frame.hpp"
#include "likejudge/likelihood.hpp"

namespace likejudge {

// JSON document formats. Formulas travel as strings in the ASCII grammar;
// judgments address agenda elements by formula plus a negation flag.
//
// Frame:    { "atoms": [..], "agenda": ["<formula>", ..],
//             "gamma": ["<formula>", ..],
//             "gamma_hat": [ { "terms": [ {"coef": <num>,
//                                          "issue": "<formula>"} ],
//                              "rel": ">="|"=="|"<=", "bound": <num> } ],
//             "n": <int, optional> }
// Profile:  { "sources": [ { "name": "<id>",
//                            "judgments": [ {"issue": "<formula>",
//                                            "neg": <bool>,
//                                            "rel": ">="|"==",
//                                            "a": <num>} ] } ] }
// Vector:   { "default": <num>,
//             "overrides": [ {"issue": "<formula>", "neg": <bool>,
//                             "c": <num>} ] }

Frame parse_frame_document(const std::string& text,
                           const std::string& context = "frame document");
Profile parse_profile_document(const std::string& text, const Frame& frame,
                               const std::string& context = "profile document");
CrispVector parse_crisp_vector_document(
    const std::string& text, const Frame& frame,
    const std::string& context = "crisp vector document");

Frame load_frame(const std::string& path);
Profile load_profile(const std::string& path, const Frame& frame);
CrispVector load_crisp_vector(const std::string& path, const Frame& frame);

// Emits every signed-agenda entry explicitly (abstentions included); the
// result re-parses to an equal profile.
std::string render_profile_document(const Profile& profile,
                                     const Frame& frame);

// Canonical JSON real: at most 10 significant digits.
double json_real(double value);

std::string relation_token(Rel rel);

}  // namespace likejudge

#endif
