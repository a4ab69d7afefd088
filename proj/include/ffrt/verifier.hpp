#ifndef FFRT_VERIFIER_HPP
#define FFRT_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffrt/sl2_characters.hpp"
#include "ffrt/summand_catalog.hpp"

namespace ffrt {

// Degree -> weight character, truncated at a configured bound.
struct GradedCharacter {
    std::map<int, WeightCharacter> deg;

    void add(int d, const WeightCharacter& c);
    bool empty() const;
    bool operator==(const GradedCharacter&) const = default;
};

// Truncated graded character of one summand, degrees up to D.
// Degrees follow the natural grading of the Frobenius-scaled summand
// (layer m sits at p^r * m); a set twist shifts the normalized module so
// that its bottom lands at the twist degree.
GradedCharacter summand_graded_character(const SummandInstance& s, int n, std::int64_t p, int D);

struct SolveEntry {
    SummandInstance inst;  // twist set to the attachment degree
    long long multiplicity = 0;
};

struct MultiplicityAssignment {
    enum class Status { Solved, Inconsistent, Inconclusive };
    Status status = Status::Inconsistent;
    std::vector<SolveEntry> entries;
    GradedCharacter residual;
    std::optional<std::pair<int, int>> first_failure;  // (degree, weight)
    std::string detail;
};

// Ascending-degree greedy peel with backtracking. At the lowest unexplained
// degree the residual must be matched exactly by bottoms of candidates
// attached there; attachment degrees start at each candidate's natural
// bottom (nonnegative normalized twists). Fits preferring the most specific
// bottoms are tried first; a later negative residual backtracks. Candidates
// with identical truncated characters make a solved run "inconclusive:
// ambiguous" when used.
MultiplicityAssignment solve_multiplicities(const GradedCharacter& target,
                                            const std::vector<SummandInstance>& candidates, int n,
                                            std::int64_t p, int D);

enum class Scenario { S_Gr, TjS_G1, Kjk_G1, B1_predictor };

struct VerifyParams {
    int n = 4;
    std::int64_t p = 3;
    int r = 1;
    int j = 1;
    int k = 1;
    int D = 12;
    int lmax = 3;  // B1 predictor: compare H^l for l = 1..lmax
    int threads = 0;
};

struct VerifyEntry {
    SummandInstance inst;                       // catalog entry (twist empty)
    std::vector<std::pair<int, long long>> attachments;  // (degree, multiplicity)
    std::string status;                         // confirmed / unreached / possible
};

struct VerifyReport {
    Scenario scenario = Scenario::S_Gr;
    VerifyParams params;
    bool consistent = false;
    std::string status;  // consistent / inconsistent / inconclusive
    std::vector<VerifyEntry> entries;
    std::vector<int> residual_degrees;
    std::optional<std::pair<int, int>> first_failure;
    std::string detail;
    long long runtime_ms = 0;
};

VerifyReport verify_decomposition(Scenario sc, const VerifyParams& params);

std::string scenario_name(Scenario sc);

}  // namespace ffrt

#endif
