#pragma once

#include <string>
#include <vector>

#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/minimal_paths.hpp"

namespace twobridge {

/// One syllable (c_i, eta_i) of a word acting on the seed fraction. The
/// syllable (0, +1) is the identity and rejected.
struct OrsSyllable {
    Int c;
    int eta;  ///< +1 or -1
};

/// Word of even length n >= 2. The sign chain eps_1 = 1,
/// eps_{i+1} = eps_i * (-eta_i) drives the block signs of the output.
class OrsWord {
public:
    explicit OrsWord(std::vector<OrsSyllable> syllables);

    const std::vector<OrsSyllable>& syllables() const { return syllables_; }
    std::size_t length() const { return syllables_.size(); }
    /// eps_1..eps_{n+1} (index 0 unused).
    const std::vector<int>& epsilons() const { return epsilons_; }
    std::size_t nonzero_twists() const;

    std::string str() const;

private:
    std::vector<OrsSyllable> syllables_;
    std::vector<int> epsilons_;
};

/// Word syntax "c1:e1,c2:e2,..." with e in {+,-}.
OrsWord parse_ors_word(const std::string& text);

struct OrsPair {
    std::vector<Int> seed;       ///< strongly positive vector a
    OrsWord word;
    ContinuedFraction raw_cf;     ///< alternating blocks eps_i * a^(+-1) and twists 2*eps_i*c_i
    ContinuedFraction reduced_cf; ///< raw with the zero twists eliminated
    Rational child_value;         ///< p'/q' in (0,1)
    TwoBridgeKnot parent;          ///< K_{p/q} from the seed
    TwoBridgeKnot child;           ///< K_{p'/q'}
};

/// Apply the word to the seed: assemble the raw expansion, eliminate zero
/// twists (the adjacent blocks carry the same sign and merge), and normalize
/// both knots. The reduced expansion has n(m-1) + m + 2k quotients where k
/// counts the nonzero twists.
OrsPair ors_apply(const std::vector<Int>& seed, const OrsWord& word);

/// Rewrite a zero-free expansion of the reduced form into a strongly
/// positive one of equal value and at least as many quotients, by repeatedly
/// clearing the leftmost negative quotient and dropping transient zeros.
ContinuedFraction ors_strongly_positive(const ContinuedFraction& cf);

enum class Dichotomy { torus_case, at_least_five };

struct Theorem42Result {
    Dichotomy branch;
    long long distinct_slopes;
};

/// Verify the dichotomy for a generated pair: the child is a torus knot with
/// exactly two distinct slopes (and then the parent is a torus knot too), or
/// it has at least five. Anything else throws.
Theorem42Result theorem42_check(const OrsPair& pair);

}  // namespace twobridge
