#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

enum class KnotErrorKind {
    even_denominator,  ///< q even: a 2-component link, not a knot
    unknot,            ///< q = 1
    not_coprime,
    invalid,
};

class KnotError : public std::domain_error {
public:
    KnotError(KnotErrorKind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
    KnotErrorKind kind() const { return kind_; }

private:
    KnotErrorKind kind_;
};

/// Normalized equivalence class of the 2-bridge knot K_{p/q}. Two fractions
/// give equivalent knots (up to mirror image) iff they share q and p lies in
/// {p, q-p, p^-1, q-p^-1} mod q; dropping mirror images keeps {p, p^-1}.
class TwoBridgeKnot {
public:
    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& canonical_p() const { return canonical_p_; }
    const std::vector<Int>& class_reps() const { return class_reps_; }
    /// Mirror-sensitive subclass {p, p^-1 mod q} of the input representative.
    const std::vector<Int>& chirality_reps() const { return chirality_reps_; }
    bool is_torus() const { return torus_; }

    Rational fraction() const { return Rational(p_, q_); }
    Rational canonical_fraction() const { return Rational(canonical_p_, q_); }

    /// True when rep belongs to the same chirality subclass as canonical_p.
    bool same_chirality_as_canonical(const Int& rep) const;

    std::string str() const { return p_.str() + "/" + q_.str(); }

    friend bool operator==(const TwoBridgeKnot& a, const TwoBridgeKnot& b) {
        return a.q_ == b.q_ && a.canonical_p_ == b.canonical_p_;
    }
    friend bool operator!=(const TwoBridgeKnot& a, const TwoBridgeKnot& b) { return !(a == b); }

private:
    friend TwoBridgeKnot normalize_knot(const Int& p, const Int& q);

    Int p_, q_, canonical_p_;
    std::vector<Int> class_reps_;
    std::vector<Int> chirality_reps_;
    bool torus_ = false;
};

/// Inverse of a mod m; requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

/// Build the equivalence class of K_{p/q}. q must be odd and >= 3 (q even is
/// a link, q = 1 the unknot; both rejected), p coprime to q and nonzero mod q.
TwoBridgeKnot normalize_knot(const Int& p, const Int& q);

inline bool knots_equivalent(const TwoBridgeKnot& a, const TwoBridgeKnot& b) { return a == b; }

}  // namespace twobridge
