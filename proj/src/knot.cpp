#include "twobridge/knot.hpp"

#include <algorithm>

namespace twobridge {

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = std::exchange(r, std::move(tmp));
        tmp = old_s - quot * s;
        old_s = std::exchange(s, std::move(tmp));
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    Int inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

TwoBridgeKnot normalize_knot(const Int& p, const Int& q) {
    using boost::multiprecision::gcd;
    if (q < 1) throw KnotError(KnotErrorKind::invalid, "normalize_knot: q must be positive");
    if (q == 1) throw KnotError(KnotErrorKind::unknot, "normalize_knot: q = 1 gives the unknot");
    if (q % 2 == 0)
        throw KnotError(KnotErrorKind::even_denominator, "normalize_knot: even q gives a 2-component link");

    Int pm = p % q;
    if (pm < 0) pm += q;
    if (pm == 0) throw KnotError(KnotErrorKind::invalid, "normalize_knot: p = 0 mod q");
    if (gcd(pm, q) != 1) throw KnotError(KnotErrorKind::not_coprime, "normalize_knot: gcd(p, q) != 1");

    TwoBridgeKnot k;
    k.p_ = pm;
    k.q_ = q;
    Int inv = mod_inverse(pm, q);
    k.chirality_reps_ = {pm, inv};
    std::sort(k.chirality_reps_.begin(), k.chirality_reps_.end());
    k.chirality_reps_.erase(std::unique(k.chirality_reps_.begin(), k.chirality_reps_.end()),
                            k.chirality_reps_.end());

    k.class_reps_ = {pm, q - pm, inv, q - inv};
    std::sort(k.class_reps_.begin(), k.class_reps_.end());
    k.class_reps_.erase(std::unique(k.class_reps_.begin(), k.class_reps_.end()), k.class_reps_.end());
    k.canonical_p_ = k.class_reps_.front();
    k.torus_ = std::find(k.class_reps_.begin(), k.class_reps_.end(), Int(1)) != k.class_reps_.end();
    return k;
}

bool TwoBridgeKnot::same_chirality_as_canonical(const Int& rep) const {
    Int r = rep % q_;
    if (r < 0) r += q_;
    return r == canonical_p_ || r == mod_inverse(canonical_p_, q_);
}

}  // namespace twobridge
