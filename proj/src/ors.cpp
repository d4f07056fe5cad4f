#include "twobridge/ors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twobridge {

OrsWord::OrsWord(std::vector<OrsSyllable> syllables) : syllables_(std::move(syllables)) {
    if (syllables_.empty() || syllables_.size() % 2 != 0)
        throw std::invalid_argument("OrsWord: length must be even and positive");
    epsilons_.assign(syllables_.size() + 2, 0);
    epsilons_[1] = 1;
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
        const OrsSyllable& s = syllables_[i];
        if (s.eta != 1 && s.eta != -1) throw std::invalid_argument("OrsWord: eta must be +-1");
        if (s.c == 0 && s.eta == 1) throw std::invalid_argument("OrsWord: (0,+1) is the identity syllable");
        epsilons_[i + 2] = epsilons_[i + 1] * -s.eta;
    }
}

std::size_t OrsWord::nonzero_twists() const {
    std::size_t k = 0;
    for (const OrsSyllable& s : syllables_)
        if (s.c != 0) ++k;
    return k;
}

std::string OrsWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
        if (i) os << ",";
        os << syllables_[i].c.str() << ":" << (syllables_[i].eta > 0 ? "+" : "-");
    }
    return os.str();
}

OrsWord parse_ors_word(const std::string& text) {
    std::vector<OrsSyllable> syllables;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("parse_ors_word: expected c:e in '" + item + "'");
        std::string cpart = item.substr(0, colon);
        std::string epart = item.substr(colon + 1);
        if (epart != "+" && epart != "-")
            throw std::invalid_argument("parse_ors_word: sign must be + or - in '" + item + "'");
        syllables.push_back({Int(cpart), epart == "+" ? 1 : -1});
    }
    return OrsWord(std::move(syllables));
}

namespace {

bool strongly_positive_vector(const std::vector<Int>& a) {
    if (a.empty()) return false;
    for (const Int& v : a)
        if (v <= 0) return false;
    return a.front() > 1 && a.back() > 1;
}

}  // namespace

OrsPair ors_apply(const std::vector<Int>& seed, const OrsWord& word) {
    if (!strongly_positive_vector(seed))
        throw std::invalid_argument("ors_apply: seed is not a strongly positive vector");

    ContinuedFraction seed_cf(0, seed);
    Rational parent_value = eval_cf(seed_cf);

    const std::vector<int>& eps = word.epsilons();
    const std::size_t n = word.length();
    const std::size_t m = seed.size();

    ContinuedFraction raw;
    raw.quotients.reserve((n + 1) * m + n);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const bool forward = (i % 2 == 1);
        for (std::size_t j = 0; j < m; ++j) {
            const Int& a = forward ? seed[j] : seed[m - 1 - j];
            raw.quotients.push_back(eps[i] * a);
        }
        if (i <= n) raw.quotients.push_back(2 * eps[i] * word.syllables()[i - 1].c);
    }

    ContinuedFraction reduced = raw;
    for (std::size_t i = 0; i < reduced.quotients.size();) {
        if (reduced.quotients[i] == 0)
            reduced = rewrite_drop_zero(reduced, i);
        else
            ++i;
    }

    const std::size_t k = word.nonzero_twists();
    if (reduced.quotients.size() != n * (m - 1) + m + 2 * k)
        throw std::logic_error("ors_apply: reduced quotient count does not match n(m-1)+m+2k");

    Rational child_value = eval_cf(raw);
    if (eval_cf(reduced) != child_value)
        throw std::logic_error("ors_apply: zero elimination changed the value");
    if (child_value.denominator() % 2 == 0 || child_value.denominator() < 3)
        throw std::logic_error("ors_apply: child denominator is not an odd integer >= 3");

    OrsPair pair{seed,
                 word,
                 std::move(raw),
                 std::move(reduced),
                 child_value,
                 normalize_knot(parent_value.numerator(), parent_value.denominator()),
                 normalize_knot(child_value.numerator(), child_value.denominator())};
    return pair;
}

ContinuedFraction ors_strongly_positive(const ContinuedFraction& cf) {
    if (cf.quotients.empty() || cf.integer_part != 0)
        throw std::invalid_argument("ors_strongly_positive: expected a nonempty bracket expansion");
    for (const Int& b : cf.quotients)
        if (b == 0) throw std::invalid_argument("ors_strongly_positive: input must be zero-free");
    if (cf.quotients.front() < 0)
        throw std::invalid_argument("ors_strongly_positive: leading quotient must be positive");

    ContinuedFraction cur = cf;
    // Each pass clears the leftmost negative quotient and negates everything
    // behind it; transient zeros are folded away immediately. The prefix
    // before the first sign change only ever grows.
    const std::size_t step_cap = 64 * (cf.quotients.size() + 4) + 4096;
    std::size_t steps = 0;
    while (true) {
        std::size_t neg = cur.quotients.size();
        for (std::size_t i = 0; i < cur.quotients.size(); ++i) {
            if (cur.quotients[i] < 0) {
                neg = i;
                break;
            }
        }
        if (neg == cur.quotients.size()) break;
        if (neg == 0) throw std::logic_error("ors_strongly_positive: negative leading quotient reached");
        if (++steps > step_cap) throw std::logic_error("ors_strongly_positive: rewrite did not terminate");

        cur = rewrite_negate(cur, neg);
        for (std::size_t i = 0; i < cur.quotients.size();) {
            if (cur.quotients[i] != 0) {
                ++i;
                continue;
            }
            if (i + 1 >= cur.quotients.size())
                throw std::logic_error("ors_strongly_positive: trailing zero produced");
            cur = rewrite_drop_zero(cur, i);
            i = i > 0 ? i - 1 : 0;
        }
    }

    if (!cur.is_strongly_positive())
        throw std::logic_error("ors_strongly_positive: result is not strongly positive");
    if (cur.quotients.size() < cf.quotients.size())
        throw std::logic_error("ors_strongly_positive: result is shorter than the input");
    return cur;
}

Theorem42Result theorem42_check(const OrsPair& pair) {
    SlopeMultiset slopes = boundary_slopes(pair.child);
    const long long distinct = static_cast<long long>(slopes.distinct_count());
    if (pair.child.is_torus()) {
        if (distinct != 2)
            throw std::logic_error("theorem42_check: torus child with " + std::to_string(distinct) + " slopes");
        if (!pair.parent.is_torus())
            throw std::logic_error("theorem42_check: torus child from a non-torus parent");
        return {Dichotomy::torus_case, distinct};
    }
    if (distinct < 5)
        throw std::logic_error("theorem42_check: non-torus child with only " + std::to_string(distinct) +
                               " distinct slopes");
    return {Dichotomy::at_least_five, distinct};
}

}  // namespace twobridge
