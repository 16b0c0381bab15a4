#include "defobs/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "defobs/rational.hpp"

namespace defobs {

namespace {

// prime -> exponents present, one entry per cyclic factor that the prime divides
using PrimaryDecomposition = std::map<std::int64_t, std::vector<int>>;

PrimaryDecomposition decompose(const std::vector<std::int64_t>& factors) {
    PrimaryDecomposition primary;
    for (std::int64_t n : factors) {
        for (std::int64_t p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            primary[p].push_back(e);
        }
        if (n > 1) primary[n].push_back(1);
    }
    return primary;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<std::int64_t>& factors) {
    std::vector<std::int64_t> kept;
    for (std::int64_t f : factors) {
        if (f < 1) throw std::domain_error("FiniteAbelianGroup: factor must be >= 1");
        if (f > 1) kept.push_back(f);
    }
    // Smith-style merge: align each prime's exponents largest-first, then the
    // i-th invariant factor (from the top) is the product of the i-th largest
    // prime powers.
    PrimaryDecomposition primary = decompose(kept);
    std::size_t chain_length = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chain_length = std::max(chain_length, exps.size());
    }
    std::vector<std::int64_t> chain(chain_length, 1);
    for (const auto& [p, exps] : primary) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            std::int64_t pe = 1;
            for (int e = 0; e < exps[i]; ++e) pe = checked_mul(pe, p);
            chain[i] = checked_mul(chain[i], pe);
        }
    }
    std::reverse(chain.begin(), chain.end());  // ascending divisor chain
    factors_ = std::move(chain);
}

std::int64_t FiniteAbelianGroup::order() const {
    std::int64_t n = 1;
    for (std::int64_t f : factors_) n = checked_mul(n, f);
    return n;
}

bool FiniteAbelianGroup::is_two_torsion() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](std::int64_t f) { return f == 2; });
}

std::string FiniteAbelianGroup::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors_[i]);
    }
    return s;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<std::int64_t> all = a.invariant_factors();
    const auto& bf = b.invariant_factors();
    all.insert(all.end(), bf.begin(), bf.end());
    return FiniteAbelianGroup(all);
}

HomCounts hom_counts(const FiniteAbelianGroup& g) {
    std::int64_t pm1 = 1;
    for (std::int64_t f : g.invariant_factors())
        if (f % 2 == 0) pm1 = checked_mul(pm1, 2);
    return HomCounts{g.order(), pm1};
}

}  // namespace defobs
