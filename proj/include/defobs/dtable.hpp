#ifndef DEFOBS_DTABLE_HPP
#define DEFOBS_DTABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "defobs/rational.hpp"

namespace defobs {

/// Spin-c structures are labeled by elements of H_1, one residue per
/// invariant factor. Connected sums concatenate labels.
using SpinCLabel = std::vector<std::int64_t>;

/// Correction terms d(Y, s) indexed by spin-c label. Labelings are treated
/// as opaque; comparisons across orientation or surgery conventions go
/// through the sorted value multiset.
class DInvariantTable {
public:
    DInvariantTable() = default;

    static DInvariantTable s3();  // single label, d = 0

    void set(SpinCLabel label, Rational d);
    const std::map<SpinCLabel, Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    Rational max_value() const;                 // throws on empty table
    std::vector<Rational> values_sorted() const;
    DInvariantTable negated() const;            // d(-Y, s) = -d(Y, s)

    /// "{-7/4, -1/4}" — sorted value multiset.
    std::string values_str() const;

    bool operator==(const DInvariantTable&) const = default;

private:
    std::map<SpinCLabel, Rational> entries_;
};

}  // namespace defobs

#endif
