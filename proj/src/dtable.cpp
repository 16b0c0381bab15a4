#include "defobs/dtable.hpp"

#include <algorithm>
#include <stdexcept>

namespace defobs {

DInvariantTable DInvariantTable::s3() {
    DInvariantTable t;
    t.set(SpinCLabel{}, Rational(0));
    return t;
}

void DInvariantTable::set(SpinCLabel label, Rational d) {
    entries_[std::move(label)] = d;
}

Rational DInvariantTable::max_value() const {
    if (entries_.empty()) throw std::logic_error("DInvariantTable: empty table");
    Rational best = entries_.begin()->second;
    for (const auto& [label, d] : entries_)
        if (d > best) best = d;
    return best;
}

std::vector<Rational> DInvariantTable::values_sorted() const {
    std::vector<Rational> v;
    v.reserve(entries_.size());
    for (const auto& [label, d] : entries_) v.push_back(d);
    std::sort(v.begin(), v.end());
    return v;
}

DInvariantTable DInvariantTable::negated() const {
    DInvariantTable t;
    for (const auto& [label, d] : entries_) t.set(label, -d);
    return t;
}

std::string DInvariantTable::values_str() const {
    std::string s = "{";
    bool first = true;
    for (const Rational& d : values_sorted()) {
        if (!first) s += ", ";
        s += d.str();
        first = false;
    }
    return s + "}";
}

}  // namespace defobs
