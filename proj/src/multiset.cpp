#include "mteam/multiset.hpp"

#include "mteam/error.hpp"

namespace mteam {

namespace {
const Count kZero = 0;
}

Multiset::Multiset(std::map<Value, Count> entries) : entries_(std::move(entries)) {
    for (const auto& [v, m] : entries_)
        if (m < 0) throw InputError("negative multiplicity for '" + v.name() + "'");
}

Multiset::Multiset(std::initializer_list<std::pair<const Value, Count>> entries)
    : Multiset(std::map<Value, Count>(entries)) {}

Multiset Multiset::uniform(const std::vector<Value>& values) {
    std::map<Value, Count> entries;
    for (const auto& v : values) entries[v] = 1;
    return Multiset(std::move(entries));
}

const Count& Multiset::multiplicity(const Value& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? kZero : it->second;
}

Count Multiset::size() const {
    Count total = 0;
    for (const auto& [v, m] : entries_) total += m;
    return total;
}

std::vector<Value> Multiset::support() const {
    std::vector<Value> out;
    for (const auto& [v, m] : entries_)
        if (m > 0) out.push_back(v);
    return out;
}

bool operator==(const Multiset& a, const Multiset& b) {
    return submset_leq(a, b) && submset_leq(b, a);
}

Multiset mset_disjoint_union(const Multiset& a, const Multiset& b) {
    std::map<Value, Count> entries = a.entries();
    for (const auto& [v, m] : b.entries()) entries[v] += m;
    return Multiset(std::move(entries));
}

std::set<std::pair<Value, Count>> canonical_set(const Multiset& a) {
    std::set<std::pair<Value, Count>> out;
    for (const auto& [v, m] : a.entries())
        for (Count i = 1; i <= m; ++i) out.emplace(v, i);
    return out;
}

bool submset_leq(const Multiset& a, const Multiset& b) {
    for (const auto& [v, m] : a.entries())
        if (m > b.multiplicity(v)) return false;
    return true;
}

}  // namespace mteam
