#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mteam/numeric.hpp"
#include "mteam/symbol.hpp"

namespace mteam {

/// A finite multiset of domain elements. Zero multiplicities may be stored;
/// equality and inclusion ignore them.
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::map<Value, Count> entries);
    Multiset(std::initializer_list<std::pair<const Value, Count>> entries);

    /// Every listed value with multiplicity 1.
    static Multiset uniform(const std::vector<Value>& values);

    const std::map<Value, Count>& entries() const { return entries_; }
    const Count& multiplicity(const Value& v) const;
    bool contains(const Value& v) const { return multiplicity(v) > 0; }
    Count size() const;
    /// Values with multiplicity >= 1, in value order.
    std::vector<Value> support() const;

    friend bool operator==(const Multiset& a, const Multiset& b);

private:
    std::map<Value, Count> entries_;
};

Multiset mset_disjoint_union(const Multiset& a, const Multiset& b);

/// The unfolding {(a, i) | 0 < i <= m(a)}.
std::set<std::pair<Value, Count>> canonical_set(const Multiset& a);

/// True iff every multiplicity in `a` is at most the one in `b`.
bool submset_leq(const Multiset& a, const Multiset& b);

}  // namespace mteam
