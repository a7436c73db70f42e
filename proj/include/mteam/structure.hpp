#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mteam/multiset.hpp"
#include "mteam/multiteam.hpp"

namespace mteam {

struct Relation {
    std::size_t arity = 0;
    std::set<Row> tuples;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// A domain multiset plus named relations over the domain's support.
class Multistructure {
public:
    Multistructure() = default;
    explicit Multistructure(Multiset domain);
    /// Throws InputError if a tuple has the wrong arity or uses a value
    /// outside the support of `domain`.
    Multistructure(Multiset domain, std::map<std::string, Relation> relations);

    /// All values with multiplicity 1, no relations.
    static Multistructure plain(const std::vector<Value>& values);

    const Multiset& domain() const { return domain_; }
    /// Support of the domain in value order.
    const std::vector<Value>& universe() const { return universe_; }
    const std::map<std::string, Relation>& relations() const { return relations_; }

    /// Throws InputError for unknown names.
    const Relation& relation(const std::string& name) const;
    bool holds(const std::string& name, const Row& tuple) const;

    friend bool operator==(const Multistructure& a, const Multistructure& b) {
        return a.domain_ == b.domain_ && a.relations_ == b.relations_;
    }

private:
    Multiset domain_;
    std::vector<Value> universe_;
    std::map<std::string, Relation> relations_;
};

}  // namespace mteam
