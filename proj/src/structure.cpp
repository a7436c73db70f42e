#include "mteam/structure.hpp"

#include "mteam/error.hpp"

namespace mteam {

Multistructure::Multistructure(Multiset domain) : Multistructure(std::move(domain), {}) {}

Multistructure::Multistructure(Multiset domain, std::map<std::string, Relation> relations)
    : domain_(std::move(domain)), universe_(domain_.support()), relations_(std::move(relations)) {
    for (const auto& [name, rel] : relations_) {
        for (const auto& tuple : rel.tuples) {
            if (tuple.size() != rel.arity)
                throw InputError("relation " + name + "/" + std::to_string(rel.arity) + ": tuple of length " +
                                 std::to_string(tuple.size()));
            for (const auto& v : tuple)
                if (!domain_.contains(v))
                    throw InputError("relation " + name + ": value '" + v.name() + "' is not in the domain support");
        }
    }
}

Multistructure Multistructure::plain(const std::vector<Value>& values) {
    return Multistructure(Multiset::uniform(values));
}

const Relation& Multistructure::relation(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end()) throw InputError("unknown relation symbol '" + name + "'");
    return it->second;
}

bool Multistructure::holds(const std::string& name, const Row& tuple) const {
    const auto& rel = relation(name);
    if (tuple.size() != rel.arity)
        throw InputError("relation " + name + " has arity " + std::to_string(rel.arity) + ", used with " +
                         std::to_string(tuple.size()) + " arguments");
    return rel.tuples.count(tuple) != 0;
}

}  // namespace mteam
