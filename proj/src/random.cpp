#include "mteam/random.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mteam {

namespace {

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

class FormulaGen {
public:
    FormulaGen(Rng& rng, FormulaClass cls, const Multistructure& A, const FormulaBounds& b)
        : rng_(rng), cls_(cls), A_(A), b_(b), quantifiers_left_(b.max_quantifiers) {}

    Formula gen(std::size_t depth, std::vector<Var> scope) {
        if (depth <= 1 || scope.empty() || coin(rng_, 0.2)) return atom(scope);
        std::vector<int> kinds{0, 1};  // and, or
        if (quantifiers_left_ > 0) for (int k : {2, 3}) kinds.push_back(k);
        if (cls_ == FormulaClass::Full && !b_.thresholds.empty()) {
            for (int k : {4, 5}) kinds.push_back(k);
            if (b_.implication) kinds.push_back(6);
        }
        switch (kinds[pick(rng_, 0, kinds.size() - 1)]) {
            case 0: return conj(gen(depth - 1, scope), gen(depth - 1, scope));
            case 1: return disj(gen(depth - 1, scope), gen(depth - 1, scope));
            case 2:
            case 3: {
                --quantifiers_left_;
                std::vector<Var> pool = scope;
                for (const char* fresh : {"u", "v"})
                    if (std::find(pool.begin(), pool.end(), Var(fresh)) == pool.end()) pool.emplace_back(fresh);
                Var x = pool[pick(rng_, 0, pool.size() - 1)];
                std::vector<Var> inner = scope;
                if (std::find(inner.begin(), inner.end(), x) == inner.end()) inner.push_back(x);
                Formula body = gen(depth - 1, inner);
                return coin(rng_) ? exists(x, body) : forall(x, body);
            }
            case 4: return exists_frac(threshold(), gen(depth - 1, scope));
            case 5: return forall_frac(threshold(), gen(depth - 1, scope));
            default: {
                Threshold p = threshold();
                Formula a = gen(depth - 1, scope);
                return impl_frac(p, a, gen(depth - 1, scope));
            }
        }
    }

private:
    Threshold threshold() { return Threshold::ratio(b_.thresholds[pick(rng_, 0, b_.thresholds.size() - 1)]); }

    Var var(const std::vector<Var>& scope) { return scope[pick(rng_, 0, scope.size() - 1)]; }

    Tuple tuple(const std::vector<Var>& scope, std::size_t lo, std::size_t hi) {
        Tuple t(pick(rng_, lo, hi));
        for (auto& v : t) v = var(scope);
        return t;
    }

    Formula literal(const std::vector<Var>& scope) {
        std::vector<int> kinds{0, 1};
        if (!A_.relations().empty()) for (int k : {2, 3}) kinds.push_back(k);
        switch (kinds[pick(rng_, 0, kinds.size() - 1)]) {
            case 0: return eq(var(scope), var(scope));
            case 1: return neq(var(scope), var(scope));
            default: {
                auto it = A_.relations().begin();
                std::advance(it, static_cast<std::ptrdiff_t>(pick(rng_, 0, A_.relations().size() - 1)));
                Tuple args(it->second.arity);
                for (auto& v : args) v = var(scope);
                return coin(rng_) ? rel(it->first, args) : neg_rel(it->first, args);
            }
        }
    }

    Formula atom(const std::vector<Var>& scope) {
        // 0 literal, 1 dep, 2 inc, 3 ind, 4 pinc, 5 pind, 6 excl
        std::vector<int> kinds{0};
        switch (cls_) {
            case FormulaClass::FirstOrder: break;
            case FormulaClass::Dep: for (int k : {1, 1}) kinds.push_back(k); break;
            case FormulaClass::DepIncCi: for (int k : {1, 2, 3}) kinds.push_back(k); break;
            case FormulaClass::PincInc: for (int k : {2, 4, 4}) kinds.push_back(k); break;
            case FormulaClass::Full: for (int k : {1, 2, 3, 4, 5, 6}) kinds.push_back(k); break;
        }
        if (scope.empty()) return dep({}, {});
        const int kind = kinds[pick(rng_, 0, kinds.size() - 1)];
        switch (kind) {
            case 0: return literal(scope);
            case 1: return dep(tuple(scope, 0, 2), tuple(scope, 1, 2));
            case 3: return ci(tuple(scope, 0, 1), tuple(scope, 1, 2), tuple(scope, 1, 2));
            case 5: return pci(tuple(scope, 0, 1), tuple(scope, 1, 2), tuple(scope, 1, 2));
            default: break;
        }
        Tuple a = tuple(scope, 1, 2);
        Tuple b = tuple(scope, a.size(), a.size());
        if (kind == 2) return inc(a, b);
        if (kind == 4) return pinc(a, b);
        return excl(a, b);
    }

    Rng& rng_;
    FormulaClass cls_;
    const Multistructure& A_;
    const FormulaBounds& b_;
    std::size_t quantifiers_left_;
};

}  // namespace

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Multistructure random_structure(Rng& rng, const StructureBounds& b) {
    const std::size_t n = pick(rng, 1, std::max<std::size_t>(1, b.max_domain));
    std::map<Value, Count> dom;
    std::vector<Value> values;
    for (std::size_t i = 0; i < n; ++i) {
        values.emplace_back(std::to_string(i));
        dom.emplace(values.back(), Count(pick(rng, 1, std::max(1u, b.max_domain_mult))));
    }
    std::map<std::string, Relation> rels;
    if (b.relations) {
        Relation p{1, {}}, r{2, {}};
        for (const auto& a : values)
            if (coin(rng)) p.tuples.insert({a});
        for (const auto& a : values)
            for (const auto& c : values)
                if (coin(rng)) r.tuples.insert({a, c});
        rels.emplace("P", std::move(p));
        rels.emplace("R", std::move(r));
    }
    return Multistructure(Multiset(std::move(dom)), std::move(rels));
}

std::vector<Var> team_vars(std::size_t n) {
    std::vector<Var> vars;
    for (std::size_t i = 0; i < n; ++i) vars.emplace_back("x" + std::to_string(i));
    return vars;
}

Multiteam random_team(Rng& rng, const Multistructure& A, const std::vector<Var>& vars, const TeamBounds& b) {
    const auto& values = A.universe();
    const std::size_t rows = pick(rng, 0, b.max_rows);
    std::vector<std::pair<Row, Count>> out;
    std::set<Row> seen;
    for (std::size_t i = 0; i < rows; ++i) {
        Row r(vars.size());
        for (auto& a : r) a = values[pick(rng, 0, values.size() - 1)];
        if (!seen.insert(r).second) continue;
        Count m = pick(rng, 1, std::max(1u, b.max_mult));
        if (b.zero_rows && coin(rng, 0.1)) m = 0;
        out.emplace_back(std::move(r), std::move(m));
    }
    return Multiteam(vars, std::move(out));
}

Formula random_formula(Rng& rng, FormulaClass cls, const Multistructure& A, const std::vector<Var>& scope,
                       const FormulaBounds& b) {
    FormulaGen gen(rng, cls, A, b);
    return gen.gen(pick(rng, 1, std::max<std::size_t>(1, b.max_depth)), scope);
}

}  // namespace mteam
