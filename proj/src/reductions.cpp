#include "mteam/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mteam/error.hpp"

namespace mteam {

namespace {

constexpr std::size_t kOracleVarLimit = 20;

Instance encode(const CnfFormula& phi, std::size_t width, Formula f) {
    if (!phi.has_width(width))
        throw InputError("every clause must have exactly " + std::to_string(width) + " literals");
    const std::vector<Var> vars{Var("clause"), Var("literal"), Var("variable"), Var("parity")};
    std::vector<Row> rows;
    std::set<Value> tokens;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) {
            const Literal& l = phi.clauses[i][j];
            Row r{Value(std::to_string(i + 1)), Value(std::to_string(j + 1)), Value(l.var.name()),
                  Value(std::to_string(l.parity))};
            tokens.insert(r.begin(), r.end());
            rows.push_back(std::move(r));
        }
    return {Multistructure::plain({tokens.begin(), tokens.end()}), Multiteam::unit(vars, rows), std::move(f), {}};
}

// Number of clauses satisfied by the assignment encoded in `bits`.
std::size_t satisfied(const CnfFormula& phi, const std::vector<Var>& vars, unsigned long bits) {
    std::size_t n = 0;
    for (const auto& c : phi.clauses) {
        bool ok = std::any_of(c.begin(), c.end(), [&](const Literal& l) {
            auto k = std::lower_bound(vars.begin(), vars.end(), l.var) - vars.begin();
            bool value = (bits >> k) & 1u;
            return value != (l.parity == 1);
        });
        n += ok;
    }
    return n;
}

std::vector<Var> oracle_vars(const CnfFormula& phi) {
    auto vars = phi.variables();
    if (vars.size() > kOracleVarLimit)
        throw InputError("oracle limited to " + std::to_string(kOracleVarLimit) + " variables, got " +
                         std::to_string(vars.size()));
    return vars;
}

}  // namespace

std::vector<Var> CnfFormula::variables() const {
    std::set<Var> vars;
    for (const auto& c : clauses)
        for (const auto& l : c) vars.insert(l.var);
    return {vars.begin(), vars.end()};
}

bool CnfFormula::has_width(std::size_t k) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.size() == k; });
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t ln = 0;
    bool header = false;
    long declared_vars = 0, declared_clauses = 0;
    CnfFormula phi;
    Clause current;
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first == "c" || first[0] == '%') continue;
        if (first == "p") {
            std::string fmt;
            if (header || !(words >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" || declared_vars < 0 ||
                declared_clauses < 0)
                throw ParseError("malformed 'p cnf' header", ln, 1);
            header = true;
            continue;
        }
        if (!header) throw ParseError("clause before 'p cnf' header", ln, 1);
        std::istringstream lits(line);
        std::string tok;
        while (lits >> tok) {
            long v = 0;
            try {
                std::size_t used = 0;
                v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + tok + "'", ln, 1);
            }
            if (v == 0) {
                if (current.empty()) throw ParseError("empty clause", ln, 1);
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(v) > declared_vars) throw ParseError("variable " + tok + " exceeds header count", ln, 1);
            current.push_back({Var("x" + std::to_string(std::labs(v))), v < 0 ? 1 : 0});
        }
    }
    if (!header) throw ParseError("missing 'p cnf' header", ln + 1, 1);
    if (!current.empty()) throw ParseError("last clause is not terminated by 0", ln, 1);
    if (static_cast<long>(phi.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(phi.clauses.size()),
                         ln, 1);
    return phi;
}

Instance encode_3sat(const CnfFormula& phi) {
    return encode(phi, 3,
                  exists_frac(Threshold::ratio(Rational(1, 3)),
                              conj(dep({Var("clause")}, {Var("literal")}), dep({Var("variable")}, {Var("parity")}))));
}

Instance encode_maxsat(const CnfFormula& phi, const Rational& frac) {
    if (frac < 0 || frac > 1) throw InputError("fraction " + to_string(frac) + " outside [0,1]");
    const Formula cl = dep({Var("clause")}, {Var("literal")});
    return encode(phi, 2,
                  disj(cl, conj(cl, exists_frac(Threshold::ratio(frac), dep({Var("variable")}, {Var("parity")})))));
}

bool sat_oracle(const CnfFormula& phi) { return maxsat_oracle(phi) == phi.clauses.size(); }

std::size_t maxsat_oracle(const CnfFormula& phi) {
    const auto vars = oracle_vars(phi);
    std::size_t best = 0;
    for (unsigned long bits = 0; bits < (1ul << vars.size()); ++bits) best = std::max(best, satisfied(phi, vars, bits));
    return best;
}

}  // namespace mteam
