#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mteam/numeric.hpp"
#include "mteam/symbol.hpp"

namespace mteam {

/// Values of one assignment, laid out in the column order of its team.
using Row = std::vector<Value>;

/// A total function from a finite set of variables to values.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::map<Var, Value> bindings) : bindings_(std::move(bindings)) {}

    const std::map<Var, Value>& bindings() const { return bindings_; }
    bool binds(const Var& x) const { return bindings_.count(x) != 0; }
    /// Throws InputError for unbound variables.
    const Value& operator[](const Var& x) const;
    /// s(a/x)
    Assignment updated(const Var& x, const Value& a) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;

private:
    std::map<Var, Value> bindings_;
};

/// A finite team of assignments over a common variable domain, paired with
/// a multiplicity per assignment.
///
/// The domain is kept sorted and the carrier rows are kept sorted and
/// distinct. Multiteams that only differ in multiplicities share one
/// immutable carrier, so splits and submultisets are cheap count vectors.
/// Rows of multiplicity zero are allowed; `operator==` ignores them.
class Multiteam {
public:
    /// Empty domain, no rows.
    Multiteam();
    /// The given domain, no rows.
    explicit Multiteam(std::vector<Var> vars);
    /// Rows are given in the column order of `vars`; duplicates are summed.
    Multiteam(std::vector<Var> vars, std::vector<std::pair<Row, Count>> rows);

    /// Every row with multiplicity 1.
    static Multiteam unit(std::vector<Var> vars, std::vector<Row> rows);
    /// The team {∅} with the given multiplicity.
    static Multiteam empty_assignment(Count multiplicity = 1);

    const std::vector<Var>& vars() const { return carrier_->vars; }
    std::size_t width() const { return carrier_->vars.size(); }
    std::size_t row_count() const { return carrier_->rows.size(); }
    const Row& row(std::size_t i) const { return carrier_->rows[i]; }
    const std::vector<Row>& rows() const { return carrier_->rows; }
    const Count& count(std::size_t i) const { return counts_[i]; }
    const std::vector<Count>& counts() const { return counts_; }

    bool has_var(const Var& x) const { return column(x).has_value(); }
    std::optional<std::size_t> column(const Var& x) const;
    /// Throws InputError when `x` is not in the domain.
    std::size_t column_of(const Var& x) const;

    /// |(X,m)|, the sum of all multiplicities.
    Count size() const;
    bool empty() const;
    /// Multiplicity of a row given in this team's column order (0 if absent).
    Count multiplicity(const Row& r) const;
    Count multiplicity(const Assignment& s) const;
    Assignment assignment(std::size_t i) const;

    bool shares_carrier(const Multiteam& other) const { return carrier_ == other.carrier_; }
    /// Same carrier, new multiplicities. `counts` must have row_count() entries.
    Multiteam with_counts(std::vector<Count> counts) const;
    /// Drops rows of multiplicity zero.
    Multiteam canonical() const;

    friend bool operator==(const Multiteam& a, const Multiteam& b);

private:
    struct Carrier {
        std::vector<Var> vars;
        std::vector<Row> rows;
    };
    Multiteam(std::shared_ptr<const Carrier> carrier, std::vector<Count> counts)
        : carrier_(std::move(carrier)), counts_(std::move(counts)) {}

    std::shared_ptr<const Carrier> carrier_;
    std::vector<Count> counts_;
};

/// Multiplicities add row by row. Both teams must have the same domain.
Multiteam disjoint_union(const Multiteam& a, const Multiteam& b);

/// (a ⊆ b) on canonical representatives. Teams over different domains are
/// never related, except that an empty team is below everything.
bool submset_leq(const Multiteam& a, const Multiteam& b);

/// (X,m)_{x̄=ā}: same carrier; rows with s(x̄) != ā get multiplicity 0.
Multiteam select(const Multiteam& t, const std::vector<Var>& vars, const Row& vals);

/// (X,m)↾V: restriction of every row to V, multiplicities summed over preimages.
Multiteam restrict(const Multiteam& t, const std::set<Var>& keep);

/// X⁺ with multiplicity 1 everywhere; zero rows are dropped.
Multiteam support(const Multiteam& t);

/// Like support, but rows of multiplicity zero stay in the carrier.
Multiteam weak_flattening(const Multiteam& t);

/// Pr(x̄ = ā) under p(s) = m(s)/|t|. Throws InputError on an empty team.
Rational prob(const Multiteam& t, const std::vector<Var>& vars, const Row& vals);

/// Column indices of `vars` in `t`, in order (repeats allowed).
std::vector<std::size_t> columns_of(const Multiteam& t, const std::vector<Var>& vars);

/// Values of `r` at the given columns.
Row project(const Row& r, const std::vector<std::size_t>& cols);

}  // namespace mteam
