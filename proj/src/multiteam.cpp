#include "mteam/multiteam.hpp"

#include <algorithm>
#include <numeric>

#include "mteam/error.hpp"

namespace mteam {

const Value& Assignment::operator[](const Var& x) const {
    auto it = bindings_.find(x);
    if (it == bindings_.end()) throw InputError("assignment does not bind '" + x.name() + "'");
    return it->second;
}

Assignment Assignment::updated(const Var& x, const Value& a) const {
    auto b = bindings_;
    b[x] = a;
    return Assignment(std::move(b));
}

Multiteam::Multiteam() : Multiteam(std::vector<Var>{}) {}

Multiteam::Multiteam(std::vector<Var> vars) : Multiteam(std::move(vars), {}) {}

Multiteam::Multiteam(std::vector<Var> vars, std::vector<std::pair<Row, Count>> rows) {
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (vars[order[i - 1]] == vars[order[i]])
            throw InputError("duplicate variable '" + vars[order[i]].name() + "' in team domain");

    auto carrier = std::make_shared<Carrier>();
    for (auto i : order) carrier->vars.push_back(vars[i]);

    for (auto& [r, m] : rows) {
        if (r.size() != vars.size())
            throw InputError("row has " + std::to_string(r.size()) + " values, domain has " +
                             std::to_string(vars.size()) + " variables");
        if (m < 0) throw InputError("negative multiplicity");
        Row sorted;
        sorted.reserve(r.size());
        for (auto i : order) sorted.push_back(r[i]);
        r = std::move(sorted);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Count> counts;
    for (auto& [r, m] : rows) {
        if (!carrier->rows.empty() && carrier->rows.back() == r) {
            counts.back() += m;
        } else {
            carrier->rows.push_back(std::move(r));
            counts.push_back(std::move(m));
        }
    }
    carrier_ = std::move(carrier);
    counts_ = std::move(counts);
}

Multiteam Multiteam::unit(std::vector<Var> vars, std::vector<Row> rows) {
    std::vector<std::pair<Row, Count>> entries;
    for (auto& r : rows) entries.emplace_back(std::move(r), 1);
    Multiteam t(std::move(vars), std::move(entries));
    for (auto& c : t.counts_) c = 1;
    return t;
}

Multiteam Multiteam::empty_assignment(Count multiplicity) {
    return Multiteam({}, {{Row{}, std::move(multiplicity)}});
}

std::optional<std::size_t> Multiteam::column(const Var& x) const {
    const auto& vs = carrier_->vars;
    auto it = std::lower_bound(vs.begin(), vs.end(), x);
    if (it == vs.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - vs.begin());
}

std::size_t Multiteam::column_of(const Var& x) const {
    auto c = column(x);
    if (!c) throw InputError("variable '" + x.name() + "' is not in the team domain");
    return *c;
}

Count Multiteam::size() const {
    Count total = 0;
    for (const auto& c : counts_) total += c;
    return total;
}

bool Multiteam::empty() const {
    return std::all_of(counts_.begin(), counts_.end(), [](const Count& c) { return c == 0; });
}

Count Multiteam::multiplicity(const Row& r) const {
    const auto& rows = carrier_->rows;
    auto it = std::lower_bound(rows.begin(), rows.end(), r);
    if (it == rows.end() || *it != r) return 0;
    return counts_[static_cast<std::size_t>(it - rows.begin())];
}

Count Multiteam::multiplicity(const Assignment& s) const {
    if (s.bindings().size() != width()) return 0;
    Row r;
    for (const auto& x : vars()) {
        if (!s.binds(x)) return 0;
        r.push_back(s[x]);
    }
    return multiplicity(r);
}

Assignment Multiteam::assignment(std::size_t i) const {
    std::map<Var, Value> b;
    for (std::size_t c = 0; c < width(); ++c) b.emplace(vars()[c], row(i)[c]);
    return Assignment(std::move(b));
}

Multiteam Multiteam::with_counts(std::vector<Count> counts) const {
    if (counts.size() != row_count()) throw InputError("count vector does not match carrier");
    return Multiteam(carrier_, std::move(counts));
}

Multiteam Multiteam::canonical() const {
    auto carrier = std::make_shared<Carrier>();
    carrier->vars = vars();
    std::vector<Count> counts;
    for (std::size_t i = 0; i < row_count(); ++i) {
        if (counts_[i] == 0) continue;
        carrier->rows.push_back(row(i));
        counts.push_back(counts_[i]);
    }
    return Multiteam(std::move(carrier), std::move(counts));
}

bool operator==(const Multiteam& a, const Multiteam& b) {
    return submset_leq(a, b) && submset_leq(b, a);
}

Multiteam disjoint_union(const Multiteam& a, const Multiteam& b) {
    if (a.vars() != b.vars()) throw InputError("disjoint union of teams over different domains");
    if (a.shares_carrier(b)) {
        std::vector<Count> counts = a.counts();
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += b.count(i);
        return a.with_counts(std::move(counts));
    }
    std::vector<std::pair<Row, Count>> rows;
    for (std::size_t i = 0; i < a.row_count(); ++i) rows.emplace_back(a.row(i), a.count(i));
    for (std::size_t i = 0; i < b.row_count(); ++i) rows.emplace_back(b.row(i), b.count(i));
    return Multiteam(a.vars(), std::move(rows));
}

bool submset_leq(const Multiteam& a, const Multiteam& b) {
    bool same_domain = a.vars() == b.vars();
    for (std::size_t i = 0; i < a.row_count(); ++i) {
        if (a.count(i) == 0) continue;
        if (!same_domain || a.count(i) > b.multiplicity(a.row(i))) return false;
    }
    return true;
}

std::vector<std::size_t> columns_of(const Multiteam& t, const std::vector<Var>& vars) {
    std::vector<std::size_t> cols;
    cols.reserve(vars.size());
    for (const auto& x : vars) cols.push_back(t.column_of(x));
    return cols;
}

Row project(const Row& r, const std::vector<std::size_t>& cols) {
    Row out;
    out.reserve(cols.size());
    for (auto c : cols) out.push_back(r[c]);
    return out;
}

Multiteam select(const Multiteam& t, const std::vector<Var>& vars, const Row& vals) {
    if (vars.size() != vals.size()) throw InputError("select: variable and value tuples differ in length");
    auto cols = columns_of(t, vars);
    std::vector<Count> counts(t.row_count());
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < cols.size() && match; ++k) match = t.row(i)[cols[k]] == vals[k];
        if (match) counts[i] = t.count(i);
    }
    return t.with_counts(std::move(counts));
}

Multiteam restrict(const Multiteam& t, const std::set<Var>& keep) {
    std::vector<Var> vars(keep.begin(), keep.end());
    auto cols = columns_of(t, vars);
    std::vector<std::pair<Row, Count>> rows;
    rows.reserve(t.row_count());
    for (std::size_t i = 0; i < t.row_count(); ++i) rows.emplace_back(project(t.row(i), cols), t.count(i));
    return Multiteam(std::move(vars), std::move(rows));
}

Multiteam weak_flattening(const Multiteam& t) {
    std::vector<Count> counts(t.row_count());
    for (std::size_t i = 0; i < t.row_count(); ++i) counts[i] = t.count(i) > 0 ? 1 : 0;
    return t.with_counts(std::move(counts));
}

Multiteam support(const Multiteam& t) { return weak_flattening(t).canonical(); }

Rational prob(const Multiteam& t, const std::vector<Var>& vars, const Row& vals) {
    Count total = t.size();
    if (total == 0) throw InputError("probability is undefined on an empty multiteam");
    return Rational(select(t, vars, vals).size(), total);
}

}  // namespace mteam
