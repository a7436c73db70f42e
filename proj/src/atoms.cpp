#include "mteam/atoms.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "mteam/error.hpp"

namespace mteam {

namespace {

using Cols = std::vector<std::size_t>;

// Teams up to this many support rows use allocation-free pairwise scans.
constexpr std::size_t kPairwiseLimit = 32;

std::vector<std::size_t> support_rows(const Multiteam& t) {
    std::vector<std::size_t> rows;
    rows.reserve(t.row_count());
    for (std::size_t i = 0; i < t.row_count(); ++i)
        if (t.count(i) > 0) rows.push_back(i);
    return rows;
}

bool agree(const Row& a, const Cols& ca, const Row& b, const Cols& cb) {
    for (std::size_t k = 0; k < ca.size(); ++k)
        if (a[ca[k]] != b[cb[k]]) return false;
    return true;
}

void require_same_length(const Tuple& x, const Tuple& y, const char* atom) {
    if (x.size() != y.size())
        throw InputError(std::string(atom) + ": tuples have different lengths (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
}

// Distinct columns mentioned by the tuples, sorted.
Cols column_set(const Multiteam& t, std::initializer_list<const Tuple*> tuples) {
    Cols cols;
    for (const Tuple* tup : tuples)
        for (const auto& v : *tup) cols.push_back(t.column_of(v));
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

struct RowHash {
    std::size_t operator()(const Row& r) const noexcept {
        std::size_t h = r.size();
        for (const auto& v : r) h = h * 1000003u ^ std::hash<Value>{}(v);
        return h;
    }
};

}  // namespace

bool eval_dep(const Multiteam& t, const Tuple& x, const Tuple& y) {
    const Cols cx = columns_of(t, x), cy = columns_of(t, y);
    const auto rows = support_rows(t);
    if (rows.size() <= kPairwiseLimit) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                const Row& a = t.row(rows[i]);
                const Row& b = t.row(rows[j]);
                if (agree(a, cx, b, cx) && !agree(a, cy, b, cy)) return false;
            }
        return true;
    }
    std::unordered_map<Row, Row, RowHash> image;
    for (auto i : rows) {
        auto [it, fresh] = image.emplace(project(t.row(i), cx), project(t.row(i), cy));
        if (!fresh && it->second != project(t.row(i), cy)) return false;
    }
    return true;
}

bool eval_inc(const Multiteam& t, const Tuple& x, const Tuple& y) {
    require_same_length(x, y, "inc");
    const Cols cx = columns_of(t, x), cy = columns_of(t, y);
    const auto rows = support_rows(t);
    if (rows.size() <= kPairwiseLimit) {
        for (auto i : rows) {
            bool found = std::any_of(rows.begin(), rows.end(),
                                     [&](std::size_t j) { return agree(t.row(i), cx, t.row(j), cy); });
            if (!found) return false;
        }
        return true;
    }
    std::set<Row> ys;
    for (auto j : rows) ys.insert(project(t.row(j), cy));
    return std::all_of(rows.begin(), rows.end(), [&](std::size_t i) { return ys.count(project(t.row(i), cx)); });
}

bool eval_excl(const Multiteam& t, const Tuple& x, const Tuple& y) {
    require_same_length(x, y, "excl");
    const Cols cx = columns_of(t, x), cy = columns_of(t, y);
    const auto rows = support_rows(t);
    std::set<Row> ys;
    for (auto j : rows) ys.insert(project(t.row(j), cy));
    return std::none_of(rows.begin(), rows.end(), [&](std::size_t i) { return ys.count(project(t.row(i), cx)); });
}

bool eval_ci(const Multiteam& t, const Tuple& x, const Tuple& y, const Tuple& z) {
    const Cols cx = columns_of(t, x), cy = columns_of(t, y), cz = columns_of(t, z);
    const auto rows = support_rows(t);
    if (rows.size() <= kPairwiseLimit) {
        for (auto i : rows)
            for (auto j : rows) {
                const Row& s = t.row(i);
                const Row& s2 = t.row(j);
                if (!agree(s, cx, s2, cx)) continue;
                bool found = std::any_of(rows.begin(), rows.end(), [&](std::size_t k) {
                    const Row& s3 = t.row(k);
                    return agree(s3, cx, s, cx) && agree(s3, cy, s, cy) && agree(s3, cz, s2, cz);
                });
                if (!found) return false;
            }
        return true;
    }
    std::set<Row> triples;
    for (auto k : rows) {
        Row key = project(t.row(k), cx);
        for (auto c : cy) key.push_back(t.row(k)[c]);
        for (auto c : cz) key.push_back(t.row(k)[c]);
        triples.insert(std::move(key));
    }
    for (auto i : rows)
        for (auto j : rows) {
            if (!agree(t.row(i), cx, t.row(j), cx)) continue;
            Row key = project(t.row(i), cx);
            for (auto c : cy) key.push_back(t.row(i)[c]);
            for (auto c : cz) key.push_back(t.row(j)[c]);
            if (!triples.count(key)) return false;
        }
    return true;
}

bool eval_pinc(const Multiteam& t, const Tuple& x, const Tuple& y) {
    require_same_length(x, y, "pinc");
    const Cols cx = columns_of(t, x), cy = columns_of(t, y);
    const auto rows = support_rows(t);
    for (auto i : rows) {
        const Row& s = t.row(i);
        Count on_x = 0, on_y = 0;
        for (auto j : rows) {
            if (agree(t.row(j), cx, s, cx)) on_x += t.count(j);
            if (agree(t.row(j), cy, s, cx)) on_y += t.count(j);
        }
        if (on_x > on_y) return false;
    }
    return true;
}

bool eval_pci(const Multiteam& t, const Tuple& x, const Tuple& y, const Tuple& z) {
    const Cols vx = column_set(t, {&x});
    const Cols vxy = column_set(t, {&x, &y});
    const Cols vxz = column_set(t, {&x, &z});
    Cols shared;
    std::set_intersection(vxy.begin(), vxy.end(), vxz.begin(), vxz.end(), std::back_inserter(shared));

    const auto rows = support_rows(t);
    auto mass = [&](auto&& pred) {
        Count total = 0;
        for (auto k : rows)
            if (pred(t.row(k))) total += t.count(k);
        return total;
    };
    // s ranges over consistent merges of a realized x̄ȳ-part (row a) and a
    // realized x̄z̄-part (row b).
    for (auto a : rows) {
        const Row& ra = t.row(a);
        const Count on_xy = mass([&](const Row& r) { return agree(r, vxy, ra, vxy); });
        const Count on_x = mass([&](const Row& r) { return agree(r, vx, ra, vx); });
        for (auto b : rows) {
            const Row& rb = t.row(b);
            if (!agree(ra, shared, rb, shared)) continue;
            const Count on_xz = mass([&](const Row& r) { return agree(r, vxz, rb, vxz); });
            const Count on_xyz = mass([&](const Row& r) { return agree(r, vxy, ra, vxy) && agree(r, vxz, rb, vxz); });
            if (on_xy * on_xz != on_xyz * on_x) return false;
        }
    }
    return true;
}

bool eval_pci_as_dep(const Multiteam& t, const Tuple& x, const Tuple& y) { return eval_pci(t, x, y, y); }

}  // namespace mteam
