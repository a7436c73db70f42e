#include "mteam/approx.hpp"

#include "mteam/error.hpp"

namespace mteam {

namespace {

void require_kind(const Threshold& p, ApproxKind kind) {
    if (kind == ApproxKind::Ratio && p.absolute)
        throw InputError("absolute threshold #" + to_string(p.value) + " used in ratio mode");
    if (kind == ApproxKind::Absolute && !p.absolute)
        throw InputError("ratio threshold " + to_string(p.value) + " used in absolute mode (write #k)");
    if (p.value < 0 || (!p.absolute && p.value > 1))
        throw InputError("threshold " + to_string(p.value) + " out of range");
}

}  // namespace

Count min_subteam_size(const Count& total, const Threshold& p, ApproxKind kind) {
    require_kind(p, kind);
    if (p.absolute) return numerator_of(p.value);
    const Count num = numerator_of(p.value), den = denominator_of(p.value);
    return (num * total + den - 1) / den;
}

bool meets_threshold(const Count& sub_size, const Count& total, const Threshold& p, ApproxKind kind) {
    require_kind(p, kind);
    if (p.absolute) return sub_size >= numerator_of(p.value);
    return sub_size * denominator_of(p.value) >= numerator_of(p.value) * total;
}

bool enum_bounded_submultisets(const Multiteam& t, const Count& min_size, const TeamVisitor& visit) {
    const std::size_t rows = t.row_count();
    // room[i]: the most that rows i.. can still contribute.
    std::vector<Count> room(rows + 1, 0);
    for (std::size_t i = rows; i-- > 0;) room[i] = room[i + 1] + t.count(i);
    if (room[0] < min_size) return false;

    std::vector<Count> cur(rows, 0);
    auto rec = [&](auto&& self, std::size_t i, const Count& sum) -> bool {
        if (i == rows) return !visit(t.with_counts(cur));
        Count c = min_size - sum - room[i + 1];
        if (c < 0) c = 0;
        for (; c <= t.count(i); ++c) {
            cur[i] = c;
            if (self(self, i + 1, sum + c)) return true;
        }
        cur[i] = 0;
        return false;
    };
    return rec(rec, 0, Count(0));
}

bool eval_exists_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                      const SemanticsConfig& cfg) {
    return evaluate(A, t, exists_frac(p, f), cfg);
}

bool eval_forall_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                      const SemanticsConfig& cfg) {
    return evaluate(A, t, forall_frac(p, f), cfg);
}

bool eval_impl_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                    const Formula& g, const SemanticsConfig& cfg) {
    return evaluate(A, t, impl_frac(p, f, g), cfg);
}

}  // namespace mteam
