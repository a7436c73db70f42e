#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace mteam {

namespace detail {
// Returns a pointer into a process-wide, append-only intern table.
// Pointers stay valid for the lifetime of the process.
const std::string* intern(std::string_view text);
}  // namespace detail

/// An interned name. Equality is pointer identity; ordering is
/// lexicographic on the underlying text so iteration is reproducible.
template <class Tag>
class Interned {
public:
    Interned() : text_(detail::intern("")) {}
    explicit Interned(std::string_view text) : text_(detail::intern(text)) {}

    const std::string& name() const { return *text_; }
    const void* id() const { return text_; }

    friend bool operator==(const Interned& a, const Interned& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const Interned& a, const Interned& b) {
        if (a.text_ == b.text_) return std::strong_ordering::equal;
        return a.text_->compare(*b.text_) < 0 ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }
    friend std::ostream& operator<<(std::ostream& os, const Interned& s) { return os << *s.text_; }

private:
    const std::string* text_;
};

using Value = Interned<struct ValueTag>;
using Var = Interned<struct VarTag>;

}  // namespace mteam

template <class Tag>
struct std::hash<mteam::Interned<Tag>> {
    std::size_t operator()(const mteam::Interned<Tag>& s) const noexcept {
        return std::hash<const void*>{}(s.id());
    }
};
