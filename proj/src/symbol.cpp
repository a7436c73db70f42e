#include "mteam/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace mteam::detail {

const std::string* intern(std::string_view text) {
    // Node-based set: element addresses survive rehashing.
    static std::mutex mutex;
    static std::unordered_set<std::string> table;
    std::lock_guard lock(mutex);
    return &*table.emplace(text).first;
}

}  // namespace mteam::detail
