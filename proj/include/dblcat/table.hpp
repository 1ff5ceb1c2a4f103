#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "dblcat/ids.hpp"

namespace dblcat {

/// Partial binary operation stored explicitly. Keys are (first operand,
/// second operand) in whatever order the owning structure documents.
template <class A, class B, class R>
class PairTable {
public:
    struct Entry {
        A first;
        B second;
        R result;
    };

    void set(A a, B b, R r) { map_[pair_key(a, b)] = r; }

    std::optional<R> get(A a, B b) const {
        auto it = map_.find(pair_key(a, b));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(A a, B b) const { return map_.contains(pair_key(a, b)); }
    std::size_t size() const { return map_.size(); }

    bool operator==(const PairTable&) const = default;

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        out.reserve(map_.size());
        for (const auto& [key, r] : map_) {
            out.push_back({A{static_cast<std::uint32_t>(key >> 32)},
                           B{static_cast<std::uint32_t>(key & 0xffffffffu)}, r});
        }
        std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
            return std::tie(x.first, x.second) < std::tie(y.first, y.second);
        });
        return out;
    }

private:
    std::unordered_map<std::uint64_t, R> map_;
};

}  // namespace dblcat
