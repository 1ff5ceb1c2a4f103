#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace dblcat {

/// Index into one of the cell arrays of a finite structure. Distinct tags keep
/// vertical arrows, horizontal arrows and squares from being mixed up.
template <class Tag>
struct Id {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const Id&) const = default;
    constexpr std::size_t index() const { return value; }
};

using ObjectId = Id<struct ObjectTag>;
using VArrowId = Id<struct VArrowTag>;
using HArrowId = Id<struct HArrowTag>;
using SquareId = Id<struct SquareTag>;

using OneCellId = Id<struct OneCellTag>;
using TwoCellId = Id<struct TwoCellTag>;

using ArrowId = Id<struct ArrowTag>;

template <class A, class B>
constexpr std::uint64_t pair_key(A a, B b) {
    return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
}

}  // namespace dblcat

template <class Tag>
struct std::hash<dblcat::Id<Tag>> {
    std::size_t operator()(const dblcat::Id<Tag>& id) const noexcept {
        return std::hash<std::uint32_t>{}(id.value);
    }
};
