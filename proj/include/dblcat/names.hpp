#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dblcat/error.hpp"

namespace dblcat {

/// Interned names for one kind of cell. Ids are assigned in insertion order.
template <class IdT>
class NameTable {
public:
    IdT add(std::string name) {
        if (index_.contains(name)) {
            throw Error(ErrorKind::Structure, "duplicate id '" + name + "'");
        }
        IdT id{static_cast<std::uint32_t>(names_.size())};
        index_.emplace(name, id);
        names_.push_back(std::move(name));
        return id;
    }

    std::optional<IdT> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    IdT at(const std::string& name, std::string_view what) const {
        if (auto id = find(name)) return *id;
        throw Error(ErrorKind::UnknownId, std::string(what) + " '" + name + "' does not exist");
    }

    const std::string& name(IdT id) const { return names_.at(id.index()); }
    std::size_t size() const { return names_.size(); }
    bool contains(IdT id) const { return id.index() < names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<IdT> ids() const {
        std::vector<IdT> out;
        out.reserve(names_.size());
        for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(IdT{i});
        return out;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, IdT> index_;
};

}  // namespace dblcat
