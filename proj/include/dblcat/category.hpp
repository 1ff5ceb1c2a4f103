#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/ids.hpp"
#include "dblcat/names.hpp"
#include "dblcat/report.hpp"
#include "dblcat/table.hpp"

namespace dblcat {

/// A finite ordinary category given by its composition table.
class Category {
public:
    class Builder;

    struct Arrow {
        ObjectId src;
        ObjectId tgt;
    };

    const NameTable<ObjectId>& objects() const { return objects_; }
    const NameTable<ArrowId>& arrows() const { return arrows_; }
    const Arrow& arrow(ArrowId a) const { return arrow_data_.at(a.index()); }

    /// g after f.
    ArrowId compose(ArrowId g, ArrowId f) const;
    ArrowId identity(ObjectId a) const { return identity_.at(a.index()); }

    /// Entries keyed (f, g) with f applied first.
    const PairTable<ArrowId, ArrowId, ArrowId>& compose_table() const { return compose_; }

    ValidationReport validate() const;

private:
    NameTable<ObjectId> objects_;
    NameTable<ArrowId> arrows_;
    std::vector<Arrow> arrow_data_;
    PairTable<ArrowId, ArrowId, ArrowId> compose_;
    std::vector<ArrowId> identity_;
};

class Category::Builder {
public:
    ObjectId add_object(std::string name);
    ArrowId add_arrow(std::string name, ObjectId src, ObjectId tgt);
    /// Records g∘f = result.
    void set_compose(ArrowId g, ArrowId f, ArrowId result);
    void set_identity(ObjectId a, ArrowId id);

    ObjectId object(const std::string& name) const { return cat_.objects_.at(name, "object"); }
    ArrowId arrow(const std::string& name) const { return cat_.arrows_.at(name, "arrow"); }

    Category build() &&;

private:
    Category cat_;
    std::vector<std::optional<ArrowId>> identity_;
};

}  // namespace dblcat
