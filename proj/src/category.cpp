#include "dblcat/category.hpp"

#include "dblcat/error.hpp"

namespace dblcat {

ArrowId Category::compose(ArrowId g, ArrowId f) const {
    if (arrow(f).tgt != arrow(g).src) {
        throw Error(ErrorKind::NotComposable,
                    arrows_.name(g) + " after " + arrows_.name(f));
    }
    if (auto r = compose_.get(f, g)) return *r;
    throw Error(ErrorKind::MissingEntry, arrows_.name(g) + " after " + arrows_.name(f));
}

ValidationReport Category::validate() const {
    ValidationReport report;
    auto n = [&](ArrowId a) { return arrows_.name(a); };
    const auto all = arrows_.ids();

    for (auto e : compose_.entries()) {
        const auto& f = arrow(e.first);
        const auto& g = arrow(e.second);
        const auto& r = arrow(e.result);
        if (f.tgt != g.src || r.src != f.src || r.tgt != g.tgt) {
            report.add("boundary", {n(e.first), n(e.second), n(e.result)});
        }
    }
    for (auto f : all) {
        for (auto g : all) {
            if (arrow(f).tgt != arrow(g).src) continue;
            if (!compose_.contains(f, g)) report.add("totality", {n(f), n(g)});
        }
    }
    for (auto f : all) {
        const auto& a = arrow(f);
        auto left = compose_.get(identity(a.src), f);
        auto right = compose_.get(f, identity(a.tgt));
        if (left != f || right != f) report.add("unit", {n(f)});
    }
    for (auto f : all) {
        for (auto g : all) {
            if (arrow(f).tgt != arrow(g).src) continue;
            auto gf = compose_.get(f, g);
            if (!gf) continue;
            for (auto h : all) {
                if (arrow(g).tgt != arrow(h).src) continue;
                auto hg = compose_.get(g, h);
                if (!hg) continue;
                auto lhs = compose_.get(*gf, h);
                auto rhs = compose_.get(f, *hg);
                if (lhs != rhs) report.add("associativity", {n(f), n(g), n(h)});
            }
        }
    }
    report.finish();
    return report;
}

ObjectId Category::Builder::add_object(std::string name) {
    auto id = cat_.objects_.add(std::move(name));
    cat_.identity_.push_back(ArrowId{});
    identity_.push_back(std::nullopt);
    return id;
}

ArrowId Category::Builder::add_arrow(std::string name, ObjectId src, ObjectId tgt) {
    if (!cat_.objects_.contains(src) || !cat_.objects_.contains(tgt)) {
        throw Error(ErrorKind::DanglingId, "arrow '" + name + "' has an unknown endpoint");
    }
    auto id = cat_.arrows_.add(std::move(name));
    cat_.arrow_data_.push_back({src, tgt});
    return id;
}

void Category::Builder::set_compose(ArrowId g, ArrowId f, ArrowId result) {
    cat_.compose_.set(f, g, result);
}

void Category::Builder::set_identity(ObjectId a, ArrowId id) {
    identity_.at(a.index()) = id;
}

Category Category::Builder::build() && {
    for (std::size_t i = 0; i < identity_.size(); ++i) {
        if (!identity_[i]) {
            throw Error(ErrorKind::Structure,
                        "object '" + cat_.objects_.name(ObjectId{static_cast<std::uint32_t>(i)}) +
                            "' has no identity arrow");
        }
        cat_.identity_[i] = *identity_[i];
    }
    return std::move(cat_);
}

}  // namespace dblcat
