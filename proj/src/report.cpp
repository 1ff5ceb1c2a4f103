#include "dblcat/error.hpp"
#include "dblcat/report.hpp"

#include <algorithm>

namespace dblcat {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotComposable: return "NotComposable";
        case ErrorKind::MissingEntry: return "MissingEntry";
        case ErrorKind::MalformedGrid: return "MalformedGrid";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::BoundaryNotFactorable: return "BoundaryNotFactorable";
        case ErrorKind::AmbiguousFactorization: return "AmbiguousFactorization";
        case ErrorKind::MismatchedVertical: return "MismatchedVertical";
        case ErrorKind::IncompatibleData: return "IncompatibleData";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::MissingInverse: return "MissingInverse";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::UnknownId: return "UnknownId";
        case ErrorKind::Structure: return "Structure";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownKind: return "UnknownKind";
        case ErrorKind::DanglingId: return "DanglingId";
    }
    return "Unknown";
}

void ValidationReport::add(std::string family, std::vector<std::string> witness, std::string detail) {
    violations_.push_back({std::move(family), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

void ValidationReport::finish() {
    std::sort(violations_.begin(), violations_.end());
    violations_.erase(std::unique(violations_.begin(), violations_.end()), violations_.end());
}

std::set<std::string> ValidationReport::families() const {
    std::set<std::string> out;
    for (const auto& v : violations_) out.insert(v.family);
    return out;
}

bool ValidationReport::has_family(const std::string& family) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.family == family; });
}

}  // namespace dblcat
