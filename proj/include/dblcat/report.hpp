#pragma once

#include <set>
#include <string>
#include <vector>

namespace dblcat {

/// One failed axiom instance. `witness` holds cell names in the order the
/// axiom quantifies over them.
struct Violation {
    std::string family;
    std::vector<std::string> witness;
    std::string detail;

    auto operator<=>(const Violation&) const = default;
};

/// Accumulated violations. Never aborts early; `finish()` sorts so reports
/// are independent of traversal order.
class ValidationReport {
public:
    void add(std::string family, std::vector<std::string> witness, std::string detail = {});
    void merge(const ValidationReport& other);
    void finish();

    bool ok() const { return violations_.empty(); }
    std::size_t size() const { return violations_.size(); }
    const std::vector<Violation>& violations() const { return violations_; }
    std::set<std::string> families() const;
    bool has_family(const std::string& family) const;

private:
    std::vector<Violation> violations_;
};

}  // namespace dblcat
