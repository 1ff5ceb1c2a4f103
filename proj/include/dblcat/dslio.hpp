#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dblcat/category.hpp"
#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/pasting.hpp"
#include "dblcat/psfunctor.hpp"
#include "dblcat/report.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

inline constexpr int schema_version = 1;

enum class DocKind { DoubleCategory, TwoCategory, Category, Psfunctor, Grid, MateRequest, Report };

std::string_view to_string(DocKind k);
/// Throws UnknownKind.
DocKind doc_kind(const std::string& name);

/// A checked document in canonical form. `body` carries "kind" and
/// "schema_version" alongside the kind-specific fields.
struct Document {
    DocKind kind;
    nlohmann::json body;

    bool operator==(const Document& other) const { return kind == other.kind && body == other.body; }
};

/// Syntax errors carry line and column; structural errors carry the JSON
/// pointer of the offending field. Throws ParseError, UnknownKind, DanglingId.
Document parse(const std::string& text);
std::string serialize(const Document& doc);

Document to_document(const DoubleCategory& d);
Document to_document(const TwoCategory& k);
Document to_document(const Category& c);
/// `domain` and `codomain` are either fixture names or inline documents.
Document to_document(const DoublePseudofunctor& f, const nlohmann::json& domain, const nlohmann::json& codomain);
/// Inlines both categories.
Document to_document(const DoublePseudofunctor& f);
Document grid_document(const DoubleCategory& d, const PastingGrid& g, const nlohmann::json& over);

DoubleCategory to_double_category(const Document& doc);
TwoCategory to_two_category(const Document& doc);
Category to_category(const Document& doc);
DoublePseudofunctor to_psfunctor(const Document& doc);

/// A double category reference: a fixture name or an inline document.
DoubleCategory resolve_double(const nlohmann::json& ref);

/// Rows may be ragged; PastingGrid::from_rows reports that.
struct GridRequest {
    std::shared_ptr<const DoubleCategory> over;
    std::vector<std::vector<SquareId>> rows;
};
GridRequest to_grid(const Document& doc);

struct MateRequest {
    enum class Mode { Companion, Conjunction, BaseChange };
    std::shared_ptr<const DoubleCategory> over;
    Mode mode = Mode::Companion;
    MateDirection direction = MateDirection::ToBeta;
    CompanionPair pf{}, pg{};
    Conjunction c1{}, c2{};
    SquareId cell{};
    std::optional<MateBoundary> boundary;
    std::optional<ConjMateBoundary> conj_boundary;
    BaseChangeSetup setup{};
    SquareId seed1{}, seed2{};
};
MateRequest to_mate_request(const Document& doc);

/// Report records produced by the CLI. `result` is command specific.
Document report_document(const std::string& command, const ValidationReport& report,
                         const nlohmann::json& result = nlohmann::json::object());

nlohmann::json encode(const DoubleCategory& d, const CompanionPair& p);
nlohmann::json encode(const DoubleCategory& d, const Conjunction& c);
nlohmann::json encode(const DoubleCategory& d, const MateTable& t);

}  // namespace dblcat
