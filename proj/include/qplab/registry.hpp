#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qplab/recipe.hpp"
#include "qplab/series.hpp"

namespace qplab {

/// A left/right recipe pair claimed to agree coefficient-by-coefficient.
struct IdentityCase {
    std::string id;
    std::string description;
    /// The named result or classical formula the pair encodes.
    std::string source;
    RecipePtr lhs;
    RecipePtr rhs;
    std::size_t default_order = 60;
    /// Conventions and corrections applied relative to the literal statement.
    std::string notes;
    /// Registered to fail; proves the harness can detect a mismatch.
    bool negative_control = false;

    bool enumeration_backed() const;
};

enum class VerifyStatus { pass, mismatch, skipped };

struct IdentityReport {
    std::string id;
    std::size_t order_requested = 0;
    std::size_t order_checked = 0;
    bool clamped = false;
    VerifyStatus status = VerifyStatus::skipped;
    std::optional<Comparison::Mismatch> mismatch;
    std::string skip_reason;
    std::string notes;
    std::chrono::milliseconds elapsed{0};
    bool negative_control = false;

    /// Pass for ordinary cases; a detected mismatch for the negative control.
    bool as_expected() const;
};

class UnknownIdentity : public std::out_of_range {
public:
    explicit UnknownIdentity(const std::string& id) : std::out_of_range("unknown identity '" + id + "'") {}
};

struct VerifyOptions {
    /// Overrides each case's default order.
    std::optional<std::size_t> order;
    /// Enumeration-backed cases are clamped to this order.
    std::size_t enumeration_budget = kDefaultEnumerationBudget;
    /// Worker threads for verify_all; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// The built-in catalog, sorted by id.
const std::vector<IdentityCase>& list_identities();
const IdentityCase& find_identity(std::string_view id);

IdentityReport verify(const IdentityCase& c, const VerifyOptions& options = {});
IdentityReport verify(std::string_view id, const VerifyOptions& options = {});
std::vector<IdentityReport> verify_all(const VerifyOptions& options = {});

/// True when every report is as expected.
bool all_as_expected(const std::vector<IdentityReport>& reports);

std::string_view to_string(VerifyStatus s);

/// A literal reading of a statement that the catalog deliberately does not follow.
/// Each is expected to mismatch; its case's notes describe the adopted convention.
struct RejectedReading {
    std::string case_id;
    std::string description;
    RecipePtr lhs;
    RecipePtr rhs;
    std::size_t order = 20;
    /// Where the literal reading first fails.
    std::size_t expected_mismatch = 0;
};

const std::vector<RejectedReading>& rejected_readings();
/// Compares both sides of the literal reading at its own order.
Comparison check(const RejectedReading& r, const EvalContext& ctx = {});

}  // namespace qplab
