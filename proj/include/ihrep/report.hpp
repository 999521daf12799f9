#pragma once

#include "ihrep/basis_cache.hpp"
#include "ihrep/ih_assembly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ihrep {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus status);

struct CheckRecord {
    std::string name;
    unsigned genus = 0;
    CheckStatus status = CheckStatus::skipped;
    /// Human-readable summary: what was compared, or the first mismatch.
    std::string details;
    std::optional<std::size_t> first_mismatch_degree;
};

struct VerificationReport {
    unsigned genus = 0;
    std::vector<CheckRecord> checks;
    /// Pass iff no check failed; skipped checks do not count against it.
    bool passed() const;
};

struct VerificationOptions {
    /// Truncation order for series checks; default_order(g) when unset.
    std::optional<std::size_t> order;
    /// Genus cap for checks that need Groebner bases.
    unsigned groebner_cap = kGroebnerGenusCap;
    /// Run independent checks on separate threads.
    bool concurrent = true;
};

/// Names of every check run by `verify`, in report order.
const std::vector<std::string>& verification_check_names();

/// Runs every cross-check at genus g; guarded checks are recorded as skipped.
/// The record order is fixed regardless of scheduling.
VerificationReport run_verification(unsigned g, const VerificationOptions& options, BasisCache& cache);

/// tanh(t)/t through t^order from the recursion T' = 1 - T^2 on T = tanh t,
/// used as the independent side of the b-series check.
std::vector<Rational> tanh_over_t_by_ode(std::size_t order);

}  // namespace ihrep
