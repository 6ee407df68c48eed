#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdeform/catalog.hpp"
#include "tdeform/report.hpp"

namespace tdeform {

/// One checkable identity. Every pair returned by sides() must agree; the builder is re-run with
/// reduction switched off for the numeric oracle.
struct Identity {
    std::string id;
    std::string anchor;
    std::function<std::vector<Sides>()> sides;
};

/// Structural checks (degree bookkeeping and the like) that have no numeric counterpart.
using Batch = std::function<CheckReport()>;

struct Suite {
    std::string name;
    std::vector<Identity> identities;
    std::vector<Batch> batches;
};

struct RunOptions {
    unsigned jobs = 1;
    bool trace = false;
    std::optional<Rational> numeric;  ///< theta parameter for the oracle
    int numeric_points = 2;
    double numeric_tolerance = 1e-6;
    std::uint64_t seed = 0x5eed;
};

/// Suites runnable on an entry, in a fixed order.
std::vector<std::string> list_suites(const CatalogEntry& e);
/// Suites of a catalog entry by name ("su2", "so-theta"); empty when the name is unknown.
std::vector<std::string> list_suites(const std::string& entry_name);
/// Throws std::invalid_argument for an unknown suite.
Suite make_suite(const CatalogEntry& e, const std::string& name);

/// Runs every identity, optionally in parallel. Items come back sorted by id, so the report does
/// not depend on the worker count.
CheckReport run_suite(const CatalogEntry& e, const Suite& s, const RunOptions& o);

/// Largest |lhs - rhs| over random classical points, with balanced tensors moved by chi first.
double numeric_difference(const CatalogEntry& e, const Sides& s, const ThetaMatrix& theta, std::mt19937_64& rng,
                          int points);

}  // namespace tdeform
