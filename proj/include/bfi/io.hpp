#pragma once

#include <string>
#include <vector>

#include "bfi/axioms.hpp"
#include "bfi/model.hpp"

namespace bfi {

/// Named score rows sharing one scale.
struct AlternativesTable {
    std::vector<std::string> ids;
    std::vector<ScoreVector> rows;
};

Capacity load_capacity(const std::string& path);
BiCapacity load_bicapacity(const std::string& path);

Capacity parse_capacity(const std::string& text, const std::string& origin);
BiCapacity parse_bicapacity(const std::string& text, const std::string& origin);

/// Canonical form: entries sorted by (|pos|+|neg|, pos mask, neg mask),
/// boundary defaults omitted, shortest round-trip numbers.  save/load is
/// the identity on canonical files.
std::string serialize_capacity(const Capacity& mu);
std::string serialize_bicapacity(const BiCapacity& mb);

void save_capacity(const Capacity& mu, const std::string& path);
void save_bicapacity(const BiCapacity& mb, const std::string& path);

/// FNV-1a hash of the canonical serialization, rendered as hex.
std::string carrier_fingerprint(const std::string& canonical);

AlternativesTable load_alternatives(const std::string& path, const Interval& scale);
AlternativesTable parse_alternatives(const std::string& text, const Interval& scale,
                                     const std::string& origin);

/// One value per row, in input row order.  The parallel version fans rows
/// out across OpenMP threads and yields bit-identical output.
std::vector<double> score_batch_serial(const Aggregator& G, const AlternativesTable& table);
std::vector<double> score_batch_parallel(const Aggregator& G, const AlternativesTable& table);

/// Formats a value with 12 significant digits.
std::string format_value(double v);

struct RankedRow {
    int rank; // ties share the smaller rank
    std::string id;
    double value;
};

/// Rows sorted by descending value; ties keep input order and share a rank.
std::vector<RankedRow> rank_rows(const AlternativesTable& table,
                                 const std::vector<double>& values);

} // namespace bfi
