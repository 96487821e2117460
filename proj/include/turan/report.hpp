#pragma once

#include <cstdint>

#include <json.hpp>

#include "turan/compression.hpp"
#include "turan/generators.hpp"
#include "turan/partition.hpp"
#include "turan/solver.hpp"

// JSON records printed by the command-line tool.
namespace turan::report {

inline constexpr int schema_version = 1;

nlohmann::json partition_json(const Partition &partition);
nlohmann::json trace_json(const CompressionTrace &trace, bool with_partition);
nlohmann::json compression_json(const TuranCliqueInstance &instance, const CliqueInstance &result,
                                std::int64_t wall_ns, bool with_partition);
nlohmann::json decision_json(const Decision &decision, bool with_partition, bool with_trace);
nlohmann::json generated_json(const GeneratedInstance &generated);

} // namespace turan::report
