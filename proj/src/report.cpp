#include "turan/report.hpp"

#include <string>

namespace turan::report {

using nlohmann::json;

json partition_json(const Partition &partition)
{
    return json{{"parts", partition.parts}, {"pivots", partition.pivots}};
}

json trace_json(const CompressionTrace &trace, bool with_partition)
{
    json out{{"stage", std::string(to_string(trace.stage))},
             {"effective_k", trace.effective_k},
             {"rule1_parts", trace.rule1_parts},
             {"rule1_representatives", trace.rule1_representatives},
             {"rule2_removed", trace.rule2_removed.size()},
             {"ell_decrements", trace.ell_decrements}};
    if (trace.partition)
        out["part_count"] = trace.partition->part_count();
    if (trace.accounting) {
        const auto &acc = *trace.accounting;
        out["accounting"] = {{"kernel_vertices", acc.kernel_vertices},
                             {"touched", acc.touched},
                             {"added", acc.added},
                             {"removed", acc.removed},
                             {"bound", acc.bound}};
    }
    if (with_partition && trace.partition)
        out["partition"] = partition_json(*trace.partition);
    return out;
}

json compression_json(const TuranCliqueInstance &instance, const CliqueInstance &result, std::int64_t wall_ns,
                      bool with_partition)
{
    json output{{"verdict", std::string(to_string(result.verdict))},
                {"n", result.kernel.vertex_count()},
                {"m", result.kernel.edge_count()},
                {"ell", result.target}};
    if (!result.witness.empty())
        output["witness"] = result.witness;
    return json{{"schema", schema_version},
                {"input",
                 {{"n", instance.n()},
                  {"m", instance.m()},
                  {"r", instance.r()},
                  {"k", instance.k()},
                  {"ell", instance.ell()},
                  {"tau", instance.tau()},
                  {"xi", instance.xi()}}},
                {"output", output},
                {"trace", trace_json(result.trace, with_partition)},
                {"wall_ns", wall_ns}};
}

json decision_json(const Decision &decision, bool with_partition, bool with_trace)
{
    json out{{"schema", schema_version},
             {"answer", decision.yes ? "yes" : "no"},
             {"target", decision.target},
             {"stats",
              {{"nodes", decision.stats.nodes},
               {"wall_ns", decision.stats.wall_ns},
               {"compress_ns", decision.stats.compress_ns},
               {"kernel_vertices", decision.stats.kernel_vertices},
               {"shifted", decision.stats.shifted}}}};
    if (decision.yes)
        out["witness"] = decision.witness;
    if (decision.compression) {
        out["verdict"] = std::string(to_string(decision.compression->verdict));
        if (with_trace)
            out["trace"] = trace_json(decision.compression->trace, with_partition);
        else if (with_partition && decision.compression->trace.partition)
            out["partition"] = partition_json(*decision.compression->trace.partition);
    }
    return out;
}

json generated_json(const GeneratedInstance &generated)
{
    json params = json::object();
    for (const auto &[name, value] : generated.params)
        params[name] = value;
    const auto &inst = generated.instance;
    json out{{"schema", schema_version},
             {"family", generated.family},
             {"params", params},
             {"instance", {{"n", inst.n()}, {"m", inst.m()}, {"r", inst.r()}, {"k", inst.k()}, {"ell", inst.ell()}}}};
    out["seed"] = generated.seed ? json(*generated.seed) : json(nullptr);
    if (generated.known_answer)
        out["known_answer"] = *generated.known_answer ? "yes" : "no";
    if (!generated.witness.empty())
        out["witness"] = generated.witness;
    return out;
}

} // namespace turan::report
