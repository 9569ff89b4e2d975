#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sens/sensitivity_oracle.hpp"

namespace sens {

/// One batch update on the original gadget graph plus the queries asked after it.
/// The stage fires when any query's predicate holds.
struct Stage {
    std::string label;
    UpdateBatch batch;
    std::vector<Query> queries;
};

struct StageTrace {
    std::string label;
    bool fired = false;
    std::vector<Answer> answers;
    std::vector<bool> query_fired;
};

using Witness = std::vector<std::int64_t>;

/*
 * A gadget graph with its stage schedule. The source answer is "yes" as soon
 * as any stage fires and `default_answer` when none does (builders that
 * decide the instance while constructing it emit zero stages and set the
 * default). `witness` turns the first firing stage into a source-problem
 * certificate.
 */
struct GadgetInstance {
    std::string gadget;
    Graph graph;
    std::size_t sensitivity = 0;
    std::size_t source_size = 0;
    std::vector<Stage> stages;
    bool default_answer = false;
    std::function<Witness(std::size_t stage, const StageTrace&)> witness;
    std::function<Witness()> default_witness;

    std::size_t max_batch() const {
        std::size_t b = 0;
        for (const auto& s : stages) {
            b = std::max(b, s.batch.size());
        }
        return b;
    }
};

struct SourceAnswer {
    bool answer = false;
    std::optional<Witness> witness;
    std::optional<std::size_t> first_fired;
    std::vector<StageTrace> trace;

    std::vector<std::size_t> fired_stages() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < trace.size(); ++i) {
            if (trace[i].fired) {
                out.push_back(i);
            }
        }
        return out;
    }
};

struct RunOptions {
    /// Stop after the first firing stage instead of running the whole schedule.
    bool stop_at_first = false;
    /// Called after every rollback (tests use it to check the rollback law).
    std::function<void(std::size_t stage)> after_stage;
};

inline SourceAnswer run_gadget(const GadgetInstance& inst, SensitivityOracle& oracle, const RunOptions& opts = {}) {
    const auto limit = oracle.sensitivity();
    for (const auto& st : inst.stages) {
        if (limit && st.batch.size() > *limit) {
            throw Error("oracle '" + oracle.name() + "' has sensitivity " + std::to_string(*limit) + " but stage '" +
                        st.label + "' needs " + std::to_string(st.batch.size()));
        }
        for (const auto& q : st.queries) {
            if (!oracle.supports(q.kind)) {
                throw Error("oracle '" + oracle.name() + "' does not support query kind '" +
                            query_kind_name(q.kind) + "'");
            }
        }
    }
    SourceAnswer out;
    out.trace.reserve(inst.stages.size());
    for (std::size_t i = 0; i < inst.stages.size(); ++i) {
        const auto& st = inst.stages[i];
        StageTrace tr;
        tr.label = st.label;
        oracle.apply(st.batch);
        try {
            for (const auto& q : st.queries) {
                tr.answers.push_back(oracle.query(q));
                const bool hit = holds(q.pred, tr.answers.back());
                tr.query_fired.push_back(hit);
                tr.fired = tr.fired || hit;
            }
        } catch (...) {
            oracle.rollback();
            throw;
        }
        oracle.rollback();
        if (opts.after_stage) {
            opts.after_stage(i);
        }
        out.trace.push_back(std::move(tr));
        if (out.trace.back().fired && !out.first_fired) {
            out.first_fired = i;
            if (inst.witness) {
                out.witness = inst.witness(i, out.trace.back());
            }
            if (opts.stop_at_first) {
                break;
            }
        }
    }
    out.answer = out.first_fired ? true : inst.default_answer;
    if (!out.first_fired && out.answer && inst.default_witness) {
        out.witness = inst.default_witness();
    }
    return out;
}

}  // namespace sens
