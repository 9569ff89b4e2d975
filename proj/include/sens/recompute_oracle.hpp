#pragma once

#include <optional>

#include "sens/sensitivity_oracle.hpp"

namespace sens {

/// Answers every query by fresh searches on an edited copy of the original.
class RecomputeOracle : public SensitivityOracle {
public:
    explicit RecomputeOracle(Graph g) : original_(std::move(g)) {}

    std::string name() const override { return "recompute"; }
    bool supports(QueryKind) const override { return true; }
    std::optional<std::size_t> sensitivity() const override { return std::nullopt; }

    void apply(const UpdateBatch& batch) override {
        if (scratch_) {
            throw Error("apply called while a batch is active; roll back first");
        }
        eval_.reset();
        scratch_ = apply_batch(original_, batch);
    }

    Answer query(const Query& q) override {
        if (!eval_) {
            eval_.emplace(current());
        }
        return eval_->answer(q);
    }

    void rollback() override {
        if (eval_) {
            searches_ += eval_->searches();
        }
        eval_.reset();
        scratch_.reset();
    }

    const Graph& original() const noexcept { return original_; }
    /// The edited graph while a batch is active, else the original.
    const Graph& current() const noexcept { return scratch_ ? *scratch_ : original_; }
    bool active() const noexcept { return scratch_.has_value(); }
    std::size_t searches() const noexcept { return searches_ + (eval_ ? eval_->searches() : 0); }

private:
    Graph original_;
    std::optional<Graph> scratch_;
    std::optional<GraphEvaluator> eval_;
    std::size_t searches_ = 0;
};

}  // namespace sens
