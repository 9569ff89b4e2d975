#pragma once

#include <memory>

#include "sens/fault_ecc_oracle.hpp"
#include "sens/sensitivity_oracle.hpp"

namespace sens {

/// Exposes a built FaultEccOracle as a sensitivity-1, deletion-only oracle
/// for Ecc, Diameter and Radius queries. Answers are (1+eps)-approximate.
class FaultEccAdapter : public SensitivityOracle {
public:
    explicit FaultEccAdapter(std::shared_ptr<const FaultEccOracle> o) : o_(std::move(o)) {}

    std::string name() const override { return "fault-ecc"; }
    bool supports(QueryKind k) const override {
        return k == QueryKind::Ecc || k == QueryKind::Diameter || k == QueryKind::Radius;
    }
    std::optional<std::size_t> sensitivity() const override { return 1; }

    void apply(const UpdateBatch& batch) override {
        if (batch.size() > 1) {
            throw Error("fault-ecc oracle handles at most one deletion per batch");
        }
        failed_.reset();
        if (batch.empty()) {
            return;
        }
        const auto* del = std::get_if<DeleteOp>(&batch.ops.front());
        if (del == nullptr) {
            throw Error("fault-ecc oracle does not support insertions");
        }
        if (del->id >= o_->m()) {
            throw Error("unknown edge id " + std::to_string(del->id));
        }
        failed_ = del->id;
    }

    Answer query(const Query& q) override {
        switch (q.kind) {
            case QueryKind::Ecc:
                if (q.u >= o_->n()) {
                    throw Error("query vertex " + std::to_string(q.u) + " out of range");
                }
                return Answer{failed_ ? o_->query_ecc(q.u, *failed_) : o_->static_ecc(q.u)};
            case QueryKind::Diameter:
                return Answer{failed_ ? o_->query_diameter(*failed_) : o_->static_diameter()};
            case QueryKind::Radius:
                return Answer{failed_ ? o_->query_radius(*failed_) : o_->static_radius()};
            default:
                throw Error(std::string("fault-ecc oracle does not support query kind '") +
                            query_kind_name(q.kind) + "'");
        }
    }

    void rollback() override { failed_.reset(); }

private:
    std::shared_ptr<const FaultEccOracle> o_;
    std::optional<EdgeId> failed_;
};

}  // namespace sens
