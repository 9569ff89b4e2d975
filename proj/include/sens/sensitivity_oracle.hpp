#pragma once

#include <optional>
#include <string>

#include "sens/update.hpp"

namespace sens {

/*
 * A data structure over a fixed original graph. apply() installs one batch
 * of edits on the original, queries see the edited graph, rollback() returns
 * to the original. Batches never accumulate.
 */
class SensitivityOracle {
public:
    virtual ~SensitivityOracle() = default;

    virtual std::string name() const = 0;
    virtual bool supports(QueryKind kind) const = 0;
    /// Largest batch accepted; nullopt means unbounded.
    virtual std::optional<std::size_t> sensitivity() const = 0;
    virtual void apply(const UpdateBatch& batch) = 0;
    virtual Answer query(const Query& q) = 0;
    virtual void rollback() = 0;
};

}  // namespace sens
