#pragma once

#include "sens/brute.hpp"
#include "sens/fault_ecc_adapter.hpp"
#include "sens/fault_ecc_io.hpp"
#include "sens/fault_ecc_oracle.hpp"
#include "sens/gadget.hpp"
#include "sens/gadgets/negative_triangle.hpp"
#include "sens/gadgets/seth.hpp"
#include "sens/gadgets/triangle.hpp"
#include "sens/gadgets/umv.hpp"
#include "sens/graph.hpp"
#include "sens/graph_io.hpp"
#include "sens/harness/experiment.hpp"
#include "sens/harness/generators.hpp"
#include "sens/harness/rng.hpp"
#include "sens/precompute_all_oracle.hpp"
#include "sens/problems.hpp"
#include "sens/recompute_oracle.hpp"
#include "sens/replacement_oracle.hpp"
#include "sens/sensitivity_oracle.hpp"
#include "sens/shortest_paths.hpp"
#include "sens/sp_tree.hpp"
#include "sens/update.hpp"
