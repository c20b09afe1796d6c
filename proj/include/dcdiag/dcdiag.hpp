// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dcdiag/budget.hpp"
#include "dcdiag/closed_form.hpp"
#include "dcdiag/connectivity.hpp"
#include "dcdiag/dcell.hpp"
#include "dcdiag/diagnosability.hpp"
#include "dcdiag/diagnosis.hpp"
#include "dcdiag/graph.hpp"
#include "dcdiag/graph_io.hpp"
#include "dcdiag/permutation_graphs.hpp"
#include "dcdiag/reliability.hpp"
#include "dcdiag/report.hpp"
#include "dcdiag/theorem1.hpp"
#include "dcdiag/topology.hpp"
