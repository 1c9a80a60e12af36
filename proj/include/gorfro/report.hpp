#pragma once

#include <string>

#include <json.hpp>

#include "gorfro/diagnostics.hpp"

namespace gorfro {

/// Betti data as [[p, q, beta], ...] plus the derived scalars.
nlohmann::json betti_json(const BettiTable& bt);

/// Report JSON; runtime_ms is rendered as 0 unless include_timings is set,
/// so that identical runs produce identical bytes.
nlohmann::json report_json(const ExampleReport& r, bool include_timings = false);

std::string report_text(const ExampleReport& r, bool include_timings = false);

/// 0 when all applicable theorem assertions hold, 1 otherwise.
int report_exit_code(const ExampleReport& r);

} // namespace gorfro
