#pragma once

#include "thl/config.hpp"
#include "thl/report.hpp"

#include <string>
#include <vector>

namespace thl {

const std::vector<std::string>& command_names();

// Runs one command (or "all") on a job. Input problems (unknown command or twist, invalid data)
// throw; failures of the computations themselves are recorded as failed checks.
Report run(const std::string& command, const JobConfig& job);

} // namespace thl
