#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frs/io.hpp"
#include "frs/property_r.hpp"

namespace frs {

enum ExitCode : int { exit_ok = 0, exit_counterexample = 1, exit_input_error = 2, exit_inconclusive = 3 };

/// Reassembles the tuple described by a pair of presentation files: the source
/// system and a system produced by `letter-intro` or `large-sub`. A large-sub
/// source is prepared first when it is not already.
CandidateTuple load_tuple(const Presentation& s, const Presentation& t, std::size_t step_cap = kDefaultStepCap);

/// Entry point of the `frs` tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frs
