#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xlmatch::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // usage, parse or parameter error
  kMissingCorpus = 2,
  kNoMappedTypes = 3,
  kSchemaMismatch = 4,  // matches and ground truth do not describe the same schema
};

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xlmatch::cli
