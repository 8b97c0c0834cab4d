#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"

namespace cli {

struct OutputRecord {
  std::string target;  // file path, "-" for stdout, "<stderr>" for stderr
  std::string sha256;
  // Hash of the content with run-dependent fields (timings) blanked; replay
  // compares this one.
  std::string reproducible_sha256;
  std::size_t bytes = 0;
};

struct Io {
  Io(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  EnvLookup env = process_env();
  bool capture = false;  // keep outputs in memory instead of writing them
  bool write_manifest = true;
  std::vector<OutputRecord> outputs;
  std::map<std::string, std::string> captured;
};

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, Io& io);

}  // namespace cli
