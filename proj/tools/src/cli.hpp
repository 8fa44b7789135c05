#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace algstat::cli {

struct CliConfig {
  unsigned workers = 1;
  std::optional<std::uint64_t> degree_cap;
  std::string output;  // empty: stdout
  std::string format = "text";  // text | json
};

/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algstat::cli
