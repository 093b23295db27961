// herglotz-lab command line: eval, verify, asym.
#pragma once

#include "hz/common.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hz {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_config = 2 };

// "1.5", "-2", "0.5+1.5i", "3-2i", "2i", "i". Throws DomainError.
cplx parse_cplx(const std::string& s);
// Comma-separated already split by the parser; rejects empty entries.
std::vector<cplx> parse_cplx_list(const std::vector<std::string>& items, const char* what);

// Reads HERGLOTZ_LAB_CONFIG when --config is absent. Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hz
