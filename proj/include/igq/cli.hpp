#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain error.
namespace igq::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igq::cli
