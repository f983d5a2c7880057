#pragma once
// Command-line front end. Exposed as a library function so tests can drive
// full runs in-process.

#include <string>
#include <vector>

namespace constangle::cli {

// Exit codes: 0 success, 2 usage error, 3 domain/math/io error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

// Radians; the tokens pi, pi/2, pi/3, pi/4, pi/6 are accepted exactly,
// anything else must be a decimal literal.
double parse_angle(const std::string& token);

}  // namespace constangle::cli
