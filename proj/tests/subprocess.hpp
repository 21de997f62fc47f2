#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, interleaved

  bool contains(const std::string& needle) const { return output.find(needle) != std::string::npos; }
};

// Runs `command` through the shell, merging stderr into the captured output.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  size_t n;
  while ((n = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

// Runs the scheme tool built alongside the tests.
inline CommandResult run_cli(const std::string& args) {
  return run_command(std::string("\"") + FMM_CLI_PATH + "\" " + args);
}

}  // namespace testutil
